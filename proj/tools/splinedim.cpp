#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <splinedim/splinedim.hpp>

namespace sd = splinedim;
using nlohmann::ordered_json;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitConsistency = 4;

// Raised for disagreements between independent computations.
struct ConsistencyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool verbose() {
    const char* v = std::getenv("SPLINEDIM_VERBOSE");
    return v && *v && std::string(v) != "0";
}

struct Timer {
    std::string label;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~Timer() {
        if (!verbose()) return;
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "[splinedim] " << label << ": " << ms << " ms\n";
    }
};

struct SpecArgs {
    std::string path;
    int d = -1;
    int mu = -1;
    sd::SplineSpec spec() const {
        sd::SplineSpec s{d, mu};
        s.validate();
        return s;
    }
};

void add_spec_flags(CLI::App* cmd, SpecArgs& a, bool need_path = true) {
    auto* p = cmd->add_option("-p,--partition", a.path, "partition JSON file");
    if (need_path) p->required();
    cmd->add_option("-d,--degree", a.d, "polynomial degree d")->required();
    cmd->add_option("-m,--mu", a.mu, "smoothness order mu")->required();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sd::ParseError("cannot write '" + path + "'");
    out << text;
    if (!out) throw sd::ParseError("write failed for '" + path + "'");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
}

int cmd_dim(const SpecArgs& a, const std::string& method, const std::string& format, bool dump_matrix) {
    const auto spec = a.spec();
    const auto p = sd::load_partition_file(a.path);
    Timer t{"dim"};

    std::optional<sd::DimensionReport> general, disjoint;
    if (method == "general" || method == "both") general = sd::dimension_general(p, spec);
    if (method == "disjoint" || method == "both") disjoint = sd::dimension_disjoint(p, spec);
    if (general && disjoint && general->dimension != disjoint->dimension)
        throw ConsistencyFailure("general method gives " + std::to_string(general->dimension) +
                                 ", disjoint method gives " + std::to_string(disjoint->dimension));
    const auto& rep = general ? *general : *disjoint;

    if (format == "json") {
        auto j = sd::report_to_json(rep);
        if (general && disjoint) j["method"] = "both";
        if (dump_matrix) j["matrixEntries"] = sd::matrix_to_json(sd::assemble_conformality_matrix(p, spec).matrix);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << sd::report_to_text(rep);
        if (general && disjoint) std::cout << "  disjoint method agrees: " << disjoint->dimension << "\n";
        if (dump_matrix) std::cout << sd::matrix_to_json(sd::assemble_conformality_matrix(p, spec).matrix).dump() << "\n";
    }
    return 0;
}

int cmd_bound(const SpecArgs& a) {
    const auto spec = a.spec();
    const auto p = sd::load_partition_file(a.path);
    std::cout << sd::schumaker_lower_bound(p, spec) << "\n";
    return 0;
}

int cmd_oracle(const SpecArgs& a, const std::string& format) {
    const auto spec = a.spec();
    const auto p = sd::load_partition_file(a.path);
    Timer t{"oracle"};
    const auto res = sd::oracle_run(p, spec);
    for (const auto& w : res.warnings) std::cerr << w << "\n";
    if (format == "json") {
        ordered_json j{{"spec", {{"d", spec.d}, {"mu", spec.mu}}},
                       {"cells", res.cells},
                       {"unknowns", res.unknowns},
                       {"constraintRows", res.constraint_rows},
                       {"rank", res.rank},
                       {"dimension", res.dimension}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << res.dimension << "\n";
    }
    return 0;
}

ordered_json verify_one(const sd::Partition& p, const sd::SplineSpec& spec, bool& agree) {
    const auto rep = sd::dimension_general(p, spec);
    const auto orc = sd::oracle_run(p, spec);
    if (verbose())
        for (const auto& w : orc.warnings) std::cerr << w << "\n";
    agree = rep.dimension == orc.dimension;
    ordered_json j;
    if (p.name()) j["name"] = *p.name();
    j["spec"] = {{"d", spec.d}, {"mu", spec.mu}};
    j["dimension"] = rep.dimension;
    j["oracle"] = orc.dimension;
    j["matrix"] = {{"rows", rep.matrix_rows}, {"cols", rep.matrix_cols}, {"rank", rep.rank}};
    j["lowerBound"] = rep.lower_bound;
    j["agree"] = agree;
    if (p.name()) {
        if (auto ref = sd::reference_value(*p.name(), spec)) {
            j["referenceValue"] = *ref;
            j["referenceAgrees"] = (*ref == rep.dimension);
        }
    }
    return j;
}

std::string verify_line(const ordered_json& j) {
    std::ostringstream os;
    os << (j["agree"].get<bool>() ? "ok  " : "FAIL") << "  " << j.value("name", std::string("(unnamed)"))
       << "  d=" << j["spec"]["d"] << " mu=" << j["spec"]["mu"] << "  formula=" << j["dimension"]
       << " oracle=" << j["oracle"] << "  M " << j["matrix"]["rows"] << "x" << j["matrix"]["cols"] << " rank "
       << j["matrix"]["rank"];
    if (j.contains("referenceValue"))
        os << "  reference=" << j["referenceValue"]
           << (j["referenceAgrees"].get<bool>() ? " (agrees)" : " (DISCREPANCY with reference)");
    return os.str();
}

int cmd_verify(const SpecArgs& a, int random_n, std::uint64_t seed, int lines, const std::string& format) {
    const auto spec = a.spec();
    if (a.path.empty() == (random_n <= 0))
        throw sd::DomainError("verify needs exactly one of --partition or --random N");
    Timer t{"verify"};

    std::vector<ordered_json> cases;
    int failures = 0;
    if (!a.path.empty()) {
        const auto p = sd::load_partition_file(a.path);
        bool ok = false;
        cases.push_back(verify_one(p, spec, ok));
        if (!ok) {
            ++failures;
            std::cerr << sd::serialize_partition(p);
        }
    } else {
        for (int i = 0; i < random_n; ++i) {
            const int l = lines >= 0 ? lines : 1 + i % 6;
            const auto p = sd::random_quasi_crosscut(seed + static_cast<std::uint64_t>(i), l);
            bool ok = false;
            cases.push_back(verify_one(p, spec, ok));
            if (!ok) {
                ++failures;
                std::cerr << sd::serialize_partition(p);
            }
        }
    }

    const int agreed = static_cast<int>(cases.size()) - failures;
    if (format == "json") {
        ordered_json j{{"cases", cases}, {"agreements", agreed}, {"total", cases.size()}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : cases) std::cout << verify_line(c) << "\n";
        std::cout << agreed << "/" << cases.size() << " agreements\n";
    }
    return failures == 0 ? 0 : kExitConsistency;
}

int cmd_render(const std::string& path, const std::string& out, bool te, bool labels) {
    const auto p = sd::load_partition_file(path);
    emit(sd::render_svg(p, {te, labels}), out);
    return 0;
}

int cmd_gallery_emit(const std::string& name, const sd::GalleryOptions& opt, const std::string& out) {
    emit(sd::serialize_partition(sd::gallery_emit(name, opt)), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dimension of bivariate C^mu spline spaces on rectilinear partitions", "splinedim"};
    app.require_subcommand(1);

    SpecArgs dim_args, bound_args, oracle_args, verify_args;
    std::string method = "general", report = "json", oracle_report = "text", verify_report = "text";
    bool dump_matrix = false;

    auto* dim = app.add_subcommand("dim", "compute dim S_d^mu");
    add_spec_flags(dim, dim_args);
    dim->add_option("--method", method, "general | disjoint | both")
        ->check(CLI::IsMember({"general", "disjoint", "both"}));
    dim->add_option("--report", report, "json | text")->check(CLI::IsMember({"json", "text"}));
    dim->add_flag("--dump-matrix", dump_matrix, "include the conformality matrix entries");

    auto* bound = app.add_subcommand("bound", "lower bound from vertex and edge counts");
    add_spec_flags(bound, bound_args);

    auto* oracle = app.add_subcommand("oracle", "brute-force dimension from per-cell coefficients");
    add_spec_flags(oracle, oracle_args);
    oracle->add_option("--report", oracle_report, "json | text")->check(CLI::IsMember({"json", "text"}));

    int random_n = 0, lines = -1;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "compare the formula against the oracle");
    add_spec_flags(verify, verify_args, false);
    verify->add_option("--random", random_n, "number of random quasi-cross-cut partitions")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "base seed for --random");
    verify->add_option("--lines", lines, "lines per random partition (default cycles 1..6)")
        ->check(CLI::Range(0, 6));
    verify->add_option("--report", verify_report, "json | text")->check(CLI::IsMember({"json", "text"}));

    std::string render_path, render_out;
    bool highlight = false, labels = false;
    auto* render = app.add_subcommand("render", "write an SVG drawing");
    render->add_option("-p,--partition", render_path, "partition JSON file")->required();
    render->add_option("-o,--out", render_out, "output path (stdout if omitted)");
    render->add_flag("--highlight-te", highlight, "stroke truncated l-edges in a distinct colour");
    render->add_flag("--labels", labels, "label vertices with their indices");

    auto* gallery = app.add_subcommand("gallery", "built-in partitions");
    gallery->require_subcommand(1);
    auto* glist = gallery->add_subcommand("list", "list generator names");
    std::string gname, gout;
    sd::GalleryOptions gopt;
    auto* gemit = gallery->add_subcommand("emit", "write a gallery partition");
    gemit->add_option("name", gname, "generator name")->required();
    gemit->add_option("--out", gout, "output path (stdout if omitted)");
    gemit->add_option("--variant", gopt.variant, "morgan_scott: symmetric | generic");
    gemit->add_option("--seed", gopt.seed, "random_quasi_crosscut seed");
    gemit->add_option("--lines", gopt.lines, "random_quasi_crosscut line count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*dim) return cmd_dim(dim_args, method, report, dump_matrix);
        if (*bound) return cmd_bound(bound_args);
        if (*oracle) return cmd_oracle(oracle_args, oracle_report);
        if (*verify) return cmd_verify(verify_args, random_n, seed, lines, verify_report);
        if (*render) return cmd_render(render_path, render_out, highlight, labels);
        if (*glist) {
            for (const auto& n : sd::gallery_names()) std::cout << n << "\n";
            return 0;
        }
        if (*gemit) return cmd_gallery_emit(gname, gopt, gout);
    } catch (const sd::PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const ConsistencyFailure& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return kExitConsistency;
    } catch (const sd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
