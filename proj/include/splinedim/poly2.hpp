#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rational.hpp"

namespace splinedim {

/// Exponent pair of x^a y^b.
struct Monomial {
    int a = 0;
    int b = 0;
    int degree() const noexcept { return a + b; }
    bool operator==(const Monomial&) const = default;
};

/// Graded order: total degree first, then descending power of x.
struct MonomialLess {
    bool operator()(const Monomial& l, const Monomial& r) const noexcept {
        if (l.degree() != r.degree()) return l.degree() < r.degree();
        return l.a > r.a;
    }
};

/// All monomials of total degree <= n in graded order.
inline std::vector<Monomial> monomials_upto(int n) {
    std::vector<Monomial> out;
    for (int k = 0; k <= n; ++k)
        for (int a = k; a >= 0; --a) out.push_back({a, k - a});
    return out;
}

/// Position of a monomial within monomials_upto(n) for any n >= its degree.
inline std::size_t monomial_index(const Monomial& m) {
    const int k = m.degree();
    return static_cast<std::size_t>(k * (k + 1) / 2 + (k - m.a));
}

inline std::size_t monomial_count(int n) { return n < 0 ? 0 : static_cast<std::size_t>((n + 1) * (n + 2) / 2); }

/// Affine map (x, y) -> (m11 x + m12 y + t1, m21 x + m22 y + t2).
struct AffineMap {
    Rational m11 = 1, m12 = 0, m21 = 0, m22 = 1;
    Rational t1 = 0, t2 = 0;

    Rational det() const { return m11 * m22 - m12 * m21; }

    static AffineMap translation(const Rational& dx, const Rational& dy) {
        AffineMap m;
        m.t1 = dx;
        m.t2 = dy;
        return m;
    }

    AffineMap inverse() const {
        Rational d = det();
        if (d == 0) throw SingularMap("affine map has zero determinant");
        AffineMap inv;
        inv.m11 = m22 / d;
        inv.m12 = -m12 / d;
        inv.m21 = -m21 / d;
        inv.m22 = m11 / d;
        inv.t1 = -(inv.m11 * t1 + inv.m12 * t2);
        inv.t2 = -(inv.m21 * t1 + inv.m22 * t2);
        return inv;
    }

    std::pair<Rational, Rational> apply(const Rational& x, const Rational& y) const {
        return {m11 * x + m12 * y + t1, m21 * x + m22 * y + t2};
    }
};

/// Sparse bivariate polynomial with exact coefficients. Zero coefficients
/// are never stored.
class Poly2 {
public:
    using Terms = std::map<Monomial, Rational, MonomialLess>;

    Poly2() = default;
    explicit Poly2(const Rational& c) { add_term({0, 0}, c); }

    static Poly2 x() { return monomial({1, 0}); }
    static Poly2 y() { return monomial({0, 1}); }
    static Poly2 monomial(const Monomial& m, const Rational& c = 1) {
        Poly2 p;
        p.add_term(m, c);
        return p;
    }
    /// a x + b y + c
    static Poly2 linear(const Rational& a, const Rational& b, const Rational& c) {
        Poly2 p;
        p.add_term({1, 0}, a);
        p.add_term({0, 1}, b);
        p.add_term({0, 0}, c);
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly2& operator+=(const Poly2& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly2& operator-=(const Poly2& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly2& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend Poly2 operator+(Poly2 l, const Poly2& r) { return l += r; }
    friend Poly2 operator-(Poly2 l, const Poly2& r) { return l -= r; }
    friend Poly2 operator-(Poly2 p) { return p *= Rational(-1); }
    friend Poly2 operator*(Poly2 p, const Rational& s) { return p *= s; }
    friend Poly2 operator*(const Rational& s, Poly2 p) { return p *= s; }
    friend Poly2 operator*(const Poly2& l, const Poly2& r) {
        Poly2 out;
        for (const auto& [ml, cl] : l.terms_)
            for (const auto& [mr, cr] : r.terms_) out.add_term({ml.a + mr.a, ml.b + mr.b}, cl * cr);
        return out;
    }
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }

    Poly2 pow(unsigned n) const {
        Poly2 result(Rational(1)), base = *this;
        while (n) {
            if (n & 1u) result *= base;
            n >>= 1u;
            if (n) base *= base;
        }
        return result;
    }

    Rational eval(const Rational& x, const Rational& y) const {
        Rational s = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < m.a; ++i) t *= x;
            for (int i = 0; i < m.b; ++i) t *= y;
            s += t;
        }
        return s;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << to_string(c);
            if (m.a) os << "*x^" << m.a;
            if (m.b) os << "*y^" << m.b;
        }
        return os.str();
    }

private:
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly2& p) { return os << p.str(); }

/// Sum of the monomials of p whose total degree is exactly k.
inline Poly2 homogeneous_component(const Poly2& p, int k) {
    Poly2 out;
    for (const auto& [m, c] : p.terms())
        if (m.degree() == k) out.add_term(m, c);
    return out;
}

/// p(map(x, y)).
inline Poly2 substitute_affine(const Poly2& p, const AffineMap& map) {
    if (map.det() == 0) throw SingularMap("affine map has zero determinant");
    const Poly2 X = Poly2::linear(map.m11, map.m12, map.t1);
    const Poly2 Y = Poly2::linear(map.m21, map.m22, map.t2);
    const int n = p.degree();
    if (n < 0) return {};
    std::vector<Poly2> xp{Poly2(Rational(1))}, yp{Poly2(Rational(1))};
    for (int i = 1; i <= n; ++i) {
        xp.push_back(xp.back() * X);
        yp.push_back(yp.back() * Y);
    }
    Poly2 out;
    for (const auto& [m, c] : p.terms()) out += (xp[m.a] * yp[m.b]) * c;
    return out;
}

} // namespace splinedim
