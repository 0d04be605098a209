#pragma once

#include <compare>
#include <utility>

#include "poly2.hpp"
#include "rational.hpp"

namespace splinedim {

struct Point {
    Rational x;
    Rational y;
    bool operator==(const Point&) const = default;
};

inline bool point_less(const Point& p, const Point& q) {
    if (p.x != q.x) return p.x < q.x;
    return p.y < q.y;
}

/// (q - p) x (r - p); positive when p, q, r turn counterclockwise.
inline Rational orient(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

/// Primitive integer normal (a, b) of a line direction; first nonzero entry
/// positive. Parallel lines share a key.
struct DirectionKey {
    Integer a;
    Integer b;
    bool operator==(const DirectionKey& o) const { return a == o.a && b == o.b; }
    bool operator<(const DirectionKey& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

/// alpha x + beta y + gamma0, stored in canonical form: coprime integers
/// with the first nonzero of (alpha, beta) positive.
class LinForm {
public:
    LinForm(const Rational& alpha, const Rational& beta, const Rational& gamma0)
        : alpha_(alpha), beta_(beta), gamma0_(gamma0) {
        if (alpha_ == 0 && beta_ == 0) throw DegenerateInput("line form with alpha = beta = 0");
        canonicalize();
    }

    /// Line through two distinct points.
    static LinForm through(const Point& p, const Point& q) {
        if (p == q) throw DegenerateInput("line through coincident points");
        Rational a = p.y - q.y;
        Rational b = q.x - p.x;
        Rational c = -(a * p.x + b * p.y);
        return LinForm(a, b, c);
    }

    const Rational& alpha() const noexcept { return alpha_; }
    const Rational& beta() const noexcept { return beta_; }
    const Rational& gamma0() const noexcept { return gamma0_; }

    Rational operator()(const Rational& x, const Rational& y) const { return alpha_ * x + beta_ * y + gamma0_; }
    Rational operator()(const Point& p) const { return (*this)(p.x, p.y); }

    Poly2 poly() const { return Poly2::linear(alpha_, beta_, gamma0_); }

    DirectionKey direction() const {
        Integer a = alpha_.get_num(), b = beta_.get_num();
        Integer g = gcd(a, b);
        return {a / g, b / g};
    }

    bool operator==(const LinForm& o) const {
        return alpha_ == o.alpha_ && beta_ == o.beta_ && gamma0_ == o.gamma0_;
    }
    bool operator<(const LinForm& o) const {
        if (alpha_ != o.alpha_) return alpha_ < o.alpha_;
        if (beta_ != o.beta_) return beta_ < o.beta_;
        return gamma0_ < o.gamma0_;
    }

private:
    void canonicalize() {
        Integer l = lcm(lcm(alpha_.get_den(), beta_.get_den()), gamma0_.get_den());
        Integer a = alpha_.get_num() * (l / alpha_.get_den());
        Integer b = beta_.get_num() * (l / beta_.get_den());
        Integer c = gamma0_.get_num() * (l / gamma0_.get_den());
        Integer g = gcd(gcd(a, b), c);
        a /= g;
        b /= g;
        c /= g;
        if (a < 0 || (a == 0 && b < 0)) {
            a = -a;
            b = -b;
            c = -c;
        }
        alpha_ = a;
        beta_ = b;
        gamma0_ = c;
    }

    Rational alpha_, beta_, gamma0_;
};

} // namespace splinedim
