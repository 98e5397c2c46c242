#pragma once

#include "gwdt/polynomial.hpp"

#include <initializer_list>
#include <map>
#include <string>

namespace gwdt {

/// Rational function in t0,t1,t2: a MultiPoly numerator over a product of
/// powers of normalized integer linear forms. Always stored reduced (no
/// denominator form divides the numerator), which makes the representation
/// canonical: structural equality coincides with value equality.
class RatFunc {
public:
    using DenMap = std::map<LinForm, int>;  // form -> exponent (> 0)

    RatFunc() = default;  // zero
    RatFunc(long n) : num_(n) {}  // NOLINT
    explicit RatFunc(GaussRat c) : num_(std::move(c)) {}
    explicit RatFunc(MultiPoly num) : num_(std::move(num)) {}
    RatFunc(MultiPoly num, DenMap den);

    /// f^e for a raw (unnormalized) form given by coefficients; negative e
    /// puts the factor in the denominator.
    static RatFunc form_power(long i, long j, long l, int e);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.empty() && num_.is_constant() && num_.constant_value().is_one(); }
    const MultiPoly& numerator() const { return num_; }
    const DenMap& denominator() const { return den_; }
    bool denominator_empty() const { return den_.empty(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    /// Multiplicative inverse. Requires the numerator to factor into a scalar
    /// times a product of integer linear forms (the only shape this
    /// representation can put in a denominator); signals std::domain_error
    /// otherwise, and on zero.
    RatFunc inverse() const;
    RatFunc pow(int n) const;

    /// Value equality by cross-multiplied polynomial comparison.
    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Throws std::domain_error if a denominator form vanishes at t.
    GaussRat eval(const EvalPoint& t) const;

    /// Numerator degree minus denominator degree when the numerator is
    /// homogeneous; nullopt otherwise (and for zero).
    std::optional<int> homogeneous_degree() const;

    RatFunc swap12() const;

    /// Canonical rendering; with a denominator: "(num) / (f1)^e1*(f2)".
    std::string str() const;

private:
    void reduce();
    MultiPoly den_poly() const;

    MultiPoly num_;
    DenMap den_;
};

/// True when r.str() needs parentheses inside a larger expression
/// (denominator present, several terms, variables, or a full complex scalar).
bool render_parenthesized(const RatFunc& r);

/// a + b*[p] with [p]^2 = 0: the coefficient ring for Euler classes over the
/// fixed curve, where [p] is the class of a point.
struct DualP {
    RatFunc a, b;

    DualP() = default;
    explicit DualP(RatFunc a_) : a(std::move(a_)) {}
    DualP(RatFunc a_, RatFunc b_) : a(std::move(a_)), b(std::move(b_)) {}

    static DualP one() { return DualP(RatFunc(1)); }

    DualP operator*(const DualP& o) const { return {a * o.a, a * o.b + b * o.a}; }
    DualP operator+(const DualP& o) const { return {a + o.a, b + o.b}; }
    DualP operator-(const DualP& o) const { return {a - o.a, b - o.b}; }

    /// (a + b[p])^-1 = a^-1 - a^-2 b [p]; requires a != 0.
    DualP inverse() const;
    DualP pow(int n) const;

    friend bool operator==(const DualP& x, const DualP& y)
    {
        return x.a == y.a && x.b == y.b;
    }

    std::string str() const { return "(" + a.str() + ") + (" + b.str() + ")*[p]"; }
};

}  // namespace gwdt
