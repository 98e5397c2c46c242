#pragma once

#include "gwdt/rational.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace gwdt {

/// Evaluation point (t0, t1, t2).
using EvalPoint = std::array<GaussRat, 3>;

/// Monomial exponents for t0^e0 * t1^e1 * t2^e2.
struct ExpTriple {
    int e0 = 0, e1 = 0, e2 = 0;

    int total() const { return e0 + e1 + e2; }
    ExpTriple operator+(const ExpTriple& o) const;

    friend auto operator<=>(const ExpTriple&, const ExpTriple&) = default;
};

/// Orders monomials lexicographically by (e0,e1,e2) descending; this is the
/// canonical term order used everywhere (storage, rendering, division).
struct LexDesc {
    bool operator()(const ExpTriple& a, const ExpTriple& b) const
    {
        return b < a;
    }
};

class MultiPoly;

/// Normalized integer linear form i*t0 + j*t1 + l*t2:
/// gcd(|i|,|j|,|l|) = 1 and the first nonzero coefficient is positive.
/// The sign/scale stripped off by normalize() is returned to the caller.
class LinForm {
public:
    static std::pair<LinForm, long> normalize(long i, long j, long l);

    int i() const { return c_[0]; }
    int j() const { return c_[1]; }
    int l() const { return c_[2]; }
    const std::array<int, 3>& coeffs() const { return c_; }

    MultiPoly poly() const;
    GaussRat eval(const EvalPoint& t) const;

    /// Image under t1 <-> t2, renormalized; second element is the sign (+-1)
    /// extracted by renormalization.
    std::pair<LinForm, int> swap12() const;

    friend auto operator<=>(const LinForm&, const LinForm&) = default;

    std::string str() const;

private:
    LinForm(int i, int j, int l) : c_{i, j, l} {}
    std::array<int, 3> c_;
};

/// Sparse polynomial in t0, t1, t2 with GaussRat coefficients.
/// Invariant: no stored zero coefficients.
class MultiPoly {
public:
    using Map = std::map<ExpTriple, GaussRat, LexDesc>;

    MultiPoly() = default;
    explicit MultiPoly(GaussRat c) { insert({}, std::move(c)); }
    explicit MultiPoly(long n) : MultiPoly(GaussRat(n)) {}

    static MultiPoly var(int which);  // t0, t1 or t2
    static MultiPoly monomial(ExpTriple e, GaussRat c);
    /// a*t0 + b*t1 + c*t2
    static MultiPoly linear(GaussRat a, GaussRat b, GaussRat c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    GaussRat constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    GaussRat coeff(const ExpTriple& e) const;

    /// Max total degree; -1 for the zero polynomial.
    int degree() const;
    /// Total degree shared by all terms, if the polynomial is homogeneous
    /// (zero polynomial reports nullopt).
    std::optional<int> homogeneous_degree() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const GaussRat& c) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        return a.terms_ == b.terms_;
    }

    /// Exact quotient by a linear form, or nullopt when not divisible.
    std::optional<MultiPoly> div_linform(const LinForm& f) const;

    GaussRat eval(const EvalPoint& t) const;

    /// Image under the substitution t1 <-> t2.
    MultiPoly swap12() const;

    /// Canonical rendering: terms in lex-descending order, coefficients as
    /// "a" / "bi" / "(a+bi)", exponents as t0^2*t1. The golden-file format.
    std::string str() const;

private:
    void insert(const ExpTriple& e, GaussRat c);
    Map terms_;
};

}  // namespace gwdt
