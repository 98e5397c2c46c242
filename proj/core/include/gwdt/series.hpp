#pragma once

#include "gwdt/ratfunc.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>

namespace gwdt {

/// Exponent in (1/2)*Z, stored as twice its value so arithmetic stays exact.
struct HalfExp {
    long long twice = 0;

    static HalfExp whole(long long n) { return {2 * n}; }
    static HalfExp halves(long long n) { return {n}; }

    bool is_integer() const { return twice % 2 == 0; }

    HalfExp operator+(HalfExp o) const { return {twice + o.twice}; }
    HalfExp operator-(HalfExp o) const { return {twice - o.twice}; }
    HalfExp operator-() const { return {-twice}; }
    friend auto operator<=>(const HalfExp&, const HalfExp&) = default;

    /// "2", "-1", "1/2", "-3/2".
    std::string str() const
    {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

/// Truncated series in q with exponents in (1/2)*Z and RatFunc coefficients.
/// Exponents at or beyond trunc() are unknown, not zero; arithmetic
/// propagates truncation orders and never reports unknown coefficients.
class QSeries {
public:
    explicit QSeries(HalfExp trunc) : trunc_(trunc) {}

    static QSeries one(HalfExp trunc);
    static QSeries monomial(HalfExp e, RatFunc c, HalfExp trunc);

    HalfExp trunc() const { return trunc_; }
    const std::map<HalfExp, RatFunc>& terms() const { return t_; }
    bool known_zero() const { return t_.empty(); }

    /// Coefficient at e; throws std::out_of_range for e >= trunc().
    RatFunc coeff(HalfExp e) const;

    QSeries operator+(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries pow(int n) const;
    QSeries scaled(const RatFunc& c) const;
    QSeries shifted(HalfExp d) const;

    /// Lowest stored exponent and its coefficient; throws std::domain_error
    /// when the series is zero up to its truncation order.
    std::pair<HalfExp, RatFunc> leading_term() const;

    /// True when the two series have identical coefficients strictly below
    /// the smaller truncation order.
    bool agrees_with(const QSeries& o) const;

    /// "c1 * q^(e1) + ... + O(q^(T))".
    std::string str() const;

private:
    void insert(HalfExp e, RatFunc c);
    HalfExp order_or_trunc() const { return t_.empty() ? trunc_ : t_.begin()->first; }

    std::map<HalfExp, RatFunc> t_;
    HalfExp trunc_;
};

/// M(q)^exponent (or M(-q)^exponent when negate_q) truncated at trunc,
/// where M(q) = prod_{n>=1} (1 - q^n)^(-n). Requires trunc >= 0.
QSeries mcmahon(HalfExp trunc, int exponent, bool negate_q);

}  // namespace gwdt
