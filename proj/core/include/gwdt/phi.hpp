#pragma once

#include "gwdt/series.hpp"

#include <map>
#include <string>

namespace gwdt {

/// Exact Laurent polynomial in phi = 2*sin(u/2) with RatFunc coefficients.
/// No truncation: the GW side of the engine is exact in phi.
class PhiLaurent {
public:
    PhiLaurent() = default;

    static PhiLaurent one() { return monomial(0, RatFunc(1)); }
    static PhiLaurent monomial(int phi_exp, RatFunc c);

    bool is_zero() const { return t_.empty(); }
    const std::map<int, RatFunc>& terms() const { return t_; }
    RatFunc coeff(int phi_exp) const;

    /// True when every stored term sits at phi-degree k (vacuously for 0).
    bool is_homogeneous_of(int k) const;

    PhiLaurent operator-() const;
    PhiLaurent& operator+=(const PhiLaurent& o);
    friend PhiLaurent operator+(PhiLaurent a, const PhiLaurent& b) { return a += b; }
    friend PhiLaurent operator-(PhiLaurent a, const PhiLaurent& b) { return a += -b; }
    friend PhiLaurent operator*(const PhiLaurent& a, const PhiLaurent& b);
    PhiLaurent scaled(const RatFunc& c) const;

    friend bool operator==(const PhiLaurent& a, const PhiLaurent& b)
    {
        return a.t_ == b.t_;
    }

    PhiLaurent swap12() const;

    /// "c1 * phi^k1 + ...", ascending phi-degree; "0" when empty.
    std::string str() const;

private:
    void insert(int e, RatFunc c);
    std::map<int, RatFunc> t_;
};

/// Substitutes phi -> q^(-1/2) * (1 + q) and truncates at trunc. This is the
/// change of variable e^{iu} = -q on the branch e^{iu/2} = i*q^{1/2}, under
/// which each phi^k becomes q^(-k/2)*(1+q)^k with coefficient exactly 1.
QSeries phi_to_q(const PhiLaurent& x, HalfExp trunc);

}  // namespace gwdt
