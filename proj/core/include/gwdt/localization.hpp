#pragma once

#include "gwdt/ratfunc.hpp"

#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwdt {

/// Raised when the localization pipeline contradicts itself (e.g. the
/// weight-zero part of the obstruction class is not minus the tangent line
/// bundle of the fixed curve). Distinct from precondition violations.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The divisor bundles on C x X entering the ideal-sheaf rewrite.
enum class Divisor { D1, D2, MinusD1, MinusD2, D1MinusD2, D2MinusD1, Trivial };

/// Line bundle on C x X: relative hyperplane power h pulled back from X,
/// two twist channels pulled back from the base curve (through X and through
/// C x C respectively), and a diagonal-divisor twist.
struct BundleCxX {
    int h = 0;                          // power of O_X(1), in {-1, 0, 1}
    std::array<int, 2> pi_twist{0, 0};  // (j, l): pi^*(L1^j L2^l) through pr2
    std::array<int, 2> base_twist{0, 0};// (j', l'): p2^*(L1^j' L2^l') through id x pi
    int delta = 0;                      // diagonal twist, in {-1, 0, 1}
};

/// The bundle for one of the seven divisor combinations. Component 2 is the
/// image of component 1 under the swap (L1,k1,t1) <-> (L2,k2,t2).
BundleCxX divisor_bundle(Divisor d, int component);

/// Summand on C x C after pushing down the fiber: p2^*(L0^i L1^j L2^l)
/// twisted by delta copies of the diagonal. L0 is trivial of weight -t0;
/// the full monomial carries torus weight -(i t0 + j t1 + l t2).
struct BundleCxC {
    int i = 0, j = 0, l = 0;
    int delta = 0;
};

/// Derived pushforward down the P^2 fiber. h = 1 yields the three dual
/// summands (i, j, l picking up -1 in slots 0, 1, 2), h = 0 passes the
/// twists through, h = -1 vanishes. Always multiplicity +1 per summand.
std::vector<BundleCxC> pushforward_pi(const BundleCxX& x);

/// Equivariant line-bundle generator on the fixed curve: a degree and the
/// exponent triple (i, j, l) of the weight monomial. The weight-(0,0,0)
/// generators form the fixed part.
struct KGenC {
    int degree = 0;
    std::array<int, 3> weight{0, 0, 0};

    bool is_fixed() const { return weight == std::array<int, 3>{0, 0, 0}; }
    friend auto operator<=>(const KGenC&, const KGenC&) = default;
};

/// Formal integer combination of KGenC generators.
class KClassC {
public:
    KClassC() = default;

    void add(const KGenC& g, long mult);
    bool empty() const { return m_.empty(); }
    const std::map<KGenC, long>& terms() const { return m_; }
    long mult(const KGenC& g) const;

    KClassC& operator+=(const KClassC& o);
    friend KClassC operator+(KClassC a, const KClassC& b) { return a += b; }
    KClassC scaled(long c) const;
    friend KClassC operator-(const KClassC& a, const KClassC& b)
    {
        return a + b.scaled(-1);
    }

    KClassC fixed_part() const;
    KClassC moving_part() const;

    /// Image under (t1,k1) <-> (t2,k2): weight slots 1 and 2 swap. Degrees
    /// are concrete integers, so the caller must have swapped k1, k2 in the
    /// inputs that produced the class.
    KClassC swap12() const;

    friend bool operator==(const KClassC& a, const KClassC& b) { return a.m_ == b.m_; }

private:
    std::map<KGenC, long> m_;
};

/// Pushforward to the first curve factor at concrete (g, k1, k2):
/// rank (1-g+j*k1+l*k2) copies of the degree-0 generator, plus the
/// delta-dependent correction (subtract the bundle itself for -Delta, add
/// the tangent-twisted bundle for +Delta, which shifts the degree by 2-2g).
KClassC pushforward_p1(const BundleCxC& x, int g, int k1, int k2);

/// The K-theory class of the localized obstruction theory on the fixed
/// curve, assembled from the seven signed pushforwards. Verifies that its
/// weight-zero part is exactly minus the degree-(2-2g) generator (the
/// tangent bundle of C) and throws ConsistencyError otherwise.
KClassC obstruction_class(int g, int k1, int k2, int component);

/// Euler factor of one generator under the frozen orientation: the weight
/// form enters negated, the degree rides on [p]. This single convention
/// reproduces both displayed component fractions and the closed form.
DualP euler_factor(const KGenC& g);

/// Product of euler_factor(gen)^mult over all generators; every generator
/// must have nonzero weight (zero-weight input signals ConsistencyError).
DualP euler_moving_inverse_style(const KClassC& cls);

/// Integration over the fixed curve: the coefficient of [p].
RatFunc integrate_C(const DualP& x);

/// Leading Donaldson-Thomas invariant for the section-plus-fiber class at
/// holomorphic Euler characteristic 1-g: the sum over both fixed components
/// of the integrated moving Euler class. Requires k1, k2 < -1, g >= 0.
RatFunc n_dt(int g, int k1, int k2);

/// Closed form: (t0-t1)^(g-k1-3) (t0-t2)^(g-k2-3)
///   * ((4g-4-k1-k2) t0 - (2g-2-k2) t1 - (2g-2-k1) t2).
RatFunc n_dt_closed(int g, int k1, int k2);

}  // namespace gwdt
