#include "gwdt/localization.hpp"

namespace gwdt {

BundleCxX divisor_bundle(Divisor d, int component)
{
    if (component != 1 && component != 2)
        throw std::invalid_argument("divisor_bundle: component must be 1 or 2");

    BundleCxX b;
    switch (d) {
        case Divisor::D1:        b = {1, {1, 0}, {0, 0}, 0}; break;
        case Divisor::D2:        b = {1, {0, 1}, {0, 0}, 1}; break;
        case Divisor::MinusD1:   b = {-1, {-1, 0}, {0, 0}, 0}; break;
        case Divisor::MinusD2:   b = {-1, {0, -1}, {0, 0}, -1}; break;
        case Divisor::D1MinusD2: b = {0, {0, 0}, {1, -1}, -1}; break;
        case Divisor::D2MinusD1: b = {0, {0, 0}, {-1, 1}, 1}; break;
        case Divisor::Trivial:   b = {0, {0, 0}, {0, 0}, 0}; break;
    }
    if (component == 2) {
        std::swap(b.pi_twist[0], b.pi_twist[1]);
        std::swap(b.base_twist[0], b.base_twist[1]);
    }
    return b;
}

std::vector<BundleCxC> pushforward_pi(const BundleCxX& x)
{
    if (x.h < -1 || x.h > 1)
        throw std::invalid_argument("pushforward_pi: |h| <= 1 required");
    if (x.h == -1) return {};

    // All curve twists pass through as p2-twists with their weights.
    int j = x.pi_twist[0] + x.base_twist[0];
    int l = x.pi_twist[1] + x.base_twist[1];
    if (x.h == 0) return {BundleCxC{0, j, l, x.delta}};

    // h = 1: the three dual summands L0^*, L1^*, L2^* tensored by the twists.
    return {BundleCxC{-1, j, l, x.delta},
            BundleCxC{0, j - 1, l, x.delta},
            BundleCxC{0, j, l - 1, x.delta}};
}

void KClassC::add(const KGenC& g, long mult)
{
    if (mult == 0) return;
    auto [it, fresh] = m_.try_emplace(g, mult);
    if (!fresh) {
        it->second += mult;
        if (it->second == 0) m_.erase(it);
    }
}

long KClassC::mult(const KGenC& g) const
{
    auto it = m_.find(g);
    return it == m_.end() ? 0 : it->second;
}

KClassC& KClassC::operator+=(const KClassC& o)
{
    for (const auto& [g, m] : o.m_) add(g, m);
    return *this;
}

KClassC KClassC::scaled(long c) const
{
    KClassC r;
    if (c == 0) return r;
    for (const auto& [g, m] : m_) r.m_.emplace(g, m * c);
    return r;
}

KClassC KClassC::fixed_part() const
{
    KClassC r;
    for (const auto& [g, m] : m_)
        if (g.is_fixed()) r.m_.emplace(g, m);
    return r;
}

KClassC KClassC::moving_part() const
{
    KClassC r;
    for (const auto& [g, m] : m_)
        if (!g.is_fixed()) r.m_.emplace(g, m);
    return r;
}

KClassC KClassC::swap12() const
{
    KClassC r;
    for (const auto& [g, m] : m_)
        r.add(KGenC{g.degree, {g.weight[0], g.weight[2], g.weight[1]}}, m);
    return r;
}

KClassC pushforward_p1(const BundleCxC& x, int g, int k1, int k2)
{
    if (x.delta < -1 || x.delta > 1)
        throw std::invalid_argument("pushforward_p1: |delta| <= 1 required");

    std::array<int, 3> w{x.i, x.j, x.l};
    KClassC r;
    long rank = 1L - g + static_cast<long>(x.j) * k1 + static_cast<long>(x.l) * k2;
    r.add(KGenC{0, w}, rank);

    int deg = x.j * k1 + x.l * k2;
    if (x.delta == -1) {
        r.add(KGenC{deg, w}, -1);
    } else if (x.delta == 1) {
        // Tensoring by the tangent bundle of C adds 2 - 2g to the degree.
        r.add(KGenC{deg + 2 - 2 * g, w}, 1);
    }
    return r;
}

KClassC obstruction_class(int g, int k1, int k2, int component)
{
    if (g < 0) throw std::invalid_argument("obstruction_class: g >= 0 required");

    struct Term {
        Divisor d;
        long sign;
    };
    static constexpr Term kTerms[] = {
        {Divisor::D1, -1},        {Divisor::D2, -1},
        {Divisor::MinusD1, -1},   {Divisor::MinusD2, -1},
        {Divisor::D1MinusD2, 1},  {Divisor::Trivial, 2},
        {Divisor::D2MinusD1, 1},
    };

    KClassC acc;
    for (const auto& [d, sign] : kTerms) {
        KClassC part;
        for (const auto& summand : pushforward_pi(divisor_bundle(d, component)))
            part += pushforward_p1(summand, g, k1, k2);
        acc += part.scaled(sign);
    }

    KClassC expected_fixed;
    expected_fixed.add(KGenC{2 - 2 * g, {0, 0, 0}}, -1);
    if (!(acc.fixed_part() == expected_fixed))
        throw ConsistencyError(
            "obstruction_class: weight-zero part is not minus the tangent bundle");
    return acc;
}

DualP euler_factor(const KGenC& g)
{
    // Frozen orientation: generators produced by the pushforward rules carry
    // the monomial exponents (i,j,l); their Euler form is the negated weight
    // form, and the degree multiplies [p].
    MultiPoly form = MultiPoly::linear(GaussRat(-g.weight[0]), GaussRat(-g.weight[1]),
                                       GaussRat(-g.weight[2]));
    return DualP(RatFunc(std::move(form)), RatFunc(g.degree));
}

DualP euler_moving_inverse_style(const KClassC& cls)
{
    DualP acc = DualP::one();
    for (const auto& [g, m] : cls.terms()) {
        if (g.is_fixed())
            throw ConsistencyError(
                "euler_moving_inverse_style: zero-weight generator in moving part");
        acc = acc * euler_factor(g).pow(static_cast<int>(m));
    }
    return acc;
}

RatFunc integrate_C(const DualP& x) { return x.b; }

RatFunc n_dt(int g, int k1, int k2)
{
    if (k1 >= -1 || k2 >= -1)
        throw std::invalid_argument("n_dt: requires k1, k2 < -1");
    if (g < 0) throw std::invalid_argument("n_dt: requires g >= 0");

    RatFunc acc;
    for (int component = 1; component <= 2; ++component) {
        KClassC cls = obstruction_class(g, k1, k2, component);
        acc += integrate_C(euler_moving_inverse_style(cls.moving_part()));
    }
    return acc;
}

RatFunc n_dt_closed(int g, int k1, int k2)
{
    if (k1 >= -1 || k2 >= -1)
        throw std::invalid_argument("n_dt_closed: requires k1, k2 < -1");

    long gl = g, k1l = k1, k2l = k2;
    return RatFunc::form_power(1, -1, 0, static_cast<int>(gl - k1l - 3)) *
           RatFunc::form_power(1, 0, -1, static_cast<int>(gl - k2l - 3)) *
           RatFunc(MultiPoly::linear(GaussRat(4 * gl - 4 - k1l - k2l),
                                     GaussRat(-(2 * gl - 2 - k2l)),
                                     GaussRat(-(2 * gl - 2 - k1l))));
}

}  // namespace gwdt
