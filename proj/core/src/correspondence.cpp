#include "gwdt/correspondence.hpp"

namespace gwdt {

KBeta k_dot_beta(int g, int k1, int k2) { return {2 * g - 5 - k1 - k2}; }

namespace {

void validate_leading_inputs(int g, int k1, int k2)
{
    if (g < 1) throw std::invalid_argument("leading term: g >= 1 required");
    if (k1 >= -1 || k2 >= -1)
        throw std::invalid_argument("leading term: k1, k2 < -1 required");
}

}  // namespace

std::pair<HalfExp, RatFunc> lhs_leading(int g, int k1, int k2,
                                        std::optional<HalfExp> trunc)
{
    validate_leading_inputs(g, k1, k2);
    PhiLaurent z = z_trace({g, k1, k2, 1});
    // phi-degree k1+k2+3 < 0 maps to leading q-exponent -(k1+k2+3)/2.
    HalfExp lead = HalfExp::halves(-(k1 + k2 + 3));
    HalfExp window = trunc.value_or(lead + HalfExp::whole(2));
    QSeries s = phi_to_q(z, window);
    KBeta kb = k_dot_beta(g, k1, k2);
    RatFunc prefactor(GaussRat::minus_i_pow(-kb.value));
    return s.scaled(prefactor).leading_term();
}

std::pair<HalfExp, RatFunc> rhs_leading(int g, int k1, int k2)
{
    validate_leading_inputs(g, k1, k2);
    KBeta kb = k_dot_beta(g, k1, k2);
    RatFunc nd = n_dt(g, k1, k2);

    // Only the q^(1-g) coefficient of the DT series is known.
    HalfExp first = HalfExp::whole(1 - g);
    QSeries dt = QSeries::monomial(first, nd, first + HalfExp::whole(1));

    HalfExp half_kb = HalfExp::halves(kb.value);
    QSeries prefactor = QSeries::monomial(half_kb, RatFunc(GaussRat::i_pow(kb.value)),
                                          half_kb + HalfExp::whole(2));
    QSeries reduced = dt * mcmahon(HalfExp::whole(2), kMcMahonExponent, true);
    return (prefactor * reduced).leading_term();
}

CorrReport check(int g, int k1, int k2, std::optional<HalfExp> trunc)
{
    auto [le, lc] = lhs_leading(g, k1, k2, trunc);
    auto [re, rc] = rhs_leading(g, k1, k2);
    CorrReport rep;
    rep.g = g;
    rep.k1 = k1;
    rep.k2 = k2;
    rep.lhs_exp = le;
    rep.rhs_exp = re;
    rep.lhs_coeff = lc;
    rep.rhs_coeff = rc;
    rep.pass = (le == re) && (lc == rc);
    return rep;
}

}  // namespace gwdt
