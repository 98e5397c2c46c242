#include "gwdt/trace_sum.hpp"

#include <algorithm>
#include <stdexcept>

namespace gwdt {

void GwInput::validate() const
{
    if (g < 1) throw std::invalid_argument("GwInput: genus must be >= 1");
    if (k1 > 0 || k2 > 0) throw std::invalid_argument("GwInput: k1, k2 must be <= 0");
    if (r < 0) throw std::invalid_argument("GwInput: r must be >= 0");
}

PhiLaurent z_trace(const GwInput& in)
{
    in.validate();
    TqftOperators ops = build_operators();

    // Free choices: b <= min(g-1, r), then the split n1 + n2 = r - b with
    // n1 <= -k1, n2 <= -k2. Everything else is determined.
    int bmax = std::min(in.g - 1, in.r);
    InterleaveTable ab(ops.A, ops.B, in.g - 1, bmax);
    InterleaveTable m1n(ops.M1, ops.N, -in.k1, std::min(in.r, -in.k1));
    InterleaveTable m2n(ops.M2, ops.N, -in.k2, std::min(in.r, -in.k2));

    PhiLaurent acc;
    for (int b = 0; b <= bmax; ++b) {
        int a = in.g - 1 - b;
        int rest = in.r - b;
        for (int n1 = 0; n1 <= std::min(rest, -in.k1); ++n1) {
            int n2 = rest - n1;
            if (n2 > -in.k2) continue;
            int m1 = -in.k1 - n1;
            int m2 = -in.k2 - n2;
            acc += (ab.at(a, b) * m1n.at(m1, n1) * m2n.at(m2, n2)).trace();
        }
    }
    return acc;
}

PhiLaurent z_closed_r1(const GwInput& in)
{
    if (in.r != 1) throw std::invalid_argument("z_closed_r1: requires r = 1");
    if (in.k1 >= -1 || in.k2 >= -1)
        throw std::invalid_argument("z_closed_r1: requires k1, k2 < -1");
    if (in.g < 0) throw std::invalid_argument("z_closed_r1: requires g >= 0");

    long g = in.g, k1 = in.k1, k2 = in.k2;
    RatFunc coeff = RatFunc::form_power(1, -1, 0, static_cast<int>(g - k1 - 3)) *
                    RatFunc::form_power(1, 0, -1, static_cast<int>(g - k2 - 3)) *
                    RatFunc(MultiPoly::linear(GaussRat(4 * g - 4 - k1 - k2),
                                              GaussRat(-(2 * g - 2 - k2)),
                                              GaussRat(-(2 * g - 2 - k1))));
    return PhiLaurent::monomial(static_cast<int>(k1 + k2 + 3), coeff);
}

PhiLaurent z_proof_form(const GwInput& in)
{
    if (in.r != 1) throw std::invalid_argument("z_proof_form: requires r = 1");
    in.validate();

    TqftOperators ops = build_operators();
    PhiLaurent acc;
    if (in.g >= 2) {
        Op3 w = ops.A.pow(in.g - 2) * ops.M1.pow(-in.k1) * ops.M2.pow(-in.k2) * ops.B;
        acc += w.trace().scaled(RatFunc(in.g - 1));
    }
    if (in.k1 < 0) {
        Op3 w = ops.A.pow(in.g - 1) * ops.M1.pow(-in.k1 - 1) * ops.M2.pow(-in.k2) * ops.N;
        acc += w.trace().scaled(RatFunc(-in.k1));
    }
    if (in.k2 < 0) {
        Op3 w = ops.A.pow(in.g - 1) * ops.M1.pow(-in.k1) * ops.M2.pow(-in.k2 - 1) * ops.N;
        acc += w.trace().scaled(RatFunc(-in.k2));
    }
    return acc;
}

}  // namespace gwdt
