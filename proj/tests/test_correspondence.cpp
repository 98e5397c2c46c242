#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gwdt/correspondence.hpp"
#include "test_support.hpp"

using namespace gwdt;
using namespace gwdt::testing;

namespace {

RatFunc rf(const MultiPoly& p) { return RatFunc(p); }

RatFunc times_i(const RatFunc& r, long long m)
{
    return r * RatFunc(GaussRat::i_pow(m));
}

}  // namespace

TEST_CASE("k_dot_beta: adjunction value")
{
    CHECK(k_dot_beta(2, -2, -2).value == 3);
    CHECK(k_dot_beta(1, -2, -2).value == 1);
    CHECK(k_dot_beta(4, -5, -5).value == 13);
}

TEST_CASE("prefactor consistency: (-i)^(-m) equals i^m")
{
    for (long long m = -13; m <= 13; ++m)
        CHECK(GaussRat::minus_i_pow(-m) == GaussRat::i_pow(m));
}

TEST_CASE("lhs_leading: exponent and coefficient at pinned points")
{
    auto [e, c] = lhs_leading(2, -2, -2);
    CHECK(e == HalfExp::halves(1));
    RatFunc p = rf((T(0) - T(1)) * (T(0) - T(2)) *
                   MultiPoly::linear(GaussRat(8), GaussRat(-4), GaussRat(-4)));
    CHECK(c == times_i(p, -1));  // (-i)^(-3) = -i

    auto [e1, c1] = lhs_leading(1, -2, -2);
    CHECK(e1 == HalfExp::halves(1));
    RatFunc p1 = rf(MultiPoly::linear(GaussRat(4), GaussRat(-2), GaussRat(-2)));
    CHECK(c1 == times_i(p1, 1));  // (-i)^(-1) = i

    CHECK_THROWS_AS(lhs_leading(0, -2, -2), std::invalid_argument);
    CHECK_THROWS_AS(lhs_leading(2, -1, -2), std::invalid_argument);
}

TEST_CASE("rhs_leading: exponent and coefficient at pinned points")
{
    auto [e, c] = rhs_leading(2, -2, -2);
    CHECK(e == HalfExp::halves(1));
    RatFunc p = rf((T(0) - T(1)) * (T(0) - T(2)) *
                   MultiPoly::linear(GaussRat(8), GaussRat(-4), GaussRat(-4)));
    CHECK(c == times_i(p, 3));  // (-q)^(3/2) contributes i^3 = -i

    auto [e1, c1] = rhs_leading(1, -2, -2);
    CHECK(e1 == HalfExp::halves(1));
    CHECK(c1 == times_i(rf(MultiPoly::linear(GaussRat(4), GaussRat(-2), GaussRat(-2))), 1));
}

TEST_CASE("leading exponents agree and equal -(k1+k2+3)/2 on the grid")
{
    for (int g = 1; g <= 3; ++g)
        for (int k1 = -4; k1 <= -2; ++k1)
            for (int k2 = -4; k2 <= -2; ++k2) {
                auto [le, lc] = lhs_leading(g, k1, k2);
                auto [re, rc] = rhs_leading(g, k1, k2);
                CHECK(le == HalfExp::halves(-(k1 + k2 + 3)));
                CHECK(re == le);
            }
}

TEST_CASE("check: pinned pass and swapped symmetry")
{
    CorrReport rep = check(2, -2, -2);
    CHECK(rep.pass);
    CHECK(rep.lhs_exp == rep.rhs_exp);
    CHECK(rep.lhs_coeff == rep.rhs_coeff);

    CorrReport a = check(2, -3, -2);
    CorrReport b = check(2, -2, -3);
    CHECK(a.pass);
    CHECK(b.pass);
    CHECK(a.lhs_coeff == b.lhs_coeff.swap12());
    CHECK(a.rhs_coeff == b.rhs_coeff.swap12());
}

TEST_CASE("check passes across the full grid")
{
    for (int g = 1; g <= 4; ++g)
        for (int k1 = -5; k1 <= -2; ++k1)
            for (int k2 = -5; k2 <= -2; ++k2) {
                CorrReport rep = check(g, k1, k2);
                CAPTURE(g);
                CAPTURE(k1);
                CAPTURE(k2);
                CHECK(rep.pass);
            }
}

TEST_CASE("truncation override widens the GW-side window without changing the verdict")
{
    CorrReport rep = check(2, -2, -2, HalfExp::whole(4));
    CHECK(rep.pass);
}
