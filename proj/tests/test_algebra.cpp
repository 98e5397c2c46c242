#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace gwdt;
using namespace gwdt::testing;

namespace {

RatFunc rf(const MultiPoly& p) { return RatFunc(p); }

const EvalPoint kPt310{GaussRat(3), GaussRat(1), GaussRat(0)};

}  // namespace

TEST_CASE("rat canonical form and arithmetic")
{
    Rat a(2, -4);
    CHECK(a == Rat(-1, 2));
    CHECK(a.den() == 2);
    CHECK(a.str() == "-1/2");
    CHECK((Rat(1, 3) + Rat(2, 3)).is_one());
    CHECK((Rat(3, 7) * Rat(7, 3)).is_one());
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat(0).inverse(), std::domain_error);
}

TEST_CASE("gauss rationals: field structure and conjugation")
{
    GaussRat z(Rat(1, 2), Rat(-3));
    CHECK(z.conj().conj() == z);
    CHECK((z * z.inverse()).is_one());
    CHECK(GaussRat::i() * GaussRat::i() == GaussRat(-1));
    for (long m = -9; m <= 9; ++m)
        CHECK(GaussRat::i_pow(m) * GaussRat::i_pow(-m) == GaussRat(1));
    CHECK(z.str() == "1/2-3i");
    CHECK(GaussRat(Rat(0), Rat(1)).str() == "i");
}

TEST_CASE("poly_arith: difference of squares, identity, evaluation")
{
    MultiPoly lhs = (T(0) - T(1)) * (T(0) + T(1));
    MultiPoly rhs = MultiPoly::monomial({2, 0, 0}, GaussRat(1)) -
                    MultiPoly::monomial({0, 2, 0}, GaussRat(1));
    CHECK(lhs == rhs);

    auto rng = make_rng();
    MultiPoly p = rand_poly(rng);
    CHECK(p + MultiPoly() == p);

    // ((t0-t1)(t0-t2)) * ((t1-t0)(t1-t2)) at (3,1,0): (2*3)*((-2)*1) = -12
    MultiPoly prod = (T(0) - T(1)) * (T(0) - T(2)) * (T(1) - T(0)) * (T(1) - T(2));
    CHECK(prod.eval(kPt310) == GaussRat(-12));
}

TEST_CASE("poly_div_linform: exact quotients and refusals")
{
    auto f01 = LinForm::normalize(1, -1, 0).first;
    auto f02 = LinForm::normalize(1, 0, -1).first;
    MultiPoly sq = T(0) * T(0) - T(1) * T(1);

    auto q = sq.div_linform(f01);
    REQUIRE(q.has_value());
    CHECK(*q == T(0) + T(1));

    CHECK_FALSE(sq.div_linform(f02).has_value());

    MultiPoly p = (T(0) - T(1)) * (T(0) - T(1)) * (T(0) - T(2));
    auto q2 = p.div_linform(f01);
    REQUIRE(q2.has_value());
    CHECK(*q2 == (T(0) - T(1)) * (T(0) - T(2)));
}

TEST_CASE("poly_div_linform: round trip on random inputs")
{
    auto rng = make_rng();
    std::uniform_int_distribution<std::size_t> pick(0, standard_forms().size() - 1);
    for (int rep = 0; rep < 40; ++rep) {
        MultiPoly p = rand_poly(rng);
        const auto& c = standard_forms()[pick(rng)];
        LinForm f = LinForm::normalize(c[0], c[1], c[2]).first;
        auto q = (p * f.poly()).div_linform(f);
        REQUIRE(q.has_value());
        CHECK(*q == p);
    }
}

TEST_CASE("linform normalization tracks sign and content")
{
    auto [f, s] = LinForm::normalize(-2, 2, 0);
    CHECK(f.coeffs() == std::array<int, 3>{1, -1, 0});
    CHECK(s == -2);
    CHECK_THROWS_AS(LinForm::normalize(0, 0, 0), std::invalid_argument);
    CHECK(f.str() == "t0-t1");
    CHECK(LinForm::normalize(2, -1, -1).first.str() == "2*t0-t1-t2");
}

TEST_CASE("ratfunc_arith: sign-normalized cancellation and inverses")
{
    RatFunc a = RatFunc::form_power(1, -1, 0, -1);   // 1/(t0-t1)
    RatFunc b = RatFunc::form_power(-1, 1, 0, -1);   // 1/(t1-t0)
    CHECK((a + b).is_zero());

    RatFunc x = rf(T(0) + T(1) - T(2).scaled(GaussRat(2))) *
                RatFunc::form_power(1, -1, 0, -1) * RatFunc::form_power(1, 0, -1, -1);
    CHECK((x * (RatFunc(1) / x)).is_one());
    CHECK((x / x).is_one());
}

TEST_CASE("ratfunc: diagonal entries of the rank-structure operator sum to zero")
{
    // 1/((t_i - t_j)(t_i - t_k)) for i = 0,1,2; checked by evaluation at
    // (3,1,0) where the three values are 1/6, -1/2, 1/3.
    RatFunc e0 = rf((T(0) - T(1)) * (T(0) - T(2))).inverse();
    RatFunc e1 = rf((T(1) - T(0)) * (T(1) - T(2))).inverse();
    RatFunc e2 = rf((T(2) - T(0)) * (T(2) - T(1))).inverse();
    CHECK(e0.eval(kPt310) == GaussRat(Rat(1, 6)));
    CHECK(e1.eval(kPt310) == GaussRat(Rat(-1, 2)));
    CHECK(e2.eval(kPt310) == GaussRat(Rat(1, 3)));
    RatFunc sum = e0 + e1 + e2;
    CHECK(sum.is_zero());
    CHECK(sum.eval(kPt310) ==
          GaussRat(Rat(1, 6)) + GaussRat(Rat(-1, 2)) + GaussRat(Rat(1, 3)));
}

TEST_CASE("ratfunc_eq: cross-multiplied comparison")
{
    auto rng = make_rng();
    RatFunc x = rand_ratfunc(rng);
    RatFunc scaled = x * RatFunc::form_power(1, -1, 0, 1) * RatFunc::form_power(1, -1, 0, -1);
    CHECK(x == scaled);
    CHECK(RatFunc::form_power(1, -1, 0, -1) != RatFunc::form_power(1, 0, -1, -1));
}

TEST_CASE("ratfunc division by zero signals")
{
    CHECK_THROWS_AS(RatFunc(1) / RatFunc(), std::domain_error);
    CHECK_THROWS_AS(RatFunc().inverse(), std::domain_error);
}

TEST_CASE("ring axioms on random polynomials")
{
    auto rng = make_rng();
    for (int rep = 0; rep < 30; ++rep) {
        MultiPoly p = rand_poly(rng), q = rand_poly(rng), r = rand_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("ring axioms and field identities on random rational functions")
{
    auto rng = make_rng();
    for (int rep = 0; rep < 15; ++rep) {
        RatFunc x = rand_ratfunc(rng), y = rand_ratfunc(rng), z = rand_ratfunc(rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x - x).is_zero());
    }
}

TEST_CASE("evaluation commutes with rational-function arithmetic")
{
    auto rng = make_rng();
    int points_checked = 0;
    while (points_checked < 5) {
        RatFunc x = rand_ratfunc(rng), y = rand_ratfunc(rng);
        EvalPoint pt = rand_point(rng);
        auto vx = try_eval(x, pt), vy = try_eval(y, pt);
        auto vsum = try_eval(x + y, pt), vprod = try_eval(x * y, pt);
        if (!vx || !vy || !vsum || !vprod) continue;
        CHECK(*vsum == *vx + *vy);
        CHECK(*vprod == *vx * *vy);
        ++points_checked;
    }
}

TEST_CASE("dual numbers: inverses and nilpotency")
{
    DualP u(RatFunc(T(0) - T(2)), RatFunc(5));
    DualP prod = u.inverse() * u;
    CHECK(prod == DualP::one());

    RatFunc s = rf(T(1) - T(2));
    DualP pure(s);
    DualP inv = pure.inverse();
    CHECK(inv.a == s.inverse());
    CHECK(inv.b.is_zero());

    // ((t2-t1) + (k1-k2)[p])^-1 at k1=-3, k2=-2: b = -1, so the inverse is
    // 1/(t2-t1) + (1/(t2-t1)^2)[p].
    RatFunc w = rf(T(2) - T(1));
    DualP v(w, RatFunc(-1));
    DualP vi = v.inverse();
    CHECK(vi.a == w.inverse());
    CHECK(vi.b == w.inverse() * w.inverse());

    CHECK_THROWS_AS(DualP(RatFunc(), RatFunc(3)).inverse(), std::domain_error);
}

TEST_CASE("dual numbers: associativity and [p]-truncation on random data")
{
    auto rng = make_rng();
    for (int rep = 0; rep < 10; ++rep) {
        DualP x(rand_ratfunc(rng), rand_ratfunc(rng));
        DualP y(rand_ratfunc(rng), rand_ratfunc(rng));
        DualP z(rand_ratfunc(rng), rand_ratfunc(rng));
        CHECK((x * y) * z == x * (y * z));
        DualP nil = DualP(RatFunc(), x.b) * DualP(RatFunc(), y.b);
        CHECK(nil.a.is_zero());
        CHECK(nil.b.is_zero());
    }
}

TEST_CASE("dual numbers: x * inverse(x) = 1 whenever the [p]^0 part is nonzero")
{
    auto rng = make_rng();
    std::uniform_int_distribution<int> exp(-2, 2);
    std::uniform_int_distribution<long> scal(1, 9);
    for (int rep = 0; rep < 12; ++rep) {
        // invertible [p]^0 parts: scalar times a product of form powers
        RatFunc a(scal(rng));
        for (const auto& f : standard_forms()) a *= RatFunc::form_power(f[0], f[1], f[2], exp(rng));
        DualP x(a, rand_ratfunc(rng));
        CHECK(x * x.inverse() == DualP::one());
    }
}

TEST_CASE("exponent arithmetic is guarded against overflow")
{
    MultiPoly big = MultiPoly::monomial({1 << 20, 0, 0}, GaussRat(1));
    CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("canonical rendering is the frozen golden format")
{
    MultiPoly p = T(0) * T(0) - T(1).scaled(GaussRat(Rat(1, 2))) + MultiPoly(GaussRat(Rat(0), Rat(3)));
    CHECK(p.str() == "t0^2 - 1/2*t1 + 3i");
    RatFunc r(p, RatFunc::DenMap{{LinForm::normalize(1, -1, 0).first, 2},
                                 {LinForm::normalize(1, 0, -1).first, 1}});
    CHECK(r.str() == "(t0^2 - 1/2*t1 + 3i) / (t0-t1)^2*(t0-t2)");
    CHECK(RatFunc().str() == "0");
}
