// Command-line front end: exact GW/DT values for P2-bundles over a curve,
// single-point and grid verification, and seeded self-tests.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 internal inconsistency.

#include <CLI11.hpp>
#include <json.hpp>

#include "gwdt/correspondence.hpp"

#include <atomic>
#include <cstdio>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <thread>
#include <vector>

using namespace gwdt;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

std::uint64_t default_seed()
{
    if (const char* s = std::getenv("GWDT_SEED")) return std::strtoull(s, nullptr, 10);
    return kDefaultSeed;
}

/* ---- seeded evaluation points for the numeric cross-check ---- */

std::vector<EvalPoint> eval_points(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 6);
    std::vector<EvalPoint> pts;
    while (static_cast<int>(pts.size()) < count) {
        Rat a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        if (a == b || a == c || b == c) continue;
        pts.push_back(EvalPoint{GaussRat(a), GaussRat(b), GaussRat(c)});
    }
    return pts;
}

bool phi_equal_at(const PhiLaurent& x, const PhiLaurent& y, const EvalPoint& pt)
{
    for (const auto& [e, c] : x.terms())
        if (c.eval(pt) != y.coeff(e).eval(pt)) return false;
    for (const auto& [e, c] : y.terms())
        if (c.eval(pt) != x.coeff(e).eval(pt)) return false;
    return true;
}

Json phi_terms_json(const PhiLaurent& z)
{
    Json terms = Json::array();
    for (const auto& [e, c] : z.terms())
        terms.push_back(Json{{"phi_exp", e}, {"coeff", c.str()}});
    return Json{{"phi_terms", terms}};
}

Json report_json(const CorrReport& r)
{
    return Json{{"g", r.g},           {"k1", r.k1},
                {"k2", r.k2},         {"exp", r.lhs_exp.str()},
                {"lhs", r.lhs_coeff.str()}, {"rhs", r.rhs_coeff.str()},
                {"pass", r.pass}};
}

/* ---- verbs ---- */

struct Common {
    std::string format = "text";
    std::uint64_t seed = default_seed();
    bool json() const { return format == "json"; }
};

int run_gw(int g, int k1, int k2, int r, bool closed_form, const Common& opt)
{
    PhiLaurent zt = z_trace({g, k1, k2, r});
    if (opt.json()) {
        std::cout << phi_terms_json(zt).dump(2) << "\n";
        if (!closed_form) return kExitOk;
    } else {
        std::cout << "z: " << zt.str() << "\n";
    }
    if (!closed_form) return kExitOk;

    PhiLaurent zc = z_closed_r1({g, k1, k2, r});  // throws usage error unless r=1, k<-1
    bool equal = zt == zc;
    if (!opt.json()) {
        std::cout << "closed form: " << zc.str() << "\n";
        std::cout << (equal ? "EQUAL" : "NOT EQUAL") << "\n";
    }
    if (!equal) return kExitVerifyFail;
    for (const auto& pt : eval_points(opt.seed, 5))
        if (!phi_equal_at(zt, zc, pt))
            throw ConsistencyError("symbolic equality not confirmed by evaluation");
    return kExitOk;
}

int run_dt(int g, int k1, int k2, const Common& opt)
{
    // obstruction_class throws ConsistencyError on a fixed-part mismatch, so
    // reaching the output lines means the check passed for both components.
    RatFunc nd = n_dt(g, k1, k2);
    RatFunc closed = n_dt_closed(g, k1, k2);
    bool equal = nd == closed;

    if (opt.json()) {
        Json j{{"g", g}, {"k1", k1}, {"k2", k2}, {"n_dt", nd.str()}, {"fixed_part_ok", true}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n_dt: " << nd.str() << "\n";
        std::cout << "closed form: " << closed.str() << "\n";
        std::cout << (equal ? "EQUAL" : "NOT EQUAL") << "\n";
        std::cout << "fixed_part_ok: true\n";
    }
    if (!equal) return kExitVerifyFail;
    for (const auto& pt : eval_points(opt.seed, 5))
        if (nd.eval(pt) != closed.eval(pt))
            throw ConsistencyError("symbolic equality not confirmed by evaluation");
    return kExitOk;
}

void print_report_text(const CorrReport& rep, bool verbose)
{
    std::printf("g=%d k1=%d k2=%d exp=%s %s\n", rep.g, rep.k1, rep.k2,
                rep.lhs_exp.str().c_str(), rep.pass ? "PASS" : "FAIL");
    if (verbose || !rep.pass) {
        std::printf("  lhs: %s\n", rep.lhs_coeff.str().c_str());
        std::printf("  rhs: %s\n", rep.rhs_coeff.str().c_str());
    }
}

int cross_check_report(const CorrReport& rep, const Common& opt)
{
    if (!rep.pass) return kExitVerifyFail;
    for (const auto& pt : eval_points(opt.seed, 5))
        if (rep.lhs_coeff.eval(pt) != rep.rhs_coeff.eval(pt))
            throw ConsistencyError("symbolic equality not confirmed by evaluation");
    return kExitOk;
}

int run_verify(int g, int k1, int k2, std::optional<long long> trunc, const Common& opt)
{
    std::optional<HalfExp> window;
    if (trunc) window = HalfExp::halves(*trunc);
    CorrReport rep = check(g, k1, k2, window);
    if (opt.json()) {
        Json arr = Json::array({report_json(rep)});
        std::cout << arr.dump(2) << "\n";
    } else {
        print_report_text(rep, true);
    }
    return cross_check_report(rep, opt);
}

int run_verify_grid(int gmin, int gmax, int kmin, int kmax,
                    std::optional<long long> trunc, const Common& opt)
{
    if (gmin < 1 || gmax < gmin || kmax < kmin || kmax > -2)
        throw std::invalid_argument("verify-grid: need 1 <= gmin <= gmax, kmin <= kmax <= -2");
    std::optional<HalfExp> window;
    if (trunc) window = HalfExp::halves(*trunc);

    struct Tuple {
        int g, k1, k2;
    };
    std::vector<Tuple> tuples;
    for (int g = gmin; g <= gmax; ++g)
        for (int k1 = kmin; k1 <= kmax; ++k1)
            for (int k2 = kmin; k2 <= kmax; ++k2) tuples.push_back({g, k1, k2});

    // Fan out across workers; emission order is restored by waiting on the
    // promises in lexicographic order, so text output still streams.
    std::vector<std::promise<CorrReport>> promises(tuples.size());
    std::vector<std::future<CorrReport>> futures;
    futures.reserve(tuples.size());
    for (auto& p : promises) futures.push_back(p.get_future());

    std::atomic<std::size_t> next{0};
    unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(),
                                             static_cast<unsigned>(tuples.size())));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tuples.size()) return;
                try {
                    promises[i].set_value(
                        check(tuples[i].g, tuples[i].k1, tuples[i].k2, window));
                } catch (...) {
                    promises[i].set_exception(std::current_exception());
                }
            }
        });

    Json arr = Json::array();
    std::size_t passed = 0;
    int internal = kExitOk;
    try {
        for (std::size_t i = 0; i < futures.size(); ++i) {
            CorrReport rep = futures[i].get();
            if (rep.pass) ++passed;
            if (opt.json()) arr.push_back(report_json(rep));
            else print_report_text(rep, false);
            if (rep.pass && cross_check_report(rep, opt) != kExitOk) internal = kExitInternal;
        }
    } catch (...) {
        for (auto& th : pool) th.join();
        throw;
    }
    for (auto& th : pool) th.join();

    if (opt.json()) std::cout << arr.dump(2) << "\n";
    else std::printf("%zu/%zu passed\n", passed, tuples.size());
    if (internal != kExitOk) return internal;
    return passed == tuples.size() ? kExitOk : kExitVerifyFail;
}

/* ---- selftest: seeded module invariant suites ---- */

using IMat = std::array<long long, 9>;

IMat imul(const IMat& a, const IMat& b)
{
    IMat r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[3 * i + j] += a[3 * i + k] * b[3 * k + j];
    return r;
}

MultiPoly rand_poly(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> nterms(0, 4), exp(0, 2);
    std::uniform_int_distribution<long> coeff(-6, 6);
    MultiPoly p;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k)
        p += MultiPoly::monomial({exp(rng), exp(rng), exp(rng)}, GaussRat(coeff(rng)));
    return p;
}

RatFunc rand_ratfunc(std::mt19937_64& rng)
{
    static const long forms[3][3] = {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}};
    RatFunc r(rand_poly(rng));
    std::uniform_int_distribution<int> nf(0, 2), pick(0, 2);
    int n = nf(rng);
    for (int k = 0; k < n; ++k) {
        const long* f = forms[pick(rng)];
        r *= RatFunc::form_power(f[0], f[1], f[2], -1);
    }
    return r;
}

int run_selftest(const Common& opt)
{
    std::mt19937_64 rng(opt.seed);
    auto require = [](bool ok, const char* what) {
        if (!ok) throw ConsistencyError(std::string("selftest: ") + what);
        std::printf("ok %s\n", what);
    };

    {
        bool ok = true;
        for (int rep = 0; rep < 20; ++rep) {
            MultiPoly p = rand_poly(rng), q = rand_poly(rng), r = rand_poly(rng);
            ok = ok && p * q == q * p && (p + q) + r == p + (q + r) &&
                 (p * q) * r == p * (q * r) && p * (q + r) == p * q + p * r;
        }
        require(ok, "polynomial ring axioms");
    }
    {
        bool ok = true;
        for (int rep = 0; rep < 10; ++rep) {
            RatFunc x = rand_ratfunc(rng), y = rand_ratfunc(rng), z = rand_ratfunc(rng);
            ok = ok && x * (y + z) == x * y + x * z && (x * y) * z == x * (y * z);
        }
        require(ok, "rational-function ring axioms");
    }
    {
        bool ok = true;
        int checked = 0;
        auto pts = eval_points(opt.seed, 16);
        std::size_t pi = 0;
        while (checked < 5 && pi < pts.size()) {
            RatFunc x = rand_ratfunc(rng), y = rand_ratfunc(rng);
            const auto& pt = pts[pi++];
            try {
                ok = ok && (x + y).eval(pt) == x.eval(pt) + y.eval(pt) &&
                     (x * y).eval(pt) == x.eval(pt) * y.eval(pt);
                ++checked;
            } catch (const std::domain_error&) {
                // denominator hit; use the next point
            }
        }
        require(ok && checked == 5, "evaluation is a ring homomorphism");
    }
    {
        bool ok = true;
        for (int rep = 0; rep < 10; ++rep) {
            DualP x(rand_ratfunc(rng), rand_ratfunc(rng));
            DualP y(rand_ratfunc(rng), rand_ratfunc(rng));
            DualP z(rand_ratfunc(rng), rand_ratfunc(rng));
            ok = ok && (x * y) * z == x * (y * z);
            DualP nil = DualP(RatFunc(), x.b) * DualP(RatFunc(), y.b);
            ok = ok && nil.a.is_zero() && nil.b.is_zero();
        }
        DualP u(RatFunc(MultiPoly::var(0) - MultiPoly::var(2)), RatFunc(7));
        ok = ok && u * u.inverse() == DualP::one();
        require(ok, "dual-number arithmetic");
    }
    {
        bool ok = true;
        std::uniform_int_distribution<int> pick(0, 2);
        static const long forms[3][3] = {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}};
        for (int rep = 0; rep < 20; ++rep) {
            MultiPoly p = rand_poly(rng);
            const long* fc = forms[pick(rng)];
            LinForm f = LinForm::normalize(fc[0], fc[1], fc[2]).first;
            auto q = (p * f.poly()).div_linform(f);
            ok = ok && q.has_value() && *q == p;
        }
        require(ok, "linear-form division round trip");
    }
    {
        bool ok = true;
        std::uniform_int_distribution<long long> d(-9, 9);
        for (int rep = 0; rep < 3; ++rep) {
            IMat u, v;
            for (auto& x : u) x = d(rng);
            for (auto& x : v) x = d(rng);
            Op3 ou, ov;
            for (int i = 0; i < 9; ++i) {
                ou.at(i / 3, i % 3) = PhiLaurent::monomial(0, RatFunc(u[i]));
                ov.at(i / 3, i % 3) = PhiLaurent::monomial(0, RatFunc(v[i]));
            }
            for (int total = 0; total <= 5; ++total)
                for (int a = 0; a <= total; ++a) {
                    int b = total - a;
                    std::vector<int> word(a, 0);
                    word.insert(word.end(), b, 1);
                    std::sort(word.begin(), word.end());
                    IMat acc{};
                    do {
                        IMat prod{};
                        prod[0] = prod[4] = prod[8] = 1;
                        for (int w : word) prod = imul(prod, w == 0 ? u : v);
                        for (int i = 0; i < 9; ++i) acc[i] += prod[i];
                    } while (std::next_permutation(word.begin(), word.end()));
                    Op3 got = interleave_sum(ou, ov, a, b);
                    for (int i = 0; i < 9; ++i)
                        ok = ok && got.at(i / 3, i % 3) ==
                                       PhiLaurent::monomial(0, RatFunc(acc[i]));
                }
        }
        require(ok, "interleaved products vs. brute force");
    }
    {
        bool ok = true;
        for (int rep = 0; rep < 5; ++rep) {
            Op3 u, v;
            std::uniform_int_distribution<long long> d(-9, 9);
            for (int i = 0; i < 9; ++i) {
                u.at(i / 3, i % 3) = PhiLaurent::monomial(0, RatFunc(d(rng)));
                v.at(i / 3, i % 3) = PhiLaurent::monomial(0, RatFunc(d(rng)));
            }
            ok = ok && (u * v).trace() == (v * u).trace();
        }
        require(ok, "trace cyclicity");
    }
    {
        bool ok = true;
        HalfExp t = HalfExp::whole(3);
        for (int rep = 0; rep < 5; ++rep) {
            PhiLaurent x = PhiLaurent::monomial(rep - 2, RatFunc(rand_poly(rng))) +
                           PhiLaurent::monomial(rep, RatFunc(rand_poly(rng)));
            PhiLaurent y = PhiLaurent::monomial(1 - rep, RatFunc(rand_poly(rng)));
            ok = ok && phi_to_q(x * y, t).agrees_with(phi_to_q(x, t) * phi_to_q(y, t));
        }
        for (int m = -6; m <= 6; ++m) {
            QSeries s = phi_to_q(PhiLaurent::monomial(2 * m, RatFunc(1)),
                                 HalfExp::whole(-m + 2));
            auto [e, c] = s.leading_term();
            ok = ok && e == HalfExp::whole(-m) && c == RatFunc(1);
        }
        require(ok, "phi-to-q substitution is multiplicative");
    }
    {
        HalfExp t = HalfExp::whole(5);
        QSeries base = QSeries::one(t) + QSeries::monomial(HalfExp::whole(1), RatFunc(1), t) +
                       QSeries::monomial(HalfExp::halves(3), RatFunc(3), t);
        bool ok = (base.pow(3) * base.pow(-3)).agrees_with(QSeries::one(t));
        ok = ok && (mcmahon(t, 2, false) * mcmahon(t, -1, false))
                       .agrees_with(mcmahon(t, 1, false));
        require(ok, "series powers and McMahon exponents");
    }
    {
        bool ok = true;
        for (auto [g, k1, k2] : {std::array{2, -2, -2}, {3, -3, -2}}) {
            GwInput in{g, k1, k2, 1};
            ok = ok && z_trace(in) == z_closed_r1(in) && z_trace(in) == z_proof_form(in);
            ok = ok && n_dt(g, k1, k2) == n_dt_closed(g, k1, k2);
            CorrReport rep = check(g, k1, k2);
            ok = ok && rep.pass && rep.lhs_exp == HalfExp::halves(-(k1 + k2 + 3));
        }
        require(ok, "pipeline spot checks");
    }

    std::printf("selftest passed\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact equivariant GW/DT engine for P2-bundles over a curve"};
    app.require_subcommand(1);

    Common opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_option("--seed", opt.seed,
                        "Seed for the randomized-evaluation oracle (GWDT_SEED env fallback)");
    };

    int g = 1, k1 = 0, k2 = 0, r = 1;
    bool closed_form = false;
    std::optional<long long> trunc;
    int gmin = 1, gmax = 4, kmin = -5, kmax = -2;

    auto add_gk = [&](CLI::App* cmd, bool with_r) {
        cmd->add_option("--g", g, "Genus of the base curve")->required();
        cmd->add_option("--k1", k1, "Degree of the first line bundle")->required();
        cmd->add_option("--k2", k2, "Degree of the second line bundle")->required();
        if (with_r) cmd->add_option("--r", r, "Fiber-class multiplicity");
    };

    CLI::App* gw = app.add_subcommand("gw", "Trace-sum partition function value");
    add_gk(gw, true);
    add_common(gw);
    gw->add_flag("--closed-form", closed_form,
                 "Also evaluate the closed form (r = 1, k1,k2 < -1) and compare");

    CLI::App* dt = app.add_subcommand("dt", "Leading Donaldson-Thomas invariant");
    add_gk(dt, false);
    add_common(dt);

    CLI::App* verify = app.add_subcommand("verify", "Leading-term comparison at one point");
    add_gk(verify, false);
    add_common(verify);
    verify->add_option("--trunc", trunc,
                       "GW-side expansion window as a half-integer numerator (exponent N/2)");

    CLI::App* grid = app.add_subcommand("verify-grid", "Leading-term comparison on a grid");
    grid->add_option("--gmin", gmin, "Smallest genus")->capture_default_str();
    grid->add_option("--gmax", gmax, "Largest genus")->capture_default_str();
    grid->add_option("--kmin", kmin, "Smallest twist degree")->capture_default_str();
    grid->add_option("--kmax", kmax, "Largest twist degree (<= -2)")->capture_default_str();
    grid->add_option("--trunc", trunc,
                     "GW-side expansion window as a half-integer numerator (exponent N/2)");
    add_common(grid);

    CLI::App* selftest = app.add_subcommand("selftest", "Run the module invariant suites");
    add_common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gw->parsed()) return run_gw(g, k1, k2, r, closed_form, opt);
        if (dt->parsed()) return run_dt(g, k1, k2, opt);
        if (verify->parsed()) return run_verify(g, k1, k2, trunc, opt);
        if (grid->parsed()) return run_verify_grid(gmin, gmax, kmin, kmax, trunc, opt);
        if (selftest->parsed()) return run_selftest(opt);
    } catch (const ConsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        // argument combinations that leave the computation undefined (for
        // example a truncation window below the leading exponent)
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
