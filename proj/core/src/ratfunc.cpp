#include "gwdt/ratfunc.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace gwdt {

namespace {

/// Candidate forms for numerator factorization: the axis and difference
/// forms first, then every normalized form with coefficients in [-4, 4].
/// Large enough for every numerator this engine is asked to invert; general
/// factorization is out of scope.
const std::vector<LinForm>& candidate_forms()
{
    static const std::vector<LinForm> forms = [] {
        std::vector<LinForm> v;
        std::set<LinForm> seen;
        auto push = [&](long i, long j, long l) {
            auto f = LinForm::normalize(i, j, l).first;
            if (seen.insert(f).second) v.push_back(f);
        };
        push(1, 0, 0);
        push(0, 1, 0);
        push(0, 0, 1);
        push(1, -1, 0);
        push(1, 0, -1);
        push(0, 1, -1);
        for (int i = -4; i <= 4; ++i)
            for (int j = -4; j <= 4; ++j)
                for (int l = -4; l <= 4; ++l)
                    if (i || j || l) push(i, j, l);
        return v;
    }();
    return forms;
}

/// Per-variable degree support of p.
std::array<bool, 3> var_support(const MultiPoly& p)
{
    std::array<bool, 3> s{false, false, false};
    for (const auto& [e, c] : p.terms()) {
        s[0] = s[0] || e.e0 > 0;
        s[1] = s[1] || e.e1 > 0;
        s[2] = s[2] || e.e2 > 0;
    }
    return s;
}

long fits_long(const mpz_class& z)
{
    if (!z.fits_slong_p()) throw std::overflow_error("RatFunc: form coefficient overflow");
    return z.get_si();
}

/// Pull one linear factor out of a degree-1 homogeneous polynomial:
/// p = scalar * form. Fails when the coefficient ratios are not rational.
std::optional<std::pair<GaussRat, LinForm>> extract_linear(const MultiPoly& p)
{
    GaussRat lead = p.terms().begin()->second;
    GaussRat inv = lead.inverse();
    std::array<Rat, 3> q;
    const ExpTriple axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int v = 0; v < 3; ++v) {
        GaussRat r = p.coeff(axes[v]) * inv;
        if (!r.is_real()) return std::nullopt;
        q[v] = r.re();
    }
    mpz_class d(1);
    for (const auto& r : q) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), r.den().get_mpz_t());
    std::array<long, 3> n{};
    for (int v = 0; v < 3; ++v) n[v] = fits_long(q[v].num() * (d / q[v].den()));
    auto [form, s] = LinForm::normalize(n[0], n[1], n[2]);
    GaussRat scalar = lead * GaussRat(Rat(mpq_class(mpq_class(s) / d)));
    return std::make_pair(scalar, form);
}

/// Factor p as scalar * prod forms^e by trial division; nullopt when a
/// factor of degree >= 2 resists every candidate.
std::optional<std::pair<GaussRat, RatFunc::DenMap>> factor_into_forms(MultiPoly p)
{
    GaussRat scalar(1);
    RatFunc::DenMap fs;
    for (;;) {
        if (p.is_constant()) {
            scalar *= p.constant_value();
            return std::make_pair(scalar, fs);
        }
        if (p.homogeneous_degree() == 1) {
            auto lin = extract_linear(p);
            if (!lin) return std::nullopt;
            scalar *= lin->first;
            ++fs[lin->second];
            return std::make_pair(scalar, fs);
        }
        auto support = var_support(p);
        bool found = false;
        for (const auto& f : candidate_forms()) {
            bool ok = true;
            for (int v = 0; v < 3; ++v)
                if (f.coeffs()[v] != 0 && !support[v]) ok = false;
            if (!ok) continue;
            if (auto q = p.div_linform(f)) {
                ++fs[f];
                p = std::move(*q);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
}

}  // namespace

RatFunc::RatFunc(MultiPoly num, DenMap den) : num_(std::move(num)), den_(std::move(den))
{
    for (const auto& [f, e] : den_)
        if (e <= 0) throw std::invalid_argument("RatFunc: nonpositive denominator exponent");
    reduce();
}

RatFunc RatFunc::form_power(long i, long j, long l, int e)
{
    auto [form, scale] = LinForm::normalize(i, j, l);
    if (e == 0) return RatFunc(1);
    GaussRat s(1);
    Rat sc(scale);
    for (int k = 0; k < std::abs(e); ++k) s *= GaussRat(e > 0 ? sc : sc.inverse());
    if (e > 0) {
        MultiPoly p(s);
        for (int k = 0; k < e; ++k) p = p * form.poly();
        return RatFunc(std::move(p));
    }
    return RatFunc(MultiPoly(s), DenMap{{form, -e}});
}

void RatFunc::reduce()
{
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto q = num_.div_linform(it->first);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
}

MultiPoly RatFunc::den_poly() const
{
    MultiPoly p(1);
    for (const auto& [f, e] : den_)
        for (int k = 0; k < e; ++k) p = p * f.poly();
    return p;
}

RatFunc RatFunc::operator-() const
{
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    // Common denominator: per-form max of the two exponent maps.
    DenMap common = den_;
    for (const auto& [f, e] : o.den_) {
        auto it = common.find(f);
        if (it == common.end()) common.emplace(f, e);
        else it->second = std::max(it->second, e);
    }
    auto complement = [&](const DenMap& own) {
        MultiPoly p(1);
        for (const auto& [f, e] : common) {
            auto it = own.find(f);
            int missing = e - (it == own.end() ? 0 : it->second);
            for (int k = 0; k < missing; ++k) p = p * f.poly();
        }
        return p;
    };
    MultiPoly n = num_ * complement(den_) + o.num_ * complement(o.den_);
    *this = RatFunc(std::move(n), std::move(common));
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    num_ = num_ * o.num_;
    for (const auto& [f, e] : o.den_) den_[f] += e;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const
{
    if (is_zero()) throw std::domain_error("RatFunc: division by zero");
    auto fac = factor_into_forms(num_);
    if (!fac)
        throw std::domain_error("RatFunc: numerator is not a product of linear forms");
    MultiPoly n = den_poly().scaled(fac->first.inverse());
    return RatFunc(std::move(n), std::move(fac->second));
}

RatFunc RatFunc::pow(int n) const
{
    if (n < 0) return inverse().pow(-n);
    RatFunc acc(1), base = *this;
    while (n > 0) {
        if (n & 1) acc *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return acc;
}

bool operator==(const RatFunc& a, const RatFunc& b)
{
    return a.num_ * b.den_poly() == b.num_ * a.den_poly();
}

GaussRat RatFunc::eval(const EvalPoint& t) const
{
    GaussRat d(1);
    for (const auto& [f, e] : den_) {
        GaussRat fv = f.eval(t);
        if (fv.is_zero())
            throw std::domain_error("RatFunc::eval: denominator form vanishes at point");
        for (int k = 0; k < e; ++k) d *= fv;
    }
    return num_.eval(t) / d;
}

std::optional<int> RatFunc::homogeneous_degree() const
{
    auto nd = num_.homogeneous_degree();
    if (!nd) return std::nullopt;
    int dd = 0;
    for (const auto& [f, e] : den_) dd += e;
    return *nd - dd;
}

RatFunc RatFunc::swap12() const
{
    MultiPoly n = num_.swap12();
    DenMap d;
    for (const auto& [f, e] : den_) {
        auto [g, s] = f.swap12();
        d[g] += e;
        if (s < 0 && (e % 2)) n = -n;
    }
    return RatFunc(std::move(n), std::move(d));
}

std::string RatFunc::str() const
{
    if (den_.empty()) return num_.str();
    std::string d;
    for (const auto& [f, e] : den_) {
        if (!d.empty()) d += "*";
        d += "(" + f.str() + ")";
        if (e > 1) d += "^" + std::to_string(e);
    }
    return "(" + num_.str() + ") / " + d;
}

bool render_parenthesized(const RatFunc& r)
{
    if (!r.denominator_empty()) return true;
    const MultiPoly& n = r.numerator();
    if (n.term_count() > 1) return true;
    if (n.is_zero()) return false;
    if (!n.is_constant()) return true;
    GaussRat c = n.constant_value();
    return !c.re().is_zero() && !c.im().is_zero();
}

/* -------- DualP -------- */

DualP DualP::inverse() const
{
    if (a.is_zero()) throw std::domain_error("DualP: not invertible (zero [p]^0 part)");
    RatFunc ai = a.inverse();
    return {ai, -(ai * ai * b)};
}

DualP DualP::pow(int n) const
{
    if (n < 0) return inverse().pow(-n);
    DualP acc = one(), base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

}  // namespace gwdt
