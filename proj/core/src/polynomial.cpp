#include "gwdt/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace gwdt {

namespace {

constexpr int kMaxExp = 1 << 20;

int checked_add(int a, int b)
{
    int s = a + b;
    if (s > kMaxExp) throw std::overflow_error("MultiPoly: exponent overflow");
    return s;
}

const char* kVarNames[3] = {"t0", "t1", "t2"};

}  // namespace

ExpTriple ExpTriple::operator+(const ExpTriple& o) const
{
    return {checked_add(e0, o.e0), checked_add(e1, o.e1), checked_add(e2, o.e2)};
}

/* -------- LinForm -------- */

std::pair<LinForm, long> LinForm::normalize(long i, long j, long l)
{
    if (i == 0 && j == 0 && l == 0)
        throw std::invalid_argument("LinForm: zero form");
    long g = std::gcd(std::gcd(std::abs(i), std::abs(j)), std::abs(l));
    long lead = i != 0 ? i : (j != 0 ? j : l);
    long scale = lead > 0 ? g : -g;
    return {LinForm(static_cast<int>(i / scale), static_cast<int>(j / scale),
                    static_cast<int>(l / scale)),
            scale};
}

MultiPoly LinForm::poly() const
{
    return MultiPoly::linear(GaussRat(c_[0]), GaussRat(c_[1]), GaussRat(c_[2]));
}

GaussRat LinForm::eval(const EvalPoint& t) const
{
    GaussRat acc;
    for (int v = 0; v < 3; ++v) acc += GaussRat(c_[v]) * t[v];
    return acc;
}

std::pair<LinForm, int> LinForm::swap12() const
{
    auto [f, s] = normalize(c_[0], c_[2], c_[1]);
    return {f, static_cast<int>(s)};  // gcd is already 1, so |s| = 1
}

std::string LinForm::str() const
{
    std::string s;
    for (int v = 0; v < 3; ++v) {
        int c = c_[v];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? "+" : "-";
        else if (c < 0) s += "-";
        int a = std::abs(c);
        if (a != 1) s += std::to_string(a) + "*";
        s += kVarNames[v];
    }
    return s;
}

/* -------- MultiPoly -------- */

MultiPoly MultiPoly::var(int which)
{
    ExpTriple e;
    if (which == 0) e.e0 = 1;
    else if (which == 1) e.e1 = 1;
    else if (which == 2) e.e2 = 1;
    else throw std::invalid_argument("MultiPoly::var: index out of range");
    return monomial(e, GaussRat(1));
}

MultiPoly MultiPoly::monomial(ExpTriple e, GaussRat c)
{
    MultiPoly p;
    p.insert(e, std::move(c));
    return p;
}

MultiPoly MultiPoly::linear(GaussRat a, GaussRat b, GaussRat c)
{
    MultiPoly p;
    p.insert({1, 0, 0}, std::move(a));
    p.insert({0, 1, 0}, std::move(b));
    p.insert({0, 0, 1}, std::move(c));
    return p;
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == ExpTriple{});
}

GaussRat MultiPoly::constant_value() const
{
    auto it = terms_.find(ExpTriple{});
    return it == terms_.end() ? GaussRat() : it->second;
}

GaussRat MultiPoly::coeff(const ExpTriple& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussRat() : it->second;
}

int MultiPoly::degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.total());
    return d;
}

std::optional<int> MultiPoly::homogeneous_degree() const
{
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.total();
    for (const auto& [e, c] : terms_)
        if (e.total() != d) return std::nullopt;
    return d;
}

void MultiPoly::insert(const ExpTriple& e, GaussRat c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, std::move(c));
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_) insert(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_) insert(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.insert(ea + eb, ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const GaussRat& c) const
{
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
    return r;
}

std::optional<MultiPoly> MultiPoly::div_linform(const LinForm& f) const
{
    // Lex-descending leading variable of f; its coefficient is positive by
    // normalization. The leading monomial of the remainder strictly decreases
    // each round, so this terminates.
    int lead = f.i() != 0 ? 0 : (f.j() != 0 ? 1 : 2);
    GaussRat lc(f.coeffs()[lead]);
    MultiPoly fp = f.poly();
    MultiPoly rem = *this, quot;
    while (!rem.terms_.empty()) {
        const auto& [e, c] = *rem.terms_.begin();
        ExpTriple q = e;
        int& comp = lead == 0 ? q.e0 : (lead == 1 ? q.e1 : q.e2);
        if (comp == 0) return std::nullopt;
        --comp;
        GaussRat qc = c / lc;
        quot.terms_.emplace(q, qc);
        rem -= monomial(q, qc) * fp;
    }
    return quot;
}

GaussRat MultiPoly::eval(const EvalPoint& t) const
{
    GaussRat acc;
    for (const auto& [e, c] : terms_) {
        GaussRat m = c;
        for (int k = 0; k < e.e0; ++k) m *= t[0];
        for (int k = 0; k < e.e1; ++k) m *= t[1];
        for (int k = 0; k < e.e2; ++k) m *= t[2];
        acc += m;
    }
    return acc;
}

MultiPoly MultiPoly::swap12() const
{
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(ExpTriple{e.e0, e.e2, e.e1}, c);
    return r;
}

std::string MultiPoly::str() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        const int exps[3] = {e.e0, e.e1, e.e2};
        for (int v = 0; v < 3; ++v) {
            if (exps[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += kVarNames[v];
            if (exps[v] > 1) mono += "^" + std::to_string(exps[v]);
        }
        bool composite = !c.re().is_zero() && !c.im().is_zero();
        std::string piece;
        if (mono.empty()) {
            piece = composite ? "(" + c.str() + ")" : c.str();
        } else if (c.is_one()) {
            piece = mono;
        } else if ((-c).is_one()) {
            piece = "-" + mono;
        } else {
            piece = (composite ? "(" + c.str() + ")" : c.str()) + "*" + mono;
        }
        if (out.empty()) {
            out = piece;
        } else if (piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

}  // namespace gwdt
