#include "gwdt/series.hpp"

#include <stdexcept>

namespace gwdt {

QSeries QSeries::one(HalfExp trunc)
{
    QSeries s(trunc);
    s.insert(HalfExp::whole(0), RatFunc(1));
    return s;
}

QSeries QSeries::monomial(HalfExp e, RatFunc c, HalfExp trunc)
{
    QSeries s(trunc);
    s.insert(e, std::move(c));
    return s;
}

void QSeries::insert(HalfExp e, RatFunc c)
{
    if (c.is_zero() || e >= trunc_) return;
    auto [it, fresh] = t_.try_emplace(e, std::move(c));
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

RatFunc QSeries::coeff(HalfExp e) const
{
    if (e >= trunc_)
        throw std::out_of_range("QSeries::coeff: exponent at or beyond truncation order");
    auto it = t_.find(e);
    return it == t_.end() ? RatFunc() : it->second;
}

QSeries QSeries::operator+(const QSeries& o) const
{
    QSeries r(std::min(trunc_, o.trunc_));
    for (const auto& [e, c] : t_) r.insert(e, c);
    for (const auto& [e, c] : o.t_) r.insert(e, c);
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const
{
    HalfExp t = std::min(trunc_ + o.order_or_trunc(), o.trunc_ + order_or_trunc());
    QSeries r(t);
    for (const auto& [e1, c1] : t_) {
        if (e1 + o.order_or_trunc() >= t) break;
        for (const auto& [e2, c2] : o.t_) {
            if (e1 + e2 >= t) break;
            r.insert(e1 + e2, c1 * c2);
        }
    }
    return r;
}

QSeries QSeries::pow(int n) const
{
    if (n == 0) return one(trunc_);
    if (n < 0) {
        // x = c*q^m*(1 + u): invert the unit part by a geometric series,
        // then raise to the positive power.
        if (t_.empty())
            throw std::domain_error("QSeries::pow: inverting a zero-to-truncation series");
        HalfExp m = t_.begin()->first;
        RatFunc c = t_.begin()->second;
        QSeries unit = shifted(-m).scaled(c.inverse());  // 1 + v with ord(v) > 0
        QSeries neg_v(unit.trunc_);
        for (const auto& [e, cc] : unit.t_)
            if (e != HalfExp::whole(0)) neg_v.insert(e, -cc);
        // (1 + v)^-1 = sum of (-v)^j; stop once the next power clears the window.
        QSeries inv = one(unit.trunc_);
        QSeries term = one(unit.trunc_);
        while (true) {
            term = term * neg_v;
            if (term.t_.empty() || term.t_.begin()->first >= unit.trunc_) break;
            inv = inv + term;
        }
        QSeries xinv = inv.scaled(c.inverse()).shifted(-m);
        return xinv.pow(-n);
    }
    QSeries acc = one(trunc_), base = *this;
    int k = n;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

QSeries QSeries::scaled(const RatFunc& c) const
{
    QSeries r(trunc_);
    for (const auto& [e, cc] : t_) r.insert(e, cc * c);
    return r;
}

QSeries QSeries::shifted(HalfExp d) const
{
    QSeries r(trunc_ + d);
    for (const auto& [e, c] : t_) r.t_.emplace(e + d, c);
    return r;
}

std::pair<HalfExp, RatFunc> QSeries::leading_term() const
{
    if (t_.empty())
        throw std::domain_error("QSeries::leading_term: series is zero up to truncation");
    return *t_.begin();
}

bool QSeries::agrees_with(const QSeries& o) const
{
    HalfExp t = std::min(trunc_, o.trunc_);
    for (const auto& [e, c] : t_) {
        if (e >= t) break;
        if (o.coeff(e) != c) return false;
    }
    for (const auto& [e, c] : o.t_) {
        if (e >= t) break;
        if (coeff(e) != c) return false;
    }
    return true;
}

std::string QSeries::str() const
{
    std::string out;
    for (const auto& [e, c] : t_) {
        std::string cs = c.str();
        if (render_parenthesized(c)) cs = "(" + cs + ")";
        std::string piece = cs + " * q^(" + e.str() + ")";
        if (out.empty()) out = piece;
        else if (piece[0] == '-') out += " - " + piece.substr(1);
        else out += " + " + piece;
    }
    std::string tail = "O(q^(" + trunc_.str() + "))";
    return out.empty() ? tail : out + " + " + tail;
}

QSeries mcmahon(HalfExp trunc, int exponent, bool negate_q)
{
    if (trunc < HalfExp::whole(0))
        throw std::invalid_argument("mcmahon: negative truncation order");
    QSeries acc = QSeries::one(trunc);
    for (long long n = 1; HalfExp::whole(n) < trunc; ++n) {
        long sign = (negate_q && (n % 2)) ? -1 : 1;
        // factor (1 - (sign) q^n)^(-n*exponent)
        QSeries base = QSeries::one(trunc) +
                       QSeries::monomial(HalfExp::whole(n), RatFunc(-sign), trunc);
        acc = acc * base.pow(static_cast<int>(-n) * exponent);
    }
    return acc;
}

}  // namespace gwdt
