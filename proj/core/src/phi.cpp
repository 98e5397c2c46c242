#include "gwdt/phi.hpp"

namespace gwdt {

PhiLaurent PhiLaurent::monomial(int phi_exp, RatFunc c)
{
    PhiLaurent p;
    p.insert(phi_exp, std::move(c));
    return p;
}

RatFunc PhiLaurent::coeff(int phi_exp) const
{
    auto it = t_.find(phi_exp);
    return it == t_.end() ? RatFunc() : it->second;
}

bool PhiLaurent::is_homogeneous_of(int k) const
{
    for (const auto& [e, c] : t_)
        if (e != k) return false;
    return true;
}

void PhiLaurent::insert(int e, RatFunc c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(e, std::move(c));
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

PhiLaurent PhiLaurent::operator-() const
{
    PhiLaurent r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

PhiLaurent& PhiLaurent::operator+=(const PhiLaurent& o)
{
    for (const auto& [e, c] : o.t_) insert(e, c);
    return *this;
}

PhiLaurent operator*(const PhiLaurent& a, const PhiLaurent& b)
{
    PhiLaurent r;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_)
            r.insert(ea + eb, ca * cb);
    return r;
}

PhiLaurent PhiLaurent::scaled(const RatFunc& c) const
{
    PhiLaurent r;
    if (c.is_zero()) return r;
    for (const auto& [e, cc] : t_) r.insert(e, cc * c);
    return r;
}

PhiLaurent PhiLaurent::swap12() const
{
    PhiLaurent r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, c.swap12());
    return r;
}

std::string PhiLaurent::str() const
{
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : t_) {
        std::string cs = c.str();
        if (render_parenthesized(c)) cs = "(" + cs + ")";
        std::string piece = cs + " * phi^" + std::to_string(e);
        if (out.empty()) out = piece;
        else if (piece[0] == '-') out += " - " + piece.substr(1);
        else out += " + " + piece;
    }
    return out;
}

QSeries phi_to_q(const PhiLaurent& x, HalfExp trunc)
{
    QSeries acc(trunc);
    for (const auto& [k, c] : x.terms()) {
        // c * phi^k -> c * q^(-k/2) * (1+q)^k
        HalfExp shift = HalfExp::halves(-k);
        if (shift >= trunc) continue;  // entirely beyond the window
        HalfExp local = trunc - shift;
        QSeries base = QSeries::one(local) +
                       QSeries::monomial(HalfExp::whole(1), RatFunc(1), local);
        acc = acc + base.pow(k).shifted(shift).scaled(c);
    }
    return acc;
}

}  // namespace gwdt
