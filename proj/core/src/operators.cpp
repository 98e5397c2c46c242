#include "gwdt/operators.hpp"

#include <stdexcept>

namespace gwdt {

namespace {

MultiPoly t(int v) { return MultiPoly::var(v); }

/// (t_i - t_j)(t_i - t_k) for row i with {j,k} the other two indices.
RatFunc row_denominator(int i)
{
    int j = (i + 1) % 3, k = (i + 2) % 3;
    return RatFunc((t(i) - t(j)) * (t(i) - t(k)));
}

}  // namespace

Op3 Op3::identity()
{
    Op3 r;
    for (int i = 0; i < 3; ++i) r.at(i, i) = PhiLaurent::one();
    return r;
}

Op3 Op3::operator+(const Op3& o) const
{
    Op3 r;
    for (int i = 0; i < 9; ++i) r.m_[i] = m_[i] + o.m_[i];
    return r;
}

Op3 Op3::operator*(const Op3& o) const
{
    Op3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            PhiLaurent acc;
            for (int k = 0; k < 3; ++k) acc += at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

Op3 Op3::pow(int n) const
{
    if (n < 0) throw std::invalid_argument("Op3::pow: negative power");
    Op3 acc = identity(), base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

PhiLaurent Op3::trace() const
{
    PhiLaurent acc;
    for (int i = 0; i < 3; ++i) acc += at(i, i);
    return acc;
}

TqftOperators build_operators()
{
    TqftOperators ops;

    for (int i = 0; i < 3; ++i)
        ops.A.at(i, i) = PhiLaurent::monomial(0, row_denominator(i));

    // B[i][j] = n_ij / ((t_i - t_a)(t_i - t_b)) * phi^3 with numerators
    // n_ij = t_i + t_j - 2 t_k (k the third index) off the diagonal and
    // n_ii = 2 (2 t_i - t_j - t_k) on it.
    for (int i = 0; i < 3; ++i) {
        RatFunc den_inv = row_denominator(i).inverse();
        for (int j = 0; j < 3; ++j) {
            MultiPoly numer;
            if (i == j) {
                int a = (i + 1) % 3, b = (i + 2) % 3;
                numer = (t(i).scaled(GaussRat(2)) - t(a) - t(b)).scaled(GaussRat(2));
            } else {
                int k = 3 - i - j;
                numer = t(i) + t(j) - t(k).scaled(GaussRat(2));
            }
            ops.B.at(i, j) = PhiLaurent::monomial(3, RatFunc(numer) * den_inv);
        }
    }

    ops.M1.at(0, 0) = PhiLaurent::monomial(-1, RatFunc(t(0) - t(1)));
    ops.M1.at(2, 2) = PhiLaurent::monomial(-1, RatFunc(t(2) - t(1)));

    ops.M2.at(0, 0) = PhiLaurent::monomial(-1, RatFunc(t(0) - t(2)));
    ops.M2.at(1, 1) = PhiLaurent::monomial(-1, RatFunc(t(1) - t(2)));

    for (int i = 0; i < 3; ++i) {
        RatFunc entry = row_denominator(i).inverse();
        for (int j = 0; j < 3; ++j)
            ops.N.at(i, j) = PhiLaurent::monomial(2, entry);
    }

    ops.G = ops.A + ops.B;
    ops.U1inv = ops.M1 + ops.N;
    ops.U2inv = ops.M2 + ops.N;
    return ops;
}

InterleaveTable::InterleaveTable(const Op3& U, const Op3& V, int amax, int bmax)
    : bmax_(bmax)
{
    if (amax < 0 || bmax < 0)
        throw std::invalid_argument("InterleaveTable: negative word counts");
    w_.resize(static_cast<std::size_t>(amax + 1) * (bmax + 1));
    for (int a = 0; a <= amax; ++a)
        for (int b = 0; b <= bmax; ++b) {
            if (a == 0 && b == 0) {
                w_[idx(0, 0)] = Op3::identity();
                continue;
            }
            Op3 acc;
            if (a > 0) acc = acc + U * at(a - 1, b);
            if (b > 0) acc = acc + V * at(a, b - 1);
            w_[idx(a, b)] = acc;
        }
}

Op3 interleave_sum(const Op3& U, const Op3& V, int a, int b)
{
    return InterleaveTable(U, V, a, b).at(a, b);
}

}  // namespace gwdt
