#pragma once

#include "gwdt/phi.hpp"

#include <array>
#include <vector>

namespace gwdt {

/// 3x3 matrix over PhiLaurent: the home of the level-structure operators on
/// the three torus-fixed points of the P^2 fiber.
class Op3 {
public:
    Op3() = default;

    static Op3 identity();

    PhiLaurent& at(int r, int c) { return m_[3 * r + c]; }
    const PhiLaurent& at(int r, int c) const { return m_[3 * r + c]; }

    Op3 operator+(const Op3& o) const;
    Op3 operator*(const Op3& o) const;
    Op3 pow(int n) const;  // n >= 0

    PhiLaurent trace() const;

    friend bool operator==(const Op3& a, const Op3& b) { return a.m_ == b.m_; }

private:
    std::array<PhiLaurent, 9> m_;
};

/// The five basic operators plus the named combinations G = A + B (genus
/// adding) and U1^-1 = M1 + N, U2^-1 = M2 + N (level annihilation).
struct TqftOperators {
    Op3 A, B, M1, M2, N;
    Op3 G, U1inv, U2inv;
};

/// Builds the operator set. Entry shapes: A diagonal at phi-degree 0, B full
/// at degree 3, M1/M2 diagonal at degree -1, N row-constant at degree 2.
TqftOperators build_operators();

/// Dynamic-programming table of interleaved products: at(a,b) is the sum of
/// all words containing a copies of U and b copies of V, built from
/// W(a,b) = U*W(a-1,b) + V*W(a,b-1) with W(0,0) = I.
class InterleaveTable {
public:
    InterleaveTable(const Op3& U, const Op3& V, int amax, int bmax);
    const Op3& at(int a, int b) const { return w_[idx(a, b)]; }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * (bmax_ + 1) + b; }
    int bmax_;
    std::vector<Op3> w_;
};

/// Sum of all C(a+b, a) interleaved words of a U's and b V's.
Op3 interleave_sum(const Op3& U, const Op3& V, int a, int b);

}  // namespace gwdt
