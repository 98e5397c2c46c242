#pragma once

#include "gwdt/operators.hpp"

namespace gwdt {

/// Inputs for the section-plus-fibers partition function: genus g of the
/// base curve, twist degrees k1, k2 of the two line bundles, and the
/// fiber-class multiplicity r.
struct GwInput {
    int g = 1;
    int k1 = 0;
    int k2 = 0;
    int r = 0;

    /// g >= 1, k1 <= 0, k2 <= 0, r >= 0; throws std::invalid_argument.
    void validate() const;
};

/// Constrained trace sum over interleaved operator products:
///   sum of tr( (A^a,B^b) (M1^m1,N^n1) (M2^m2,N^n2) )
/// over a+b = g-1, m1+n1 = -k1, m2+n2 = -k2, b+n1+n2 = r. Every contribution
/// is phi-homogeneous of degree k1+k2+3r; an empty constraint set gives 0.
PhiLaurent z_trace(const GwInput& in);

/// Closed form at r = 1 (valid for k1, k2 < -1):
///   (t0-t1)^(g-k1-3) (t0-t2)^(g-k2-3)
///   * ((4g-4-k1-k2) t0 - (2g-2-k2) t1 - (2g-2-k1) t2) * phi^(k1+k2+3).
/// Negative exponents land in the denominator. g >= 0 is accepted.
PhiLaurent z_closed_r1(const GwInput& in);

/// Independent three-term reduction of the r = 1 sum:
///   (g-1) tr(A^(g-2) M1^(-k1) M2^(-k2) B)
///   - k1 tr(A^(g-1) M1^(-k1-1) M2^(-k2) N)
///   - k2 tr(A^(g-1) M1^(-k1) M2^(-k2-1) N),
/// with zero-coefficient terms dropped before any matrix power is formed.
PhiLaurent z_proof_form(const GwInput& in);

}  // namespace gwdt
