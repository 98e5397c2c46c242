#pragma once

#include "gwdt/localization.hpp"
#include "gwdt/trace_sum.hpp"

#include <optional>

namespace gwdt {

/// K_X . beta for the section-plus-fiber class.
struct KBeta {
    int value = 0;
};

/// 2g - 5 - k1 - k2: adjunction along the section (normal bundle L1 + L2)
/// plus -3 for a line in the P^2 fiber.
KBeta k_dot_beta(int g, int k1, int k2);

/// Exponent of the reduced-series normalization M(-q)^e on the DT side. The
/// relevant Chern number is not computed by this engine; the factor is
/// 1 + O(q) for every exponent, so it cannot affect the leading term that
/// the checks below assert.
inline constexpr int kMcMahonExponent = 0;

/// Leading q-term of the GW side: z_trace at r = 1, pushed through
/// phi -> q^(-1/2)(1+q), times the scalar (-i)^(-K.beta). The default
/// expansion window is the leading exponent plus two.
std::pair<HalfExp, RatFunc> lhs_leading(int g, int k1, int k2,
                                        std::optional<HalfExp> trunc = std::nullopt);

/// Leading q-term of the DT side: (-q)^(K.beta/2) * q^(1-g) * n_dt, with
/// (-q)^(m/2) read as (i q^(1/2))^m and the reduced-series factor applied at
/// kMcMahonExponent. Only the leading DT coefficient is known, and the
/// truncation order says so.
std::pair<HalfExp, RatFunc> rhs_leading(int g, int k1, int k2);

/// One grid point of the leading-term comparison.
struct CorrReport {
    int g = 0, k1 = 0, k2 = 0;
    HalfExp lhs_exp, rhs_exp;
    RatFunc lhs_coeff, rhs_coeff;
    bool pass = false;
};

/// Compares the two leading terms exactly; failures are reported, never
/// thrown.
CorrReport check(int g, int k1, int k2, std::optional<HalfExp> trunc = std::nullopt);

}  // namespace gwdt
