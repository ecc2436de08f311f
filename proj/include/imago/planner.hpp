#pragma once

#include <vector>

#include "imago/group.hpp"
#include "imago/rational.hpp"

namespace imago {

/// Output of the greedy dyadic approximation: a target ratio realized as
/// 2^-m * prod_i (1 - 2^-s_i), together with the concrete group carrying it.
struct RatioPlan {
    unsigned long m = 0;                    // cyclic exponent, factor 2^-m
    std::vector<unsigned long> field_sizes; // each s_i >= 2 contributes 1 - 2^-s_i
    BigRatio target = 0;
    BigRatio achieved = 0;
    BigRatio error = 0;                     // |achieved - target|
    bool exact = false;
};

/// Greedy approximation of c in (0,1):
///   (1) pick m >= 0 with 1/2 <= d = 2^m c < 1;
///   (2) repeatedly locate the residual in [1 - 2^-n, 1 - 2^-(n+1)) and
///       divide out v = 1 - 2^-(n+1), recording s = n + 1 (an exact hit on
///       the left endpoint finishes with s = n and error 0);
///   (3) stop once 2^-m (prod v_j - d) <= epsilon.
/// All arithmetic is exact rational.
RatioPlan approximate(const BigRatio& c, const BigRatio& epsilon);

/// Recompute 2^-m * prod (1 - 2^-s_i) from the plan fields.
BigRatio plan_ratio(const RatioPlan& plan);

/// The group on which x^M attains plan.achieved, for M = 2^a:
/// C2^m x GL2(2^{s_1}) x ... x GL2(2^{s_k}).  The empty plan maps to C1.
GroupSpec realize(const RatioPlan& plan, const BigInt& M);

}  // namespace imago
