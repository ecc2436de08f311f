#include "imago/planner.hpp"

#include "imago/errors.hpp"

namespace imago {

RatioPlan approximate(const BigRatio& c, const BigRatio& epsilon) {
    if (!(c > 0 && c < 1)) throw DomainError("target must lie in (0,1)");
    if (!(epsilon > 0)) throw DomainError("epsilon must be positive");

    RatioPlan plan;
    plan.target = c;

    // unique m >= 0 with 1/2 <= d = 2^m c < 1
    BigRatio half = make_ratio(1, 2);
    unsigned long m = 0;
    BigRatio d = c;
    while (d < half) {
        d *= 2;
        ++m;
    }

    if (d == half) {
        plan.m = m + 1;
        plan.achieved = c;
        plan.error = 0;
        plan.exact = true;
        return plan;
    }
    plan.m = m;

    BigRatio scale = pow2_inv(m);     // 2^-m
    BigRatio prod_v = 1;              // product of the v_j chosen so far
    BigRatio residual = d;            // d / prod_v, always in [1/2, 1)
    unsigned long n = 1;

    for (unsigned iter = 0; iter < 10000; ++iter) {
        // locate residual in [1 - 2^-n, 1 - 2^-(n+1)); n never decreases
        while (one_minus_pow2_inv(n + 1) <= residual) ++n;

        BigRatio u = one_minus_pow2_inv(n);
        if (residual == u) {
            plan.field_sizes.push_back(n);
            plan.achieved = c;
            plan.error = 0;
            plan.exact = true;
            return plan;
        }

        BigRatio v = one_minus_pow2_inv(n + 1);
        plan.field_sizes.push_back(n + 1);
        prod_v *= v;
        residual = d / prod_v;

        BigRatio err = scale * (prod_v - d);
        if (err <= epsilon) {
            plan.achieved = scale * prod_v;
            plan.error = err;
            plan.exact = (err == 0);
            return plan;
        }
    }
    throw DomainError("planner iteration cap reached; epsilon too small?");
}

BigRatio plan_ratio(const RatioPlan& plan) {
    BigRatio out = pow2_inv(plan.m);
    for (unsigned long s : plan.field_sizes) out *= one_minus_pow2_inv(s);
    return out;
}

GroupSpec realize(const RatioPlan& plan, const BigInt& M) {
    if (M < 2 || mpz_popcount(M.get_mpz_t()) != 1)
        throw DomainError("M must be 2^a with a >= 1, got " + M.get_str());
    if (plan.m == 0 && plan.field_sizes.empty()) return GroupSpec::cyclic(1);

    GroupSpec spec;
    // x^M is trivial on Z/2Z for every even M: each copy contributes 1/2
    for (unsigned long i = 0; i < plan.m; ++i)
        spec.factors.push_back({GroupSpec::Factor::Kind::Cyclic, 2, 0, 0});
    for (unsigned long s : plan.field_sizes) {
        if (s < 1 || s >= 63) throw DomainError("field size exponent out of range");
        spec = spec.times(GroupSpec::gl2(1ul << s));
    }
    return spec;
}

}  // namespace imago
