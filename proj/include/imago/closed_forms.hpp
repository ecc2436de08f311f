#pragma once

#include <utility>
#include <vector>

#include "imago/rational.hpp"

namespace imago {

/// mu(omega, Z/nZ) = 1/n for any word in the commutator subgroup.
BigRatio commutator_cyclic_ratio(unsigned long n);

/// mu(omega, (Z/kZ)^t) for a word whose abelianization is `exponents`:
/// 1/d^t with d = gcd(gcd(exponents), k).  Equals the textbook 1/k^t
/// exactly when k divides every exponent.
BigRatio abelian_power_ratio(const std::vector<BigInt>& exponents, unsigned long k,
                             unsigned long t);

/// |x^M(GL2(q))| = (q^2-1)(q^2-q) - (q-1)(q^2-1), valid when p | M and
/// gcd(q^2-1, M) = 1 (the Jordan classes are exactly what drops out).
BigInt gl2_power_image_size(unsigned long q, const BigInt& M);

/// mu(x^M, GL2(q)) = 1 - 1/q under the same hypotheses.
BigRatio gl2_power_ratio(unsigned long q, const BigInt& M);

struct AdmissibilityReport {
    BigInt M;
    std::vector<std::pair<BigInt, unsigned>> prime_factorization;  // (p_i, t_i), ascending
    BigInt p1;                      // least prime factor
    std::vector<unsigned long> b_list;  // least b > 0 with p1^(2b) = 1 mod p_i, i >= 2
    unsigned long b = 1;            // lcm of b_list (1 when M is a prime power)
    std::vector<unsigned long> admissible_r;  // first `count` r with gcd(p1^(2r)-1, M) = 1
};

/// Field-degree search for the 6-free case: degrees r where GL2(p1^r)
/// carries the closed-form ratio for x^M.  Every returned r is verified
/// directly by gcd.
AdmissibilityReport admissible_exponents(const BigInt& M, unsigned count);

struct ConjecturalRatio {
    BigRatio value;
    bool conjectural;  // valid only for q >= q0(i), q0 not effective
};

/// Engel image on SL2(q) misses only the identity for q large enough:
/// (q(q^2-1) - 1) / q(q^2-1).  Callers must check small q by oracle.
ConjecturalRatio engel_sl2_conjectural_ratio(unsigned i, unsigned long q);

}  // namespace imago
