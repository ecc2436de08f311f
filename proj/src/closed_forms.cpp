#include "imago/closed_forms.hpp"

#include <numeric>

#include "imago/errors.hpp"
#include "imago/field.hpp"

namespace imago {

BigRatio commutator_cyclic_ratio(unsigned long n) {
    if (n < 1) throw DomainError("cyclic order must be >= 1");
    return make_ratio(1, n);
}

BigRatio abelian_power_ratio(const std::vector<BigInt>& exponents, unsigned long k,
                             unsigned long t) {
    if (k < 1 || t < 1) throw DomainError("k and t must be >= 1");
    bool all_zero = true;
    BigInt a = 0;
    for (const auto& e : exponents) {
        if (e != 0) all_zero = false;
        BigInt abs_e = abs(e);
        mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), abs_e.get_mpz_t());
    }
    if (all_zero) throw DomainError("exponent vector must not be all zero");
    BigInt d;
    BigInt bk = k;
    mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), bk.get_mpz_t());
    BigInt den;
    mpz_pow_ui(den.get_mpz_t(), d.get_mpz_t(), t);
    return make_ratio(1, den);
}

static void check_gl2_power_pre(unsigned long q, const BigInt& M) {
    unsigned p, r;
    if (!prime_power(q, p, r))
        throw DomainError(std::to_string(q) + " is not a prime power");
    if (M % p != 0)
        throw DomainError("p = " + std::to_string(p) + " does not divide M = " + M.get_str());
    BigInt qq = BigInt(q) * q - 1;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), qq.get_mpz_t(), M.get_mpz_t());
    if (g != 1)
        throw DomainError("gcd(q^2-1, M) = " + g.get_str() + " != 1 for q = " +
                          std::to_string(q) + ", M = " + M.get_str());
}

BigInt gl2_power_image_size(unsigned long q, const BigInt& M) {
    check_gl2_power_pre(q, M);
    BigInt bq = q;
    return (bq * bq - 1) * (bq * bq - bq) - (bq - 1) * (bq * bq - 1);
}

BigRatio gl2_power_ratio(unsigned long q, const BigInt& M) {
    check_gl2_power_pre(q, M);
    return make_ratio(q - 1, q);
}

AdmissibilityReport admissible_exponents(const BigInt& M, unsigned count) {
    if (M < 2) throw DomainError("M must be >= 2");
    if (M % 6 == 0) throw DomainError("6 | M is the excluded case");

    AdmissibilityReport rep;
    rep.M = M;
    BigInt rest = M;
    for (BigInt d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            unsigned e = 0;
            while (rest % d == 0) {
                rest /= d;
                ++e;
            }
            rep.prime_factorization.emplace_back(d, e);
        }
    }
    if (rest > 1) rep.prime_factorization.emplace_back(rest, 1);
    rep.p1 = rep.prime_factorization.front().first;

    // b_i = multiplicative order of p1^2 modulo p_i
    BigInt p1sq = rep.p1 * rep.p1;
    for (std::size_t i = 1; i < rep.prime_factorization.size(); ++i) {
        const BigInt& pi = rep.prime_factorization[i].first;
        if (p1sq % pi == 1)
            throw DomainError("p1^2 = 1 mod " + pi.get_str() +
                              "; the order argument does not apply");
        BigInt acc = p1sq % pi;
        unsigned long b = 1;
        while (acc != 1) {
            acc = acc * p1sq % pi;
            ++b;
        }
        rep.b_list.push_back(b);
        rep.b = std::lcm(rep.b, b);
    }

    // every candidate is verified directly by gcd
    for (unsigned long r = 1; rep.admissible_r.size() < count; ++r) {
        BigInt v;
        mpz_pow_ui(v.get_mpz_t(), rep.p1.get_mpz_t(), 2 * r);
        v -= 1;
        BigInt g;
        mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), M.get_mpz_t());
        if (g == 1) rep.admissible_r.push_back(r);
        if (r > 100000) throw DomainError("no admissible exponents found");
    }
    return rep;
}

ConjecturalRatio engel_sl2_conjectural_ratio(unsigned i, unsigned long q) {
    if (i < 1) throw DomainError("Engel index must be >= 1");
    unsigned p, r;
    if (!prime_power(q, p, r))
        throw DomainError(std::to_string(q) + " is not a prime power");
    BigInt ord = BigInt(q) * (BigInt(q) * q - 1);
    return {make_ratio(ord - 1, ord), true};
}

}  // namespace imago
