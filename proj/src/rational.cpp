#include "imago/rational.hpp"

#include "imago/errors.hpp"

namespace imago {

BigRatio make_ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("zero denominator");
    BigRatio r(num, den);
    r.canonicalize();
    return r;
}

BigRatio pow2_inv(unsigned long m) {
    BigInt d = 1;
    d <<= m;
    return make_ratio(1, d);
}

BigRatio one_minus_pow2_inv(unsigned long s) {
    BigInt d = 1;
    d <<= s;
    return make_ratio(d - 1, d);
}

BigRatio parse_ratio(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational", 0);
    // scientific notation: mantissa scaled by a power of ten
    auto epos = text.find_first_of("eE");
    if (epos != std::string::npos) {
        BigRatio mant = parse_ratio(text.substr(0, epos));
        const std::string exp_str = text.substr(epos + 1);
        if (exp_str.empty()) throw ParseError("missing exponent in '" + text + "'", epos + 1);
        long ex;
        try {
            ex = std::stol(exp_str);
        } catch (const std::exception&) {
            throw ParseError("bad exponent in '" + text + "'", epos + 1);
        }
        BigInt ten_pow;
        mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(ex < 0 ? -ex : ex));
        return ex < 0 ? BigRatio(mant / make_ratio(ten_pow, 1))
                      : BigRatio(mant * make_ratio(ten_pow, 1));
    }
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num, den;
        if (num.set_str(text.substr(0, slash), 10) != 0)
            throw ParseError("bad numerator in '" + text + "'", 0);
        if (den.set_str(text.substr(slash + 1), 10) != 0 || den == 0)
            throw ParseError("bad denominator in '" + text + "'", slash + 1);
        return make_ratio(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        BigInt num;
        if (num.set_str(text, 10) != 0)
            throw ParseError("bad integer '" + text + "'", 0);
        return make_ratio(num, 1);
    }
    // Decimal literal: shift the point away and divide by the matching
    // power of ten, keeping everything exact.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
        throw ParseError("bad decimal '" + text + "'", 0);
    BigInt num;
    if (num.set_str(digits, 10) != 0)
        throw ParseError("bad decimal '" + text + "'", 0);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return make_ratio(num, den);
}

std::string ratio_to_string(const BigRatio& r) {
    return r.get_str();
}

double ratio_to_double(const BigRatio& r) {
    return r.get_d();
}

}  // namespace imago
