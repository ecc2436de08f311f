#pragma once

#include <gmpxx.h>

#include <memory>
#include <vector>

namespace imago {

/// F_{p^r} in polynomial basis.  Elements are encoded as integers in
/// [0, q): the base-p digits of a code are the coefficients of the
/// residue polynomial, constant term first.  The modulus is the monic
/// irreducible of degree r whose coefficient vector, read as a base-p
/// integer, is minimal — a fixed modulus makes enumeration order a pure
/// function of (p, r).
class Field {
public:
    using Code = unsigned;

    /// p must be prime, r >= 1.  Deterministic: same (p, r) gives the
    /// same modulus.
    static std::shared_ptr<const Field> make(unsigned p, unsigned r);

    unsigned p() const { return p_; }
    unsigned r() const { return r_; }
    unsigned q() const { return q_; }

    /// Non-leading coefficients c_0..c_{r-1} of the monic modulus.
    /// For r = 1 this is {0}: the modulus is the polynomial t.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    Code zero() const { return 0; }
    Code one() const { return r_ == 0 ? 0 : 1; }

    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const;
    Code neg(Code a) const;
    Code mul(Code a, Code b) const;
    Code inv(Code a) const;  // throws DomainError on 0
    Code pow(Code a, const mpz_class& e) const;

    std::vector<unsigned> coeffs(Code a) const;
    Code from_coeffs(const std::vector<unsigned>& c) const;

    bool operator==(const Field& o) const { return p_ == o.p_ && r_ == o.r_; }

private:
    Field(unsigned p, unsigned r);

    Code mul_generic(Code a, Code b) const;

    unsigned p_, r_, q_;
    std::vector<unsigned> modulus_;
    // Dense tables for small q; the image engine lives on these.
    std::vector<Code> mul_table_;
    std::vector<Code> inv_table_;
    bool tables_ = false;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Element value type: a code bound to its field.
class FqElem {
public:
    FqElem(FieldPtr field, Field::Code code) : field_(std::move(field)), code_(code) {}

    const FieldPtr& field() const { return field_; }
    Field::Code code() const { return code_; }
    std::vector<unsigned> coeffs() const { return field_->coeffs(code_); }

    FqElem operator+(const FqElem& o) const;
    FqElem operator*(const FqElem& o) const;
    FqElem inv() const;
    FqElem pow(const mpz_class& e) const;

    bool operator==(const FqElem& o) const;

private:
    FieldPtr field_;
    Field::Code code_;
};

bool is_prime(unsigned long n);

/// Factors q as p^r; returns false if q is not a prime power >= 2.
bool prime_power(unsigned long q, unsigned& p, unsigned& r);

}  // namespace imago
