#include "imago/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "imago/errors.hpp"

namespace imago {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool prime_power(unsigned long q, unsigned& p, unsigned& r) {
    if (q < 2) return false;
    unsigned long base = q;
    for (unsigned long d = 2; d * d <= base; ++d) {
        if (base % d == 0) {
            base = d;
            break;
        }
    }
    if (!is_prime(base)) return false;
    unsigned long v = q;
    unsigned e = 0;
    while (v > 1) {
        if (v % base != 0) return false;
        v /= base;
        ++e;
    }
    p = static_cast<unsigned>(base);
    r = e;
    return true;
}

namespace {

// Dense polynomials over Z/p, coefficient vectors constant term first.
using Poly = std::vector<unsigned>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return trim(out);
}

// Remainder of a modulo monic f.
Poly poly_mod(Poly a, const Poly& f, unsigned p) {
    a = trim(a);
    std::size_t deg_f = f.size() - 1;
    while (a.size() > deg_f) {
        unsigned lead = a.back();
        std::size_t shift = a.size() - 1 - deg_f;
        for (std::size_t i = 0; i < f.size(); ++i) {
            unsigned sub = (lead * f[i]) % p;
            unsigned& c = a[i + shift];
            c = (c + p - sub) % p;
        }
        a = trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
    auto inv_mod_p = [p](unsigned x) {
        unsigned result = 1, base = x % p, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        // make b monic so poly_mod applies
        unsigned s = inv_mod_p(b.back());
        Poly bm = b;
        for (auto& c : bm) c = c * s % p;
        Poly r = poly_mod(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^i) mod f by repeated p-th powering.
Poly frobenius_power(const Poly& f, unsigned p, unsigned i) {
    Poly x = {0, 1};
    Poly acc = poly_mod(x, f, p);
    for (unsigned step = 0; step < i; ++step) {
        Poly pw = {1};  // acc^p
        Poly base = acc;
        unsigned e = p;
        while (e) {
            if (e & 1) pw = poly_mod(poly_mul(pw, base, p), f, p);
            base = poly_mod(poly_mul(base, base, p), f, p);
            e >>= 1;
        }
        acc = pw;
    }
    return acc;
}

bool is_irreducible(const Poly& f, unsigned p) {
    std::size_t r = f.size() - 1;
    if (r == 1) return true;
    for (unsigned i = 1; i <= r / 2; ++i) {
        Poly g = frobenius_power(f, p, i);  // x^(p^i) mod f
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        g = trim(std::move(g));
        Poly d = poly_gcd(f, g, p);
        if (d.size() > 1) return false;
    }
    return true;
}

}  // namespace

Field::Field(unsigned p, unsigned r) : p_(p), r_(r) {
    unsigned long q = 1;
    for (unsigned i = 0; i < r; ++i) {
        q *= p;
        if (q > (1u << 30)) throw DomainError("field too large");
    }
    q_ = static_cast<unsigned>(q);

    if (r == 1) {
        modulus_ = {0};  // the polynomial t
    } else {
        // minimal monic irreducible by base-p encoding of (c_0..c_{r-1})
        bool found = false;
        for (unsigned long code = 0; code < q; ++code) {
            Poly f(r + 1, 0);
            unsigned long v = code;
            for (unsigned i = 0; i < r; ++i) {
                f[i] = v % p;
                v /= p;
            }
            f[r] = 1;
            if (is_irreducible(f, p)) {
                modulus_.assign(f.begin(), f.end() - 1);
                found = true;
                break;
            }
        }
        if (!found) throw DomainError("no irreducible modulus found");
    }

    if (q_ <= 512) {
        mul_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (Code a = 0; a < q_; ++a)
            for (Code b = 0; b <= a; ++b) {
                Code m = mul_generic(a, b);
                mul_table_[static_cast<std::size_t>(a) * q_ + b] = m;
                mul_table_[static_cast<std::size_t>(b) * q_ + a] = m;
            }
        inv_table_.assign(q_, 0);
        for (Code a = 1; a < q_; ++a)
            for (Code b = 1; b < q_; ++b)
                if (mul_table_[static_cast<std::size_t>(a) * q_ + b] == one()) {
                    inv_table_[a] = b;
                    break;
                }
        tables_ = true;
    }
}

std::shared_ptr<const Field> Field::make(unsigned p, unsigned r) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (r < 1) throw DomainError("extension degree must be >= 1");
    static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Field>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, r}];
    if (!slot) slot = std::shared_ptr<const Field>(new Field(p, r));
    return slot;
}

Field::Code Field::add(Code a, Code b) const {
    if (r_ == 1) return (a + b) % p_;
    Code out = 0, mult = 1;
    for (unsigned i = 0; i < r_; ++i) {
        unsigned da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        out += ((da + db) % p_) * mult;
        mult *= p_;
    }
    return out;
}

Field::Code Field::neg(Code a) const {
    if (r_ == 1) return (p_ - a) % p_;
    Code out = 0, mult = 1;
    for (unsigned i = 0; i < r_; ++i) {
        unsigned da = a % p_;
        a /= p_;
        out += ((p_ - da) % p_) * mult;
        mult *= p_;
    }
    return out;
}

Field::Code Field::sub(Code a, Code b) const { return add(a, neg(b)); }

Field::Code Field::mul_generic(Code a, Code b) const {
    if (r_ == 1) return (a * b) % p_;
    Poly pa = coeffs(a), pb = coeffs(b);
    Poly f(modulus_);
    f.push_back(1);
    Poly prod = poly_mod(poly_mul(trim(pa), trim(pb), p_), f, p_);
    prod.resize(r_, 0);
    return from_coeffs(prod);
}

Field::Code Field::mul(Code a, Code b) const {
    if (tables_) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
    return mul_generic(a, b);
}

Field::Code Field::inv(Code a) const {
    if (a == 0) throw DomainError("inversion of zero");
    if (tables_) return inv_table_[a];
    return pow(a, q_ - 2);
}

Field::Code Field::pow(Code a, const mpz_class& e) const {
    if (e < 0) throw DomainError("negative exponent");
    if (a == 0) return e == 0 ? one() : 0;
    // nonzero elements have order dividing q-1
    mpz_class red = e % (q_ - 1);
    unsigned long ee = red.get_ui();
    Code out = one(), base = a;
    while (ee) {
        if (ee & 1) out = mul(out, base);
        base = mul(base, base);
        ee >>= 1;
    }
    return out;
}

std::vector<unsigned> Field::coeffs(Code a) const {
    std::vector<unsigned> out(r_);
    for (unsigned i = 0; i < r_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

Field::Code Field::from_coeffs(const std::vector<unsigned>& c) const {
    Code out = 0, mult = 1;
    for (unsigned i = 0; i < r_; ++i) {
        out += (i < c.size() ? c[i] % p_ : 0) * mult;
        mult *= p_;
    }
    return out;
}

FqElem FqElem::operator+(const FqElem& o) const {
    if (!(*field_ == *o.field_)) throw DomainError("field mismatch");
    return {field_, field_->add(code_, o.code_)};
}

FqElem FqElem::operator*(const FqElem& o) const {
    if (!(*field_ == *o.field_)) throw DomainError("field mismatch");
    return {field_, field_->mul(code_, o.code_)};
}

FqElem FqElem::inv() const { return {field_, field_->inv(code_)}; }

FqElem FqElem::pow(const mpz_class& e) const { return {field_, field_->pow(code_, e)}; }

bool FqElem::operator==(const FqElem& o) const {
    return *field_ == *o.field_ && code_ == o.code_;
}

}  // namespace imago
