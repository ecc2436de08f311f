#include "imago/ring.hpp"

#include <cctype>
#include <sstream>

#include "imago/errors.hpp"

namespace imago {

unsigned long RingSpec::Factor::q() const {
    unsigned long v = 1;
    for (unsigned i = 0; i < r; ++i) v *= p;
    return v;
}

bool RingSpec::Factor::operator==(const Factor& o) const {
    return kind == o.kind && n == o.n && p == o.p && r == o.r;
}

RingSpec RingSpec::zmod(unsigned long n) {
    if (n < 1) throw DomainError("modulus must be >= 1");
    RingSpec s;
    s.factors.push_back({Factor::Kind::ZmodN, n, 0, 0});
    return s;
}

RingSpec RingSpec::mat2ring(unsigned long q) {
    unsigned p, r;
    if (!prime_power(q, p, r))
        throw DomainError(std::to_string(q) + " is not a prime power");
    RingSpec s;
    s.factors.push_back({Factor::Kind::Mat2Ring, 0, p, r});
    return s;
}

RingSpec RingSpec::times(const RingSpec& other) const {
    RingSpec s = *this;
    s.factors.insert(s.factors.end(), other.factors.begin(), other.factors.end());
    return s;
}

BigInt RingSpec::size() const {
    BigInt total = 1;
    for (const auto& f : factors) {
        if (f.kind == Factor::Kind::ZmodN) {
            total *= f.n;
        } else {
            BigInt q = f.q();
            total *= q * q * q * q;
        }
    }
    return total;
}

std::string RingSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size();) {
        std::size_t run = 1;
        while (i + run < factors.size() && factors[i + run] == factors[i]) ++run;
        if (!out.empty()) out += " x ";
        const auto& f = factors[i];
        if (f.kind == Factor::Kind::ZmodN)
            out += "Z" + std::to_string(f.n);
        else
            out += "M2(" + std::to_string(f.q()) + ")";
        if (run > 1) out += "^" + std::to_string(run);
        i += run;
    }
    return out.empty() ? "Z1" : out;
}

namespace {

class RingSpecParser {
public:
    explicit RingSpecParser(const std::string& text) : text_(text) {}

    RingSpec run() {
        RingSpec s = parse_factor();
        for (;;) {
            skip_ws();
            if (at_end()) break;
            if (peek() != 'x') fail("expected 'x' between factors");
            ++pos_;
            s = s.times(parse_factor());
        }
        return s;
    }

private:
    RingSpec parse_factor() {
        RingSpec atom = parse_atom();
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            unsigned long k = parse_uint();
            if (k < 1) fail("power must be >= 1");
            RingSpec out = atom;
            for (unsigned long i = 1; i < k; ++i) out = out.times(atom);
            return out;
        }
        return atom;
    }

    RingSpec parse_atom() {
        skip_ws();
        if (at_end()) fail("expected ring atom");
        if (peek() == 'Z') {
            ++pos_;
            return RingSpec::zmod(parse_uint());
        }
        if (text_.compare(pos_, 3, "M2(") == 0) {
            pos_ += 3;
            unsigned long q = parse_uint();
            skip_ws();
            if (at_end() || peek() != ')') fail("expected ')'");
            ++pos_;
            return RingSpec::mat2ring(q);
        }
        fail("expected 'Z<n>' or 'M2(q)'");
    }

    unsigned long parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return std::stoul(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

RingSpec RingSpec::parse(const std::string& text) { return RingSpecParser(text).run(); }

Ring::Ring(RingSpec spec, std::size_t enumeration_cap) : spec_(std::move(spec)) {
    BigInt total = spec_.size();
    if (total > static_cast<unsigned long>(enumeration_cap))
        throw CapExceeded("ring size " + total.get_str() + " exceeds enumeration cap " +
                          std::to_string(enumeration_cap));
    size_ = static_cast<std::size_t>(total.get_ui());

    for (const auto& f : spec_.factors) {
        FactorData d;
        d.f = f;
        if (f.kind == RingSpec::Factor::Kind::ZmodN) {
            d.size = f.n;
        } else {
            d.field = Field::make(f.p, f.r);
            unsigned long q = f.q();
            d.size = q * q * q * q;
        }
        factors_.push_back(std::move(d));
    }
    radix_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;)
        radix_[i - 1] = radix_[i] * factors_[i].size;
}

RingElement Ring::at(std::size_t idx) const {
    if (idx >= size_) throw DomainError("element index out of range");
    RingElement e;
    for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
        std::size_t f_idx = idx / radix_[fi];
        idx %= radix_[fi];
        const FactorData& d = factors_[fi];
        if (d.f.kind == RingSpec::Factor::Kind::ZmodN)
            e.comps.emplace_back(static_cast<unsigned long>(f_idx));
        else
            e.comps.emplace_back(Mat2::from_code(d.field, f_idx));
    }
    return e;
}

std::size_t Ring::index_of(const RingElement& e) const {
    if (e.comps.size() != factors_.size()) throw DomainError("element/spec arity mismatch");
    std::size_t idx = 0;
    for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
        const FactorData& d = factors_[fi];
        std::size_t f_idx;
        if (d.f.kind == RingSpec::Factor::Kind::ZmodN) {
            f_idx = std::get<unsigned long>(e.comps[fi]);
            if (f_idx >= d.f.n) throw DomainError("residue out of range");
        } else {
            f_idx = std::get<Mat2>(e.comps[fi]).code();
        }
        idx += f_idx * radix_[fi];
    }
    return idx;
}

std::uint32_t Ring::iadd(std::uint32_t a, std::uint32_t b) const {
    std::size_t out = 0, ra = a, rb = b;
    for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
        std::size_t fa = ra / radix_[fi], fb = rb / radix_[fi];
        ra %= radix_[fi];
        rb %= radix_[fi];
        const FactorData& d = factors_[fi];
        std::size_t fr;
        if (d.f.kind == RingSpec::Factor::Kind::ZmodN)
            fr = (fa + fb) % d.f.n;
        else
            fr = (Mat2::from_code(d.field, fa) + Mat2::from_code(d.field, fb)).code();
        out += fr * radix_[fi];
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t Ring::ineg(std::uint32_t a) const {
    std::size_t out = 0, ra = a;
    for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
        std::size_t fa = ra / radix_[fi];
        ra %= radix_[fi];
        const FactorData& d = factors_[fi];
        std::size_t fr;
        if (d.f.kind == RingSpec::Factor::Kind::ZmodN) {
            fr = (d.f.n - fa) % d.f.n;
        } else {
            Mat2 m = Mat2::from_code(d.field, fa);
            const Field& f = *d.field;
            fr = Mat2(d.field, f.neg(m.a()), f.neg(m.b()), f.neg(m.c()), f.neg(m.d())).code();
        }
        out += fr * radix_[fi];
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t Ring::imul(std::uint32_t a, std::uint32_t b) const {
    std::size_t out = 0, ra = a, rb = b;
    for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
        std::size_t fa = ra / radix_[fi], fb = rb / radix_[fi];
        ra %= radix_[fi];
        rb %= radix_[fi];
        const FactorData& d = factors_[fi];
        std::size_t fr;
        if (d.f.kind == RingSpec::Factor::Kind::ZmodN)
            fr = (fa * fb) % d.f.n;
        else
            fr = (Mat2::from_code(d.field, fa) * Mat2::from_code(d.field, fb)).code();
        out += fr * radix_[fi];
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t Ring::one() const {
    std::size_t out = 0;
    for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
        const FactorData& d = factors_[fi];
        std::size_t fr;
        if (d.f.kind == RingSpec::Factor::Kind::ZmodN)
            fr = d.f.n > 1 ? 1 : 0;
        else
            fr = Mat2::identity(d.field).code();
        out += fr * radix_[fi];
    }
    return static_cast<std::uint32_t>(out);
}

unsigned NCPoly::num_vars() const {
    unsigned n = 0;
    for (const auto& t : terms)
        for (const auto& [var, pw] : t.monomial) n = std::max(n, var);
    return n;
}

std::string NCPoly::format() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        BigInt c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool printed = false;
        if (c != 1) {
            os << c.get_str();
            printed = true;
        }
        for (const auto& [var, pw] : t.monomial) {
            if (printed) os << "*";
            os << "x" << var;
            if (pw != 1) os << "^" << pw;
            printed = true;
        }
    }
    return os.str();
}

namespace {

class PolyParser {
public:
    explicit PolyParser(const std::string& text) : text_(text) {}

    NCPoly run() {
        NCPoly p;
        skip_ws();
        bool neg = consume_sign();
        p.terms.push_back(parse_term(neg));
        for (;;) {
            skip_ws();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
            bool minus = peek() == '-';
            ++pos_;
            p.terms.push_back(parse_term(minus));
        }
        // drop explicit zero-coefficient terms
        std::vector<NCPoly::Term> kept;
        for (auto& t : p.terms)
            if (t.coeff != 0) kept.push_back(std::move(t));
        p.terms = std::move(kept);
        return p;
    }

private:
    NCPoly::Term parse_term(bool negative) {
        skip_ws();
        NCPoly::Term t;
        t.coeff = 1;
        bool saw_var = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coeff = parse_uint_big();
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
            } else {
                fail("constant terms are not allowed");
            }
        }
        for (;;) {
            skip_ws();
            if (at_end() || peek() != 'x') break;
            ++pos_;
            unsigned var = static_cast<unsigned>(parse_uint());
            if (var < 1) fail("variable index must be >= 1");
            unsigned pw = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                pw = static_cast<unsigned>(parse_uint());
                if (pw < 1) fail("power must be >= 1");
            }
            if (!t.monomial.empty() && t.monomial.back().first == var)
                t.monomial.back().second += pw;
            else
                t.monomial.emplace_back(var, pw);
            saw_var = true;
            std::size_t mark = pos_;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            pos_ = mark;
            break;
        }
        if (!saw_var) fail("expected a variable (constant terms are not allowed)");
        if (negative) t.coeff = -t.coeff;
        return t;
    }

    unsigned long parse_uint() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return std::stoul(text_.substr(start, pos_ - start));
    }

    BigInt parse_uint_big() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return BigInt(text_.substr(start, pos_ - start));
    }

    bool consume_sign() {
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            bool minus = peek() == '-';
            ++pos_;
            return minus;
        }
        return false;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    const std::string& text_;
    std::size_t pos_ = 0;
};

// double-and-add integer scalar multiple in the additive group
std::uint32_t scalar_multiple(const Ring& ring, std::uint32_t x, const BigInt& c) {
    BigInt n = c < 0 ? BigInt(-c) : c;
    std::uint32_t base = c < 0 ? ring.ineg(x) : x;
    std::uint32_t acc = 0;  // zero element
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = ring.iadd(acc, base);
        base = ring.iadd(base, base);
        n >>= 1;
    }
    return acc;
}

std::uint32_t evaluate_index(const NCPoly& p, const Ring& ring,
                             const std::vector<std::uint32_t>& assignment) {
    std::uint32_t sum = 0;
    for (const auto& t : p.terms) {
        std::uint32_t prod = ring.one();
        for (const auto& [var, pw] : t.monomial) {
            if (var > assignment.size())
                throw DomainError("missing assignment for variable x" + std::to_string(var));
            std::uint32_t x = assignment[var - 1];
            for (unsigned i = 0; i < pw; ++i) prod = ring.imul(prod, x);
        }
        sum = ring.iadd(sum, scalar_multiple(ring, prod, t.coeff));
    }
    return sum;
}

}  // namespace

NCPoly NCPoly::parse(const std::string& text) { return PolyParser(text).run(); }

RingElement poly_evaluate(const NCPoly& p, const std::vector<RingElement>& assignment,
                          const Ring& ring) {
    std::vector<std::uint32_t> idx;
    idx.reserve(assignment.size());
    for (const auto& e : assignment)
        idx.push_back(static_cast<std::uint32_t>(ring.index_of(e)));
    return ring.at(evaluate_index(p, ring, idx));
}

std::vector<bool> poly_image_bits(const NCPoly& p, const Ring& ring, std::size_t work_cap) {
    std::size_t n = ring.size();
    unsigned k = p.num_vars();
    std::vector<bool> bits(n, false);
    if (k == 0) {
        bits[0] = true;  // the zero polynomial hits only 0
        return bits;
    }
    BigInt tuples = 1;
    for (unsigned i = 0; i < k; ++i) tuples *= static_cast<unsigned long>(n);
    if (tuples > static_cast<unsigned long>(work_cap))
        throw CapExceeded("polynomial image needs " + tuples.get_str() +
                          " evaluations, cap is " + std::to_string(work_cap));

    std::vector<std::uint32_t> assignment(k, 0);
    for (;;) {
        bits[evaluate_index(p, ring, assignment)] = true;
        unsigned j = 0;
        for (; j < k; ++j) {
            if (++assignment[j] < n) break;
            assignment[j] = 0;
        }
        if (j == k) break;
    }
    return bits;
}

ImageReport poly_image_ratio(const NCPoly& p, const RingSpec& spec, const ImageOptions& opts) {
    ImageReport rep;
    rep.spec = spec.to_string();
    rep.word = p.format();
    Ring ring(spec, opts.caps.enumeration_cap);
    auto bits = poly_image_bits(p, ring, opts.work_cap);
    rep.order = spec.size();
    unsigned long count = 0;
    for (bool b : bits) count += b;
    rep.image_size = count;
    rep.ratio = make_ratio(rep.image_size, rep.order);
    rep.strategy = Strategy::naive;
    return rep;
}

SquareRingForms gl2ring_square_closed_forms(unsigned r) {
    if (r < 1) throw DomainError("r must be >= 1");
    BigInt q = 1;
    q <<= r;
    SquareRingForms out;
    out.stated_value = make_ratio(q - 1, q);
    BigInt ring_size = q * q * q * q;
    out.classcount_value = make_ratio(ring_size - (q * q - 1) * q, ring_size);
    return out;
}

}  // namespace imago
