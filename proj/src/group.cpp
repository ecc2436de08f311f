#include "imago/group.hpp"

#include <cctype>

#include "imago/errors.hpp"

namespace imago {

unsigned long GroupSpec::Factor::q() const {
    unsigned long v = 1;
    for (unsigned i = 0; i < r; ++i) v *= p;
    return v;
}

bool GroupSpec::Factor::operator==(const Factor& o) const {
    return kind == o.kind && n == o.n && p == o.p && r == o.r;
}

GroupSpec GroupSpec::cyclic(unsigned long n) {
    if (n < 1) throw DomainError("cyclic order must be >= 1");
    GroupSpec s;
    s.factors.push_back({Factor::Kind::Cyclic, n, 0, 0});
    return s;
}

static GroupSpec::Factor matrix_factor(GroupSpec::Factor::Kind kind, unsigned long q) {
    unsigned p, r;
    if (!prime_power(q, p, r))
        throw DomainError(std::to_string(q) + " is not a prime power");
    return {kind, 0, p, r};
}

GroupSpec GroupSpec::gl2(unsigned long q) {
    GroupSpec s;
    s.factors.push_back(matrix_factor(Factor::Kind::GL2, q));
    return s;
}

GroupSpec GroupSpec::sl2(unsigned long q) {
    GroupSpec s;
    s.factors.push_back(matrix_factor(Factor::Kind::SL2, q));
    return s;
}

GroupSpec GroupSpec::times(const GroupSpec& other) const {
    GroupSpec s = *this;
    s.factors.insert(s.factors.end(), other.factors.begin(), other.factors.end());
    return s;
}

BigInt GroupSpec::order() const {
    BigInt total = 1;
    for (const auto& f : factors) {
        switch (f.kind) {
            case Factor::Kind::Cyclic:
                total *= f.n;
                break;
            case Factor::Kind::GL2: {
                BigInt q = f.q();
                total *= (q * q - 1) * (q * q - q);
                break;
            }
            case Factor::Kind::SL2: {
                BigInt q = f.q();
                total *= q * (q * q - 1);
                break;
            }
        }
    }
    return total;
}

std::string GroupSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size();) {
        std::size_t run = 1;
        while (i + run < factors.size() && factors[i + run] == factors[i]) ++run;
        if (!out.empty()) out += " x ";
        const auto& f = factors[i];
        switch (f.kind) {
            case Factor::Kind::Cyclic: out += "C" + std::to_string(f.n); break;
            case Factor::Kind::GL2: out += "GL2(" + std::to_string(f.q()) + ")"; break;
            case Factor::Kind::SL2: out += "SL2(" + std::to_string(f.q()) + ")"; break;
        }
        if (run > 1) out += "^" + std::to_string(run);
        i += run;
    }
    return out.empty() ? "C1" : out;
}

namespace {

class SpecParser {
public:
    explicit SpecParser(const std::string& text) : text_(text) {}

    GroupSpec run() {
        GroupSpec s = parse_factor();
        for (;;) {
            skip_ws();
            if (at_end()) break;
            if (peek() != 'x') fail("expected 'x' between factors");
            ++pos_;
            s = s.times(parse_factor());
        }
        if (s.factors.empty()) fail("empty group spec");
        return s;
    }

private:
    GroupSpec parse_factor() {
        GroupSpec atom = parse_atom();
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            unsigned long k = parse_uint();
            if (k < 1) fail("power must be >= 1");
            GroupSpec out = atom;
            for (unsigned long i = 1; i < k; ++i) out = out.times(atom);
            return out;
        }
        return atom;
    }

    GroupSpec parse_atom() {
        skip_ws();
        if (at_end()) fail("expected group atom");
        if (peek() == 'C') {
            ++pos_;
            return GroupSpec::cyclic(parse_uint());
        }
        if (text_.compare(pos_, 4, "GL2(") == 0) {
            pos_ += 4;
            unsigned long q = parse_uint();
            expect(')');
            return GroupSpec::gl2(q);
        }
        if (text_.compare(pos_, 4, "SL2(") == 0) {
            pos_ += 4;
            unsigned long q = parse_uint();
            expect(')');
            return GroupSpec::sl2(q);
        }
        fail("expected 'C<n>', 'GL2(q)' or 'SL2(q)'");
    }

    unsigned long parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return std::stoul(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_ws();
        if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
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

GroupSpec GroupSpec::parse(const std::string& text) { return SpecParser(text).run(); }

bool GroupElement::operator==(const GroupElement& o) const {
    if (comps.size() != o.comps.size()) return false;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].index() != o.comps[i].index()) return false;
        if (std::holds_alternative<unsigned long>(comps[i])) {
            if (std::get<unsigned long>(comps[i]) != std::get<unsigned long>(o.comps[i]))
                return false;
        } else if (!(std::get<Mat2>(comps[i]) == std::get<Mat2>(o.comps[i]))) {
            return false;
        }
    }
    return true;
}

Group::Group(GroupSpec spec, GroupCaps caps) : spec_(std::move(spec)), caps_(caps) {
    order_ = spec_.order();
    if (order_ > static_cast<unsigned long>(caps_.enumeration_cap))
        throw CapExceeded("group order " + order_.get_str() + " exceeds enumeration cap " +
                          std::to_string(caps_.enumeration_cap));
    size_ = static_cast<std::size_t>(order_.get_ui());

    for (const auto& f : spec_.factors) {
        FactorData d;
        d.f = f;
        if (f.kind == GroupSpec::Factor::Kind::Cyclic) {
            d.size = f.n;
        } else {
            d.field = Field::make(f.p, f.r);
            unsigned long q = f.q();
            Mat2 id = Mat2::identity(d.field);
            unsigned long id_code = id.code();
            d.mat_codes.push_back(id_code);
            unsigned long total = q * q * q * q;
            for (unsigned long code = 0; code < total; ++code) {
                if (code == id_code) continue;
                Mat2 m = Mat2::from_code(d.field, code);
                Field::Code dt = m.det();
                bool keep = f.kind == GroupSpec::Factor::Kind::GL2 ? dt != 0
                                                                   : dt == d.field->one();
                if (keep) d.mat_codes.push_back(code);
            }
            for (std::uint32_t i = 0; i < d.mat_codes.size(); ++i)
                d.mat_index[d.mat_codes[i]] = i;
            d.size = d.mat_codes.size();
        }
        factors_.push_back(std::move(d));
    }

    radix_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;)
        radix_[i - 1] = radix_[i] * factors_[i].size;

    if (size_ <= caps_.table_cap) {
        table_.resize(size_ * size_);
        for (std::uint32_t a = 0; a < size_; ++a)
            for (std::uint32_t b = 0; b < size_; ++b) {
                // structural multiply, filled once
                std::uint32_t out = 0;
                std::size_t ra = a, rb = b;
                for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
                    std::uint32_t fa = static_cast<std::uint32_t>(ra / radix_[fi]);
                    std::uint32_t fb = static_cast<std::uint32_t>(rb / radix_[fi]);
                    ra %= radix_[fi];
                    rb %= radix_[fi];
                    out += factor_mul(fi, fa, fb) * static_cast<std::uint32_t>(radix_[fi]);
                }
                table_[static_cast<std::size_t>(a) * size_ + b] = out;
            }
        inv_table_.assign(size_, 0);
        for (std::uint32_t a = 0; a < size_; ++a)
            for (std::uint32_t b = 0; b < size_; ++b)
                if (table_[static_cast<std::size_t>(a) * size_ + b] == 0) {
                    inv_table_[a] = b;
                    break;
                }
    }
}

std::uint32_t Group::factor_mul(std::size_t fi, std::uint32_t a, std::uint32_t b) const {
    const FactorData& d = factors_[fi];
    if (d.f.kind == GroupSpec::Factor::Kind::Cyclic)
        return static_cast<std::uint32_t>((static_cast<unsigned long>(a) + b) % d.f.n);
    Mat2 m = Mat2::from_code(d.field, d.mat_codes[a]) * Mat2::from_code(d.field, d.mat_codes[b]);
    return d.mat_index.at(m.code());
}

std::uint32_t Group::factor_inv(std::size_t fi, std::uint32_t a) const {
    const FactorData& d = factors_[fi];
    if (d.f.kind == GroupSpec::Factor::Kind::Cyclic)
        return static_cast<std::uint32_t>((d.f.n - a) % d.f.n);
    return d.mat_index.at(Mat2::from_code(d.field, d.mat_codes[a]).inv().code());
}

GroupElement Group::identity() const { return at(0); }

GroupElement Group::at(std::size_t idx) const {
    if (idx >= size_) throw DomainError("element index out of range");
    GroupElement e;
    for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
        std::size_t f_idx = idx / radix_[fi];
        idx %= radix_[fi];
        const FactorData& d = factors_[fi];
        if (d.f.kind == GroupSpec::Factor::Kind::Cyclic)
            e.comps.emplace_back(static_cast<unsigned long>(f_idx));
        else
            e.comps.emplace_back(Mat2::from_code(d.field, d.mat_codes[f_idx]));
    }
    return e;
}

std::size_t Group::index_of(const GroupElement& e) const {
    if (e.comps.size() != factors_.size()) throw DomainError("element/spec arity mismatch");
    std::size_t idx = 0;
    for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
        const FactorData& d = factors_[fi];
        std::size_t f_idx;
        if (d.f.kind == GroupSpec::Factor::Kind::Cyclic) {
            f_idx = std::get<unsigned long>(e.comps[fi]);
            if (f_idx >= d.f.n) throw DomainError("residue out of range");
        } else {
            auto it = d.mat_index.find(std::get<Mat2>(e.comps[fi]).code());
            if (it == d.mat_index.end()) throw DomainError("matrix not in group");
            f_idx = it->second;
        }
        idx += f_idx * radix_[fi];
    }
    return idx;
}

std::uint32_t Group::imul(std::uint32_t a, std::uint32_t b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * size_ + b];
    std::uint32_t out = 0;
    std::size_t ra = a, rb = b;
    for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
        std::uint32_t fa = static_cast<std::uint32_t>(ra / radix_[fi]);
        std::uint32_t fb = static_cast<std::uint32_t>(rb / radix_[fi]);
        ra %= radix_[fi];
        rb %= radix_[fi];
        out += factor_mul(fi, fa, fb) * static_cast<std::uint32_t>(radix_[fi]);
    }
    return out;
}

std::uint32_t Group::iinv(std::uint32_t a) const {
    if (!inv_table_.empty()) return inv_table_[a];
    std::uint32_t out = 0;
    std::size_t ra = a;
    for (std::size_t fi = 0; fi < factors_.size(); ++fi) {
        std::uint32_t fa = static_cast<std::uint32_t>(ra / radix_[fi]);
        ra %= radix_[fi];
        out += factor_inv(fi, fa) * static_cast<std::uint32_t>(radix_[fi]);
    }
    return out;
}

unsigned long Group::element_order(std::uint32_t a) const {
    unsigned long ord = 1;
    std::uint32_t x = a;
    while (x != 0) {
        x = imul(x, a);
        ++ord;
    }
    return ord;
}

std::uint32_t Group::ipow(std::uint32_t a, const mpz_class& e) const {
    unsigned long n;
    if (e >= 0 && e.fits_ulong_p() && e.get_ui() <= (1ul << 20)) {
        n = e.get_ui();
    } else {
        // reduce modulo the element order; this also folds negative exponents
        unsigned long ord = element_order(a);
        mpz_class red;
        mpz_mod_ui(red.get_mpz_t(), e.get_mpz_t(), ord);
        n = red.get_ui();
    }
    std::uint32_t out = 0, base = a;
    while (n) {
        if (n & 1) out = imul(out, base);
        base = imul(base, base);
        n >>= 1;
    }
    return out;
}

std::uint32_t Group::evaluate(const Word& w, const std::vector<std::uint32_t>& assignment) const {
    std::uint32_t acc = 0;
    for (const auto& s : w.syllables()) {
        if (s.gen > assignment.size())
            throw DomainError("missing assignment for generator x" + std::to_string(s.gen));
        acc = imul(acc, ipow(assignment[s.gen - 1], s.exp));
    }
    return acc;
}

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
    return at(imul(static_cast<std::uint32_t>(index_of(a)),
                   static_cast<std::uint32_t>(index_of(b))));
}

GroupElement Group::inv(const GroupElement& a) const {
    return at(iinv(static_cast<std::uint32_t>(index_of(a))));
}

GroupElement Group::pow(const GroupElement& a, const mpz_class& e) const {
    return at(ipow(static_cast<std::uint32_t>(index_of(a)), e));
}

GroupElement evaluate_word(const Word& w, const std::vector<GroupElement>& assignment,
                           const Group& g) {
    std::vector<std::uint32_t> idx;
    idx.reserve(assignment.size());
    for (const auto& e : assignment) idx.push_back(static_cast<std::uint32_t>(g.index_of(e)));
    return g.at(g.evaluate(w, idx));
}

}  // namespace imago
