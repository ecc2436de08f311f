#include "imago/word.hpp"

#include <cctype>
#include <sstream>

#include "imago/errors.hpp"

namespace imago {

void Word::push(unsigned gen, const mpz_class& exp) {
    if (exp == 0) return;
    if (!syls_.empty() && syls_.back().gen == gen) {
        syls_.back().exp += exp;
        if (syls_.back().exp == 0) syls_.pop_back();
        return;
    }
    syls_.push_back({gen, exp});
}

Word Word::generator(unsigned gen, const mpz_class& exp) {
    if (gen < 1) throw DomainError("generator index must be >= 1");
    Word w;
    w.push(gen, exp);
    return w;
}

Word Word::concat(const Word& other) const {
    Word out = *this;
    for (const auto& s : other.syls_) out.push(s.gen, s.exp);
    return out;
}

Word Word::inverted() const {
    Word out;
    for (auto it = syls_.rbegin(); it != syls_.rend(); ++it) out.push(it->gen, -it->exp);
    return out;
}

Word Word::commutator(const Word& u, const Word& v) {
    return u.concat(v).concat(u.inverted()).concat(v.inverted());
}

Word Word::engel(unsigned i) {
    if (i < 1) throw DomainError("Engel index must be >= 1");
    Word x = generator(1), y = generator(2);
    Word e = commutator(x, y);
    for (unsigned k = 2; k <= i; ++k) e = commutator(e, y);
    return e;
}

Word Word::power_word(const mpz_class& m) {
    if (m < 1) throw DomainError("power exponent must be >= 1");
    return generator(1, m);
}

unsigned Word::num_generators() const {
    unsigned n = 0;
    for (const auto& s : syls_) n = std::max(n, s.gen);
    return n;
}

std::vector<mpz_class> Word::abelianize() const {
    std::vector<mpz_class> out(num_generators(), 0);
    for (const auto& s : syls_) out[s.gen - 1] += s.exp;
    return out;
}

std::string Word::format() const {
    if (syls_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : syls_) {
        if (!first) os << " * ";
        first = false;
        os << "x" << s.gen;
        if (s.exp != 1) os << "^" << s.exp.get_str();
    }
    return os.str();
}

namespace {

class WordParser {
public:
    explicit WordParser(const std::string& text) : text_(text) {}

    Word run() {
        skip_ws();
        if (at_end()) return {};  // empty input is the identity word
        Word w = parse_word();
        skip_ws();
        if (!at_end()) fail("unexpected trailing input");
        return w;
    }

private:
    Word parse_word() {
        Word w = parse_term();
        for (;;) {
            std::size_t mark = pos_;
            skip_ws();
            if (at_end() || peek() == ',' || peek() == ']' || peek() == ')') {
                pos_ = mark;
                return w;
            }
            if (peek() == '*') ++pos_;
            skip_ws();
            w = w.concat(parse_term());
        }
    }

    Word parse_term() {
        Word base = parse_atom();
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            mpz_class e = parse_int();
            if (e == 0) return {};
            if (e < 0) {
                base = base.inverted();
                e = -e;
            }
            Word out;
            // square-and-multiply on words keeps huge exponents cheap for
            // the single-syllable case and correct in general
            Word acc = base;
            mpz_class n = e;
            while (n > 0) {
                if (mpz_odd_p(n.get_mpz_t())) out = out.concat(acc);
                n >>= 1;
                if (n > 0) acc = acc.concat(acc);
            }
            return out;
        }
        return base;
    }

    Word parse_atom() {
        skip_ws();
        if (at_end()) fail("expected atom");
        char c = peek();
        if (c == '(') {
            ++pos_;
            Word w = parse_word();
            expect(')');
            return w;
        }
        if (c == '[') {
            ++pos_;
            Word u = parse_word();
            expect(',');
            Word v = parse_word();
            expect(']');
            return Word::commutator(u, v);
        }
        if (c == 'x') {
            ++pos_;
            if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                unsigned long idx = parse_uint();
                if (idx < 1) fail("generator index must be >= 1");
                return Word::generator(static_cast<unsigned>(idx));
            }
            return Word::generator(1);
        }
        if (c == 'y') {
            ++pos_;
            return Word::generator(2);
        }
        if (c == '1') {
            ++pos_;
            return {};
        }
        fail("expected generator, '1', '[' or '('");
    }

    mpz_class parse_int() {
        bool negative = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            negative = peek() == '-';
            ++pos_;
        }
        mpz_class v = parse_uint_big();
        return negative ? mpz_class(-v) : v;
    }

    unsigned long parse_uint() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return std::stoul(text_.substr(start, pos_ - start));
    }

    mpz_class parse_uint_big() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return mpz_class(text_.substr(start, pos_ - start));
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

Word Word::parse(const std::string& text) { return WordParser(text).run(); }

}  // namespace imago
