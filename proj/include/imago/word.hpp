#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace imago {

/// Freely reduced word in a free group.  Generators are indexed from 1;
/// the syllable list never contains zero exponents or adjacent syllables
/// on the same generator, so equality on the representation is equality
/// in the free group.
class Word {
public:
    struct Syllable {
        unsigned gen;    // generator index, >= 1
        mpz_class exp;   // nonzero
        bool operator==(const Syllable& o) const { return gen == o.gen && exp == o.exp; }
    };

    Word() = default;  // identity word

    /// Grammar: word := term { ("*" | ws) term },
    ///          term := atom ["^" int],
    ///          atom := gen | "[" word "," word "]" | "(" word ")",
    ///          gen  := "x" digits | "x" | "y"     (x = x1, y = x2).
    static Word parse(const std::string& text);

    static Word generator(unsigned gen, const mpz_class& exp = 1);

    /// e_1 = [x,y], e_i = [e_{i-1}, y].
    static Word engel(unsigned i);

    /// x^M for M >= 1.
    static Word power_word(const mpz_class& m);

    const std::vector<Syllable>& syllables() const { return syls_; }
    bool empty() const { return syls_.empty(); }

    Word concat(const Word& other) const;
    Word inverted() const;
    static Word commutator(const Word& u, const Word& v);

    /// Highest generator index used (0 for the identity word).
    unsigned num_generators() const;

    /// Total exponent per generator, components 1..num_generators.
    std::vector<mpz_class> abelianize() const;

    std::string format() const;

    bool operator==(const Word& o) const { return syls_ == o.syls_; }

private:
    void push(unsigned gen, const mpz_class& exp);  // reducing append
    std::vector<Syllable> syls_;
};

}  // namespace imago
