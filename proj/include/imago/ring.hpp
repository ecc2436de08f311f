#pragma once

#include <string>
#include <variant>
#include <vector>

#include "imago/image.hpp"
#include "imago/mat2.hpp"
#include "imago/rational.hpp"

namespace imago {

/// Finite ring description: cyclic factors Z/nZ and full 2x2 matrix rings
/// over F_q, flattened products.
struct RingSpec {
    struct Factor {
        enum class Kind { ZmodN, Mat2Ring };
        Kind kind;
        unsigned long n = 0;    // ZmodN modulus
        unsigned p = 0, r = 0;  // Mat2Ring field
        unsigned long q() const;
        bool operator==(const Factor& o) const;
    };

    std::vector<Factor> factors;

    /// Grammar: spec := factor { "x" factor },
    ///          factor := atom ["^" int],
    ///          atom := "Z" int | "M2(" int ")".
    static RingSpec parse(const std::string& text);

    static RingSpec zmod(unsigned long n);
    static RingSpec mat2ring(unsigned long q);
    RingSpec times(const RingSpec& other) const;

    BigInt size() const;
    std::string to_string() const;
};

struct RingElement {
    using Component = std::variant<unsigned long, Mat2>;
    std::vector<Component> comps;
};

/// A ring spec bound to its enumeration: zero has index 0, residues are
/// ascending, matrices follow entry-lexicographic code order, products are
/// mixed-radix with the first factor most significant.
class Ring {
public:
    explicit Ring(RingSpec spec, std::size_t enumeration_cap = 1'000'000);

    const RingSpec& spec() const { return spec_; }
    std::size_t size() const { return size_; }

    RingElement at(std::size_t idx) const;
    std::size_t index_of(const RingElement& e) const;

    std::uint32_t iadd(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t ineg(std::uint32_t a) const;
    std::uint32_t imul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t one() const;  // index of the multiplicative identity

private:
    struct FactorData {
        RingSpec::Factor f;
        std::size_t size = 0;
        FieldPtr field;  // Mat2Ring only
    };

    RingSpec spec_;
    std::size_t size_ = 0;
    std::vector<FactorData> factors_;
    std::vector<std::size_t> radix_;
};

/// Noncommutative polynomial over Z with no constant term: a sum of
/// integer-coefficient products of powered variables.
struct NCPoly {
    struct Term {
        BigInt coeff;  // nonzero
        std::vector<std::pair<unsigned, unsigned>> monomial;  // (var >= 1, power >= 1)
        bool operator==(const Term& o) const { return coeff == o.coeff && monomial == o.monomial; }
    };

    std::vector<Term> terms;

    /// Grammar: poly := term { ("+"|"-") term },
    ///          term := [int "*"] factor { "*" factor },
    ///          factor := "x" digits ["^" int].
    /// Constant terms are rejected.
    static NCPoly parse(const std::string& text);

    unsigned num_vars() const;
    std::string format() const;
};

RingElement poly_evaluate(const NCPoly& p, const std::vector<RingElement>& assignment,
                          const Ring& ring);

/// Exhaustive image ratio of a polynomial map; reuses the word-map report.
ImageReport poly_image_ratio(const NCPoly& p, const RingSpec& spec,
                             const ImageOptions& opts = {});

/// Bitset of the polynomial image over the ring's enumeration order.
std::vector<bool> poly_image_bits(const NCPoly& p, const Ring& ring,
                                  std::size_t work_cap = 100'000'000);

struct SquareRingForms {
    BigRatio stated_value;       // 1 - 1/2^r
    BigRatio classcount_value;  // 1 - (q^2-1) q / q^4, q = 2^r
};

/// Both published closed forms for mu(x^2, gl2(2^r)); the brute-force
/// oracle adjudicates between them (it matches classcount_value).
SquareRingForms gl2ring_square_closed_forms(unsigned r);

}  // namespace imago
