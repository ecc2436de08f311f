#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "imago/mat2.hpp"
#include "imago/rational.hpp"
#include "imago/word.hpp"

namespace imago {

/// Finite group description.  Products are kept flattened to a single
/// level; the trivial group is Cyclic(1).
struct GroupSpec {
    struct Factor {
        enum class Kind { Cyclic, GL2, SL2 };
        Kind kind;
        unsigned long n = 0;  // Cyclic order
        unsigned p = 0, r = 0;  // prime power q = p^r for the matrix kinds
        unsigned long q() const;
        bool operator==(const Factor& o) const;
    };

    std::vector<Factor> factors;  // non-empty

    /// Grammar: spec := factor { "x" factor },
    ///          factor := atom ["^" int],
    ///          atom := "C" int | "GL2(" int ")" | "SL2(" int ")".
    static GroupSpec parse(const std::string& text);

    static GroupSpec cyclic(unsigned long n);
    static GroupSpec gl2(unsigned long q);
    static GroupSpec sl2(unsigned long q);
    GroupSpec times(const GroupSpec& other) const;

    BigInt order() const;
    std::string to_string() const;
    bool operator==(const GroupSpec& o) const { return factors == o.factors; }
};

/// Element of a group: one component per spec factor.
struct GroupElement {
    using Component = std::variant<unsigned long, Mat2>;
    std::vector<Component> comps;
    bool operator==(const GroupElement& o) const;
};

struct GroupCaps {
    std::size_t enumeration_cap = 1'000'000;
    std::size_t table_cap = 4096;
};

/// A spec bound to its enumeration: deterministic element order with the
/// identity first, dense indices, and a cached multiplication table for
/// small groups.  Immutable after construction.
class Group {
public:
    explicit Group(GroupSpec spec, GroupCaps caps = {});

    const GroupSpec& spec() const { return spec_; }
    const BigInt& order() const { return order_; }

    /// Number of elements as a machine integer; requires the group to be
    /// within the enumeration cap.
    std::size_t size() const { return size_; }

    GroupElement identity() const;
    GroupElement at(std::size_t idx) const;
    std::size_t index_of(const GroupElement& e) const;

    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;
    GroupElement pow(const GroupElement& a, const mpz_class& e) const;

    // Dense-index arithmetic; identity has index 0.
    std::uint32_t imul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t iinv(std::uint32_t a) const;
    std::uint32_t ipow(std::uint32_t a, const mpz_class& e) const;

    bool has_table() const { return !table_.empty(); }

    /// Order of the element at the given index.
    unsigned long element_order(std::uint32_t a) const;

    /// Left-to-right evaluation of a word at an index assignment.
    std::uint32_t evaluate(const Word& w, const std::vector<std::uint32_t>& assignment) const;

private:
    struct FactorData {
        GroupSpec::Factor f;
        std::size_t size = 0;
        FieldPtr field;                       // matrix kinds only
        std::vector<unsigned long> mat_codes; // identity first, then lex
        std::unordered_map<unsigned long, std::uint32_t> mat_index;
    };

    std::uint32_t factor_mul(std::size_t fi, std::uint32_t a, std::uint32_t b) const;
    std::uint32_t factor_inv(std::size_t fi, std::uint32_t a) const;

    GroupSpec spec_;
    GroupCaps caps_;
    BigInt order_;
    std::size_t size_ = 0;
    std::vector<FactorData> factors_;
    std::vector<std::size_t> radix_;  // mixed-radix weights, first factor most significant
    std::vector<std::uint32_t> table_;      // size x size when cached
    std::vector<std::uint32_t> inv_table_;
};

/// Evaluate a word at a tuple of group elements (left-to-right product of
/// powered letters; the empty word gives the identity).
GroupElement evaluate_word(const Word& w, const std::vector<GroupElement>& assignment,
                           const Group& g);

}  // namespace imago
