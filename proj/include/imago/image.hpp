#pragma once

#include <string>
#include <vector>

#include "imago/group.hpp"
#include "imago/rational.hpp"

namespace imago {

enum class Strategy {
    naive,   // full tuple space
    pruned,  // first coordinate restricted to class representatives,
             // result closed under conjugation; identical output
    automatic
};

struct ImageOptions {
    Strategy strategy = Strategy::automatic;
    unsigned workers = 1;           // 1 = reference single-threaded path
    std::size_t work_cap = 100'000'000;
    GroupCaps caps{};
};

struct ImageReport {
    std::string spec;
    std::string word;
    Strategy strategy = Strategy::naive;
    BigInt order = 0;
    BigInt image_size = 0;
    BigRatio ratio = 0;
    bool ok = true;
    std::string error;
};

/// Membership bitset of the word-map image over the group's enumeration
/// order.  Bit-identical regardless of worker count.
std::vector<bool> image_bits(const Word& w, const Group& g, const ImageOptions& opts,
                             Strategy* used = nullptr);

std::vector<GroupElement> image_elements(const Word& w, const Group& g,
                                         const ImageOptions& opts = {});

ImageReport image_ratio(const Word& w, const GroupSpec& spec, const ImageOptions& opts = {});

/// Cross product of words and specs, reports in row-major input order.
/// Per-pair failures are recorded in the row, not thrown.
std::vector<ImageReport> scan(const std::vector<Word>& words,
                              const std::vector<GroupSpec>& specs,
                              const ImageOptions& opts = {});

}  // namespace imago
