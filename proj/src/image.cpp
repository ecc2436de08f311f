#include "imago/image.hpp"

#include <thread>

#include "imago/classes.hpp"
#include "imago/errors.hpp"

namespace imago {

namespace {

// Evaluate the word over every assignment whose first coordinate lies in
// `firsts[begin, end)`, OR-ing hits into `bits`.
void sweep(const Word& w, const Group& g, const std::vector<std::uint32_t>& firsts,
           std::size_t begin, std::size_t end, unsigned k, std::vector<bool>& bits) {
    std::size_t n = g.size();
    std::vector<std::uint32_t> assignment(k, 0);
    for (std::size_t fi = begin; fi < end; ++fi) {
        assignment[0] = firsts[fi];
        for (unsigned j = 1; j < k; ++j) assignment[j] = 0;
        for (;;) {
            bits[g.evaluate(w, assignment)] = true;
            // odometer over coordinates 1..k-1
            unsigned j = 1;
            for (; j < k; ++j) {
                if (++assignment[j] < n) break;
                assignment[j] = 0;
            }
            if (j == k) break;
        }
    }
}

}  // namespace

std::vector<bool> image_bits(const Word& w, const Group& g, const ImageOptions& opts,
                             Strategy* used) {
    std::size_t n = g.size();
    unsigned k = w.num_generators();
    std::vector<bool> bits(n, false);
    if (k == 0) {
        bits[0] = true;
        if (used) *used = Strategy::naive;
        return bits;
    }

    // cap check on the full tuple space
    BigInt tuples = 1;
    for (unsigned i = 0; i < k; ++i) tuples *= static_cast<unsigned long>(n);
    if (tuples > static_cast<unsigned long>(opts.work_cap))
        throw CapExceeded("word image needs " + tuples.get_str() +
                          " evaluations, cap is " + std::to_string(opts.work_cap));

    Strategy strat = opts.strategy;
    if (strat == Strategy::automatic)
        strat = (k >= 2 && g.has_table()) ? Strategy::pruned : Strategy::naive;
    if (strat == Strategy::pruned && !g.has_table()) strat = Strategy::naive;
    if (used) *used = strat;

    std::vector<std::uint32_t> firsts;
    std::vector<std::uint32_t> class_of;  // only for pruned closure
    if (strat == Strategy::pruned) {
        auto classes = conjugacy_classes_bruteforce(g);
        class_of.assign(n, 0);
        for (std::uint32_t ci = 0; ci < classes.size(); ++ci)
            for (std::uint32_t m : classes[ci].members) class_of[m] = ci;
        for (const auto& c : classes) firsts.push_back(c.rep);

        // record class membership for the closure step
        std::vector<std::vector<std::uint32_t>> members;
        for (auto& c : classes) members.push_back(std::move(c.members));

        unsigned workers = std::max(1u, opts.workers);
        workers = static_cast<unsigned>(std::min<std::size_t>(workers, firsts.size()));
        if (workers <= 1) {
            sweep(w, g, firsts, 0, firsts.size(), k, bits);
        } else {
            std::vector<std::vector<bool>> partial(workers, std::vector<bool>(n, false));
            std::vector<std::thread> threads;
            std::size_t chunk = (firsts.size() + workers - 1) / workers;
            for (unsigned t = 0; t < workers; ++t) {
                std::size_t b = t * chunk, e = std::min(firsts.size(), b + chunk);
                threads.emplace_back([&, t, b, e] { sweep(w, g, firsts, b, e, k, partial[t]); });
            }
            for (auto& th : threads) th.join();
            for (const auto& part : partial)
                for (std::size_t i = 0; i < n; ++i)
                    if (part[i]) bits[i] = true;
        }
        // close under conjugation
        std::vector<bool> closed(n, false);
        for (std::size_t i = 0; i < n; ++i)
            if (bits[i] && !closed[i])
                for (std::uint32_t m : members[class_of[i]]) closed[m] = true;
        return closed;
    }

    firsts.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) firsts[i] = i;
    unsigned workers = std::max(1u, opts.workers);
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    if (workers <= 1) {
        sweep(w, g, firsts, 0, n, k, bits);
    } else {
        std::vector<std::vector<bool>> partial(workers, std::vector<bool>(n, false));
        std::vector<std::thread> threads;
        std::size_t chunk = (n + workers - 1) / workers;
        for (unsigned t = 0; t < workers; ++t) {
            std::size_t b = t * chunk, e = std::min<std::size_t>(n, b + chunk);
            threads.emplace_back([&, t, b, e] { sweep(w, g, firsts, b, e, k, partial[t]); });
        }
        for (auto& th : threads) th.join();
        for (const auto& part : partial)
            for (std::size_t i = 0; i < n; ++i)
                if (part[i]) bits[i] = true;
    }
    return bits;
}

std::vector<GroupElement> image_elements(const Word& w, const Group& g,
                                         const ImageOptions& opts) {
    auto bits = image_bits(w, g, opts);
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) out.push_back(g.at(i));
    return out;
}

ImageReport image_ratio(const Word& w, const GroupSpec& spec, const ImageOptions& opts) {
    ImageReport rep;
    rep.spec = spec.to_string();
    rep.word = w.format();
    Group g(spec, opts.caps);
    Strategy used = Strategy::naive;
    auto bits = image_bits(w, g, opts, &used);
    rep.strategy = used;
    rep.order = g.order();
    unsigned long count = 0;
    for (bool b : bits) count += b;
    rep.image_size = count;
    rep.ratio = make_ratio(rep.image_size, rep.order);
    return rep;
}

std::vector<ImageReport> scan(const std::vector<Word>& words,
                              const std::vector<GroupSpec>& specs,
                              const ImageOptions& opts) {
    std::vector<ImageReport> out;
    for (const auto& w : words)
        for (const auto& s : specs) {
            try {
                out.push_back(image_ratio(w, s, opts));
            } catch (const Error& e) {
                ImageReport rep;
                rep.spec = s.to_string();
                rep.word = w.format();
                rep.ok = false;
                rep.error = e.what();
                out.push_back(std::move(rep));
            }
        }
    return out;
}

}  // namespace imago
