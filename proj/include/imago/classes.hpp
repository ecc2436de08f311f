#pragma once

#include <cstdint>
#include <vector>

#include "imago/group.hpp"

namespace imago {

enum class ClassFamily { central, split, jordan, irreducible, none };

struct ConjClass {
    Mat2 rep;
    BigInt size;
    ClassFamily family;
};

/// Conjugacy class representatives of GL2(q), one per class:
///   scalars lambda*I (q-1 classes, size 1),
///   diag(lambda, mu) with lambda < mu ((q-1)(q-2)/2 classes, size q(q+1)),
///   Jordan blocks [[lambda,1],[0,lambda]] (q-1 classes, size q^2-1),
///   companions of irreducible quadratics ((q^2-q)/2 classes, size q^2-q).
/// With ring_variant the scalar, diagonal and Jordan eigenvalues range over
/// all of F_q instead of F_q^x (the class structure of the full matrix ring).
std::vector<ConjClass> gl2_class_reps(unsigned long q, bool ring_variant = false);

struct BruteClass {
    std::uint32_t rep;                  // smallest member index
    std::vector<std::uint32_t> members; // ascending
};

/// Orbit closure under conjugation by every group element.  Classes are
/// returned ordered by their smallest member; together they partition the
/// group.
std::vector<BruteClass> conjugacy_classes_bruteforce(const Group& g);

}  // namespace imago
