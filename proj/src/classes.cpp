#include "imago/classes.hpp"

#include "imago/errors.hpp"

namespace imago {

std::vector<ConjClass> gl2_class_reps(unsigned long q, bool ring_variant) {
    unsigned p, r;
    if (!prime_power(q, p, r))
        throw DomainError(std::to_string(q) + " is not a prime power");
    FieldPtr f = Field::make(p, r);
    std::vector<ConjClass> out;
    const Field::Code lo = ring_variant ? 0 : 1;
    BigInt bq = q;

    // scalars
    for (Field::Code lam = lo; lam < q; ++lam)
        out.push_back({Mat2(f, lam, 0, 0, lam), 1, ClassFamily::central});

    // distinct diagonal pairs, one rep per unordered pair (lam < mu in
    // enumeration order)
    for (Field::Code lam = lo; lam < q; ++lam)
        for (Field::Code mu = lam + 1; mu < q; ++mu)
            out.push_back({Mat2(f, lam, 0, 0, mu), bq * (bq + 1), ClassFamily::split});

    // Jordan blocks
    for (Field::Code lam = lo; lam < q; ++lam)
        out.push_back({Mat2(f, lam, f->one(), 0, lam), bq * bq - 1, ClassFamily::jordan});

    // companion matrices of monic irreducible quadratics t^2 + c1 t + c0,
    // one per conjugate eigenvalue pair
    for (Field::Code c1 = 0; c1 < q; ++c1)
        for (Field::Code c0 = 0; c0 < q; ++c0) {
            bool has_root = false;
            for (Field::Code t = 0; t < q; ++t) {
                Field::Code v = f->add(f->add(f->mul(t, t), f->mul(c1, t)), c0);
                if (v == 0) {
                    has_root = true;
                    break;
                }
            }
            if (!has_root)
                out.push_back({Mat2(f, 0, f->neg(c0), f->one(), f->neg(c1)),
                               bq * bq - bq, ClassFamily::irreducible});
        }
    return out;
}

std::vector<BruteClass> conjugacy_classes_bruteforce(const Group& g) {
    std::size_t n = g.size();
    std::vector<bool> seen(n, false);
    std::vector<BruteClass> out;
    for (std::uint32_t x = 0; x < n; ++x) {
        if (seen[x]) continue;
        BruteClass cls;
        cls.rep = x;
        std::vector<bool> in_class(n, false);
        for (std::uint32_t h = 0; h < n; ++h) {
            std::uint32_t y = g.imul(g.imul(h, x), g.iinv(h));
            if (!in_class[y]) {
                in_class[y] = true;
                seen[y] = true;
            }
        }
        for (std::uint32_t y = 0; y < n; ++y)
            if (in_class[y]) cls.members.push_back(y);
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace imago
