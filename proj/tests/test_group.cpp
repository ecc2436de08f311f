#include <doctest.h>

#include <random>
#include <set>

#include "imago/classes.hpp"
#include "imago/errors.hpp"
#include "imago/group.hpp"

using namespace imago;

TEST_CASE("spec parsing") {
    GroupSpec s = GroupSpec::parse("C6");
    REQUIRE(s.factors.size() == 1);
    CHECK(s.factors[0].kind == GroupSpec::Factor::Kind::Cyclic);
    CHECK(s.factors[0].n == 6);

    GroupSpec t = GroupSpec::parse("C2^3 x GL2(4)");
    REQUIRE(t.factors.size() == 4);
    for (int i = 0; i < 3; ++i) CHECK(t.factors[i].n == 2);
    CHECK(t.factors[3].kind == GroupSpec::Factor::Kind::GL2);
    CHECK(t.factors[3].q() == 4);
    CHECK(t.to_string() == "C2^3 x GL2(4)");

    CHECK_THROWS_AS(GroupSpec::parse("GL2(6)"), DomainError);
    CHECK_THROWS_AS(GroupSpec::parse("C0"), DomainError);
    CHECK_THROWS_AS(GroupSpec::parse("Q8"), ParseError);
    CHECK(GroupSpec::parse("C1").order() == 1);
}

TEST_CASE("group orders") {
    CHECK(GroupSpec::gl2(2).order() == 6);
    CHECK(GroupSpec::sl2(3).order() == 24);
    CHECK(GroupSpec::parse("C2 x GL2(4)").order() == 360);
    CHECK(GroupSpec::gl2(4).order() == 180);

    std::mt19937 rng(5);
    std::uniform_int_distribution<unsigned long> n(1, 30);
    for (int i = 0; i < 50; ++i) {
        GroupSpec a = GroupSpec::cyclic(n(rng));
        GroupSpec b = GroupSpec::cyclic(n(rng));
        CHECK(a.times(b).order() == a.order() * b.order());
    }
    CHECK(GroupSpec::gl2(3).times(GroupSpec::sl2(2)).order() ==
          GroupSpec::gl2(3).order() * GroupSpec::sl2(2).order());
}

TEST_CASE("enumeration: distinct, complete, identity first") {
    for (const char* text : {"C3", "GL2(2)", "SL2(2)", "GL2(3)", "SL2(3)",
                             "C2 x C3", "C2 x GL2(2)", "GL2(4)"}) {
        Group g(GroupSpec::parse(text));
        CHECK(g.order() == g.size());
        std::set<std::size_t> seen;
        for (std::size_t i = 0; i < g.size(); ++i) {
            GroupElement e = g.at(i);
            CHECK(g.index_of(e) == i);
            seen.insert(i);
        }
        CHECK(seen.size() == g.size());
        // index 0 is the identity: it fixes everything under multiplication
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK(g.imul(0, static_cast<std::uint32_t>(i)) == i);
            CHECK(g.imul(static_cast<std::uint32_t>(i), 0) == i);
        }
    }
}

TEST_CASE("Cyclic(3) enumerates residues ascending") {
    Group g(GroupSpec::cyclic(3));
    for (unsigned long i = 0; i < 3; ++i)
        CHECK(std::get<unsigned long>(g.at(i).comps[0]) == i);
}

TEST_CASE("SL2(2) equals GL2(2)") {
    Group a(GroupSpec::gl2(2)), b(GroupSpec::sl2(2));
    REQUIRE(a.size() == 6);
    REQUIRE(b.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        // same matrices (det != 0 over F2 means det = 1)
        CHECK(std::get<Mat2>(a.at(i).comps[0]) == std::get<Mat2>(b.at(i).comps[0]));
    }
}

TEST_CASE("element ops") {
    Group c5(GroupSpec::cyclic(5));
    GroupElement two = c5.at(2), four = c5.at(4);
    CHECK(std::get<unsigned long>(c5.mul(two, four).comps[0]) == 1);

    Group gl2(GroupSpec::gl2(2));
    auto f = Field::make(2, 1);
    GroupElement u;
    u.comps.emplace_back(Mat2(f, 1, 1, 0, 1));
    CHECK(std::get<Mat2>(gl2.inv(u).comps[0]) == Mat2(f, 1, 1, 0, 1));

    Group prod(GroupSpec::parse("C2 x GL2(2)"));
    GroupElement id = prod.identity();
    CHECK(std::get<unsigned long>(id.comps[0]) == 0);
    CHECK(std::get<Mat2>(id.comps[1]) == Mat2::identity(f));

    CHECK_THROWS_AS(prod.index_of(u), DomainError);  // arity mismatch
}

TEST_CASE("group axioms on random triples") {
    std::mt19937 rng(17);
    for (const char* text : {"GL2(3)", "C4 x SL2(2)", "C6"}) {
        Group g(GroupSpec::parse(text));
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g.size() - 1));
        for (int i = 0; i < 200; ++i) {
            std::uint32_t a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(g.imul(g.imul(a, b), c) == g.imul(a, g.imul(b, c)));
            CHECK(g.imul(a, g.iinv(a)) == 0);
        }
    }
}

TEST_CASE("gl2_class_reps matches brute force for q in {2,3,4,5}") {
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul}) {
        auto reps = gl2_class_reps(q);
        CHECK(reps.size() == q * q - 1);

        Group g(GroupSpec::gl2(q));
        auto brute = conjugacy_classes_bruteforce(g);
        CHECK(brute.size() == reps.size());

        // sizes sum to the group order, and multisets of sizes agree
        BigInt total = 0;
        std::multiset<unsigned long> closed_sizes, brute_sizes;
        for (const auto& c : reps) {
            total += c.size;
            closed_sizes.insert(c.size.get_ui());
        }
        for (const auto& c : brute) brute_sizes.insert(c.members.size());
        CHECK(total == g.order());
        CHECK(closed_sizes == brute_sizes);

        // reps land in pairwise distinct brute-force classes and each class
        // size matches the closed form
        std::vector<std::size_t> class_of(g.size());
        for (std::size_t ci = 0; ci < brute.size(); ++ci)
            for (auto m : brute[ci].members) class_of[m] = ci;
        std::set<std::size_t> hit;
        for (const auto& c : reps) {
            GroupElement e;
            e.comps.emplace_back(c.rep);
            std::size_t ci = class_of[g.index_of(e)];
            CHECK(!hit.count(ci));
            hit.insert(ci);
            CHECK(c.size == brute[ci].members.size());
        }
    }
}

TEST_CASE("class table family counts at q=2 and q=5") {
    auto q2 = gl2_class_reps(2);
    REQUIRE(q2.size() == 3);
    std::multiset<unsigned long> sizes;
    for (const auto& c : q2) sizes.insert(c.size.get_ui());
    CHECK(sizes == std::multiset<unsigned long>{1, 3, 2});

    auto q5 = gl2_class_reps(5);
    CHECK(q5.size() == 24);
    BigInt total = 0;
    for (const auto& c : q5) total += c.size;
    CHECK(total == 480);
}

TEST_CASE("ring-variant class table covers all of gl2") {
    for (unsigned long q : {2ul, 4ul}) {
        auto reps = gl2_class_reps(q, true);
        BigInt total = 0;
        for (const auto& c : reps) total += c.size;
        // similarity orbits partition the full q^4-element matrix ring
        CHECK(total == BigInt(q) * q * q * q);
        // q scalars, q(q-1)/2 split pairs, q Jordan, (q^2-q)/2 irreducible
        CHECK(reps.size() == q + q * (q - 1) / 2 + q + (q * q - q) / 2);
    }
}

TEST_CASE("brute-force classes on abelian and SL2(3)") {
    Group c4(GroupSpec::cyclic(4));
    CHECK(conjugacy_classes_bruteforce(c4).size() == 4);

    Group sl23(GroupSpec::sl2(3));
    CHECK(conjugacy_classes_bruteforce(sl23).size() == 7);
}

TEST_CASE("enumeration cap is enforced") {
    GroupCaps caps;
    caps.enumeration_cap = 100;
    CHECK_THROWS_AS(Group(GroupSpec::gl2(5), caps), CapExceeded);
}
