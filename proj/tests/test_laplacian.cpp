#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treelab/laplacian.hpp"
#include "treelab/matchgen.hpp"

#include <random>

using namespace treelab;

namespace {

std::vector<Integer> vec(std::vector<long> cs) {
    std::vector<Integer> v;
    for (long c : cs) v.emplace_back(c);
    return v;
}

}  // namespace

TEST_CASE("frozen coefficient vectors") {
    CHECK(coefficients_via_subdivision(make_path(3)).c == vec({1, 4, 3, 0}));
    CHECK(coefficients_via_subdivision(make_star(4)).c == vec({1, 6, 9, 4, 0}));
    CHECK(coefficients_via_subdivision(Tree(1, {})).c == vec({1, 0}));

    CHECK(coefficients_via_charpoly(make_path(3)).c == vec({1, 4, 3, 0}));
    CHECK(coefficients_via_charpoly(make_star(4)).c == vec({1, 6, 9, 4, 0}));
    CHECK(coefficients_via_charpoly(make_path(2)).c == vec({1, 2, 0}));
    CHECK(coefficients_via_charpoly(make_path(4)).c == vec({1, 6, 10, 4, 0}));
}

TEST_CASE("routes agree and boundary identities hold for all trees up to 10") {
    for (int n = 1; n <= 10; ++n)
        for (const Tree& t : enumerate_trees(n, std::max(n - 1, 1), false)) {
            CoeffVector a = coefficients_via_subdivision(t);
            CoeffVector b = coefficients_via_charpoly(t);
            REQUIRE(a.c == b.c);
            CHECK(a.c[0] == 1);
            CHECK(a.c[n] == 0);
            if (n >= 2) {
                CHECK(a.c[1] == 2 * (n - 1));
                CHECK(a.c[n - 1] == n);
            }
            for (const Integer& c : a.c) CHECK(c >= 0);
        }
}

TEST_CASE("phi equals the matching generating function of the subdivision") {
    for (int n = 1; n <= 9; ++n)
        for (const Tree& t : enumerate_trees(n, std::max(n - 1, 1), false)) {
            CoeffVector c = coefficients_via_subdivision(t);
            IntPoly m = matching_poly(subdivide(t));
            for (int k = 0; k < n; ++k) CHECK(c.c[k] == m.coeff(k));
        }
}

TEST_CASE("phi evaluation") {
    CHECK(phi_eval(coefficients_via_subdivision(make_path(3)), Rational(1)) == 8);
    CHECK(phi_eval(coefficients_via_subdivision(make_star(4)), Rational(1)) == 20);
    for (int n = 1; n <= 6; ++n)
        for (const Tree& t : enumerate_trees(n, std::max(n - 1, 1), false))
            CHECK(phi_eval(coefficients_via_subdivision(t), Rational(0)) == 1);
    CHECK(phi_eval(coefficients_via_subdivision(make_path(3)), Rational(1, 2)) ==
          Rational(1) + Rational(4, 2) + Rational(3, 4));
}

TEST_CASE("poset comparison") {
    CoeffVector k14 = coefficients_via_subdivision(make_star(5));
    CoeffVector p5 = coefficients_via_subdivision(make_path(5));
    CHECK(poset_compare(k14, p5) == PosetOrder::Less);
    CHECK(poset_compare(p5, k14) == PosetOrder::Greater);
    CHECK(poset_compare(p5, p5) == PosetOrder::Equal);
    CHECK(poset_compare(coefficients_via_subdivision(make_path(4)),
                        coefficients_via_subdivision(make_star(4))) ==
          PosetOrder::Greater);
    CHECK_THROWS(poset_compare(p5, coefficients_via_subdivision(make_path(4))));

    // partial-order sanity on sampled triples at n = 8
    auto trees = enumerate_trees(8, 7, false);
    std::vector<CoeffVector> cs;
    for (const Tree& t : trees) cs.push_back(coefficients_via_subdivision(t));
    std::mt19937 rng(5);
    std::uniform_int_distribution<size_t> d(0, cs.size() - 1);
    for (int iter = 0; iter < 200; ++iter) {
        const CoeffVector &a = cs[d(rng)], &b = cs[d(rng)], &c = cs[d(rng)];
        CHECK(poset_compare(a, a) == PosetOrder::Equal);
        PosetOrder ab = poset_compare(a, b), ba = poset_compare(b, a);
        if (ab == PosetOrder::Less) CHECK(ba == PosetOrder::Greater);
        if (ab == PosetOrder::Equal) CHECK(ba == PosetOrder::Equal);
        if (poset_compare(a, b) == PosetOrder::Less &&
            poset_compare(b, c) == PosetOrder::Less)
            CHECK(poset_compare(a, c) == PosetOrder::Less);
    }
}
