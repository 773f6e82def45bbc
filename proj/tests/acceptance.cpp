// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "treelab/energy.hpp"
#include "treelab/extremal.hpp"
#include "treelab/laplacian.hpp"
#include "treelab/matchgen.hpp"

using namespace treelab;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id,
                name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

std::vector<Tree> all_free_trees(int n) {
    return enumerate_trees(n, std::max(n - 1, 1), false);
}

void c1_coefficient_routes() {
    bool ok = true;
    size_t checked = 0;
    for (int n = 1; n <= 10 && ok; ++n)
        for (const Tree& t : all_free_trees(n)) {
            if (coefficients_via_subdivision(t).c != coefficients_via_charpoly(t).c) {
                ok = false;
                break;
            }
            ++checked;
        }
    report(1, "subdivision route = charpoly route, all trees n <= 10", ok,
           std::to_string(checked) + " trees");
}

void c2_greedy_min() {
    bool ok = true;
    size_t trees = 0;
    for (int dplus1 : {3, 4, 5})
        for (int n = dplus1 + 1; n <= 12; ++n) {
            auto rep = verify_greedy_min_matching(n, dplus1, default_x_grid());
            trees += rep.trees_examined;
            if (!rep.verified()) ok = false;
        }
    report(2, "greedy tree minimizes M(S(T), x) over T_{n,d+1}, n <= 12", ok,
           std::to_string(trees) + " trees");
}

void c3_ie_min() {
    bool ok = true;
    size_t trees = 0;
    for (int dplus1 : {3, 4})
        for (int n = dplus1 + 1; n <= 11; ++n) {
            auto rep = verify_ie_min(n, dplus1);
            trees += rep.trees_examined;
            if (!rep.verified()) ok = false;
        }
    report(3, "greedy tree minimizes IE with strict 1e-9 gap, n <= 11", ok,
           std::to_string(trees) + " trees");
}

void c4_energy_identities() {
    bool ok = true;
    for (int n = 1; n <= 10 && ok; ++n)
        for (const Tree& t : all_free_trees(n)) {
            SpectralSummary s = spectral_summary(t);
            if (std::abs(s.ie - s.lel) > 1e-9 ||
                std::abs(2.0 * s.ie - s.subdivision_energy) > 1e-9) {
                ok = false;
                break;
            }
            // subdivision adjacency spectrum is {+-sqrt(mu_k)} with one 0
            std::vector<double> expected;
            for (int k = 0; k < n - 1; ++k) {
                double r = std::sqrt(std::max(s.laplacian_eigenvalues[k], 0.0));
                expected.push_back(r);
                expected.push_back(-r);
            }
            expected.push_back(0.0);
            std::sort(expected.begin(), expected.end(), std::greater<>());
            auto actual = adjacency_spectrum(subdivide(t));
            for (size_t i = 0; i < actual.size(); ++i)
                if (std::abs(actual[i] - expected[i]) > 1e-8) {
                    ok = false;
                    break;
                }
        }
    report(4, "IE = LEL = E(S(T))/2 and spectrum correspondence, n <= 10", ok);
}

void c5_coulson() {
    bool ok = true;
    double worst = 0.0;
    for (int n = 1; n <= 9; ++n)
        for (const Tree& t : all_free_trees(n)) {
            double gap = std::abs(coulson_energy_of_subdivision(t) -
                                  adjacency_energy(subdivide(t)));
            worst = std::max(worst, gap);
            if (gap > 1e-6) ok = false;
        }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "max gap %.3e", worst);
    report(5, "Coulson integral vs eigenvalue energy, n <= 9", ok, buf);
}

void c6_tau_chain() {
    bool ok = check_tau_chain(2, 8, default_x_grid()).verified() &&
              check_tau_chain(3, 5, default_x_grid()).verified() &&
              check_tau_chain(4, 4, default_x_grid()).verified();
    // closed form at five extra rational points
    for (int d : {2, 3, 4}) {
        for (const Rational& x : {Rational(1, 7), Rational(2, 5), Rational(3),
                                  Rational(9, 2), Rational(13, 3)}) {
            Rational expected = (Rational(1) + x) / (Rational(d + 1) * x + Rational(1));
            expected.canonicalize();
            if (tau_at(make_complete_d_ary(d, 2), x, true) != expected) ok = false;
        }
    }
    report(6, "tau(S(C_h), x) strictly decreasing + closed forms", ok);
}

void c7_exchange_random() {
    auto rep = verify_exchange_random(200, 14, default_x_grid(), 20240601);
    report(7, "200 randomized exchanges: monotone, equalities classified",
           rep.verified() && rep.trees_examined >= 200,
           rep.notes["equality_instances"].dump() + " equalities");
}

void c8_broom_max() {
    bool ok = true;
    size_t trees = 0;
    for (int dplus1 : {3, 4})
        for (int n = dplus1 + 1; n <= 12; ++n) {
            auto rep = verify_broom_max(n, dplus1);
            trees += rep.trees_examined;
            if (!rep.verified()) ok = false;
        }
    report(8, "broom maximizes Laplacian coefficients, n <= 12", ok,
           std::to_string(trees) + " trees");
}

void c9_star_path() {
    auto rep = check_star_path(10, default_x_grid());
    report(9, "star/path coefficientwise extremes, n <= 10", rep.verified(),
           std::to_string(rep.trees_examined) + " trees");
}

void c10_cross_degree() {
    auto rep = check_cross_degree(40, {2, 3, 4}, default_x_grid());
    report(10, "M(S(T*_d), x) > M(S(T*_{d+1}), x), n <= 40", rep.verified());
}

void c11_hosoya() {
    bool ok = true;
    for (int n = 4; n <= 12; ++n)
        if (!check_hosoya_min(n, 3).verified()) ok = false;
    for (int n = 5; n <= 12; ++n)
        if (!check_hosoya_min(n, 4).verified()) ok = false;
    report(11, "Z(S(T)) >= Z(S(T*)), equality iff isomorphic, n <= 12", ok);
}

void c12_conjecture_scan() {
    bool ok = true;
    size_t counterexamples = 0;
    for (int dplus1 : {3, 4})
        for (int n = dplus1 + 1; n <= 12; ++n) {
            auto rep = check_conjecture46(n, dplus1);
            counterexamples += rep.violations.size();
            json j = rep.to_json();
            // schema: scan must complete and carry the audit fields
            if (!j.contains("notes") || !j["notes"].contains("per_k_class_minima") ||
                j["notes"]["per_k_class_minima"].size() != static_cast<size_t>(n + 1))
                ok = false;
        }
    report(12, "conjecture scan completes with per-k minima report", ok,
           std::to_string(counterexamples) + " counterexample records");
}

void c13_matching_oracles() {
    bool ok = true;
    for (int n = 1; n <= 8 && ok; ++n)
        for (const Tree& t : all_free_trees(n)) {
            // independent oracle: enumerate all edge subsets
            std::vector<Integer> counts(t.n, Integer(0));
            for (unsigned mask = 0; mask < (1u << t.edges.size()); ++mask) {
                std::vector<int> hit(t.n, 0);
                bool disjoint = true;
                int size = 0;
                for (size_t i = 0; i < t.edges.size() && disjoint; ++i)
                    if (mask >> i & 1u) {
                        auto [a, b] = t.edges[i];
                        if (hit[a]++ || hit[b]++) disjoint = false;
                        ++size;
                    }
                if (disjoint) counts[size] += 1;
            }
            if (matching_poly(t) != IntPoly(std::move(counts))) ok = false;
        }
    for (int n = 1; n <= 9 && ok; ++n)
        for (const Tree& t : all_free_trees(n))
            for (int r = 0; r < t.n; ++r) {
                auto fast = subdivision_triple(RootedTree(t, r));
                auto slow = matching_triple(RootedTree(subdivide(t), r));
                if (fast.m_all != slow.m_all || fast.m_unsat != slow.m_unsat ||
                    fast.m_sat != slow.m_sat)
                    ok = false;
            }
    report(13, "matching-calculus oracles (subset brute force, recursion)", ok);
}

}  // namespace

int main() {
    c1_coefficient_routes();
    c2_greedy_min();
    c3_ie_min();
    c4_energy_identities();
    c5_coulson();
    c6_tau_chain();
    c7_exchange_random();
    c8_broom_max();
    c9_star_path();
    c10_cross_degree();
    c11_hosoya();
    c12_conjecture_scan();
    c13_matching_oracles();
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 13 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
