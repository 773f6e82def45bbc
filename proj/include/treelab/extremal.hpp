#ifndef TREELAB_EXTREMAL_HPP
#define TREELAB_EXTREMAL_HPP

#include "treelab/json_io.hpp"
#include "treelab/matchgen.hpp"
#include "treelab/tree.hpp"

#include <utility>
#include <vector>

namespace treelab {

struct VerificationReport {
    std::string statement;
    json params = json::object();
    std::size_t trees_examined = 0;
    std::vector<json> violations;
    json notes = json::object();
    double elapsed_seconds = 0.0;

    bool verified() const { return violations.empty(); }
    json to_json() const;
    // statement, n, dplus1, trees, violations, seconds
    std::string csv_row() const;
    static std::string csv_header();
};

struct ExchangeReport {
    Rational x;
    Rational m_before;  // M(S(T), x)
    Rational m_after;   // M(S(T'), x)
    bool swapped_uv = false;      // u/v roles flipped to restore M10 <= M01
    bool equality = false;
    int equality_condition = 0;   // 1 or 2 when equality, else 0
};

// Branch rearrangement: sort all branches by tau(S(.), x) descending and
// reassign the top d1+d2-d to u, the rest to v. Guarantees
// M(S(T), x) >= M(S(T'), x). Requires d >= max(d1, d2) and x > 0.
std::pair<Tree, ExchangeReport> exchange(const Decomposition& dec, int d,
                                         const Rational& x);

std::vector<Rational> default_x_grid();

// M(S(T*), x) <= M(S(T), x) over the exact-max-degree class, strict unless
// isomorphic; equivalently phi minimality.
VerificationReport verify_greedy_min_matching(int n, int dplus1,
                                              const std::vector<Rational>& xs);

// c_k(T) <= c_k(B_{n,d+1}) componentwise, vector equality iff isomorphic.
VerificationReport verify_broom_max(int n, int dplus1);

// IE(T*) minimal with strict gap > 1e-9 against non-isomorphic members.
VerificationReport verify_ie_min(int n, int dplus1);

// Report (never assert) trees with some c_k below the greedy tree's c_k,
// plus per-k class minima for audit.
VerificationReport check_conjecture46(int n, int dplus1);

// tau(S(C_h), x) strictly decreasing in h, plus the h<=2 closed forms.
VerificationReport check_tau_chain(int d, int hmax, const std::vector<Rational>& xs);

// M(S(T*_d), x) > M(S(T*_{d+1}), x) for n > d + 1.
VerificationReport check_cross_degree(int nmax, const std::vector<int>& ds,
                                      const std::vector<Rational>& xs);

// Star minimal / path maximal over all free trees, coefficientwise and at xs.
VerificationReport check_star_path(int nmax, const std::vector<Rational>& xs);

// Z(S(T)) >= Z(S(T*)), equality iff isomorphic.
VerificationReport check_hosoya_min(int n, int dplus1);

// Randomized exchange instances: exchange never increases M(S(.), x) and
// every equality matches one of the two stated conditions.
VerificationReport verify_exchange_random(int count, int nmax,
                                          const std::vector<Rational>& xs,
                                          unsigned seed);

// Randomized subtree instances: proper rooted subtrees have strictly
// larger tau(S(.), x).
VerificationReport check_tau_subtree_random(int count, int nmax,
                                            const std::vector<Rational>& xs,
                                            unsigned seed);

}  // namespace treelab

#endif
