#ifndef TREELAB_TESTS_ORACLES_HPP
#define TREELAB_TESTS_ORACLES_HPP

// Brute-force oracles, independent of the library's recursions: they
// enumerate edge subsets directly and count disjoint ones.

#include "treelab/matchgen.hpp"
#include "treelab/poly.hpp"
#include "treelab/tree.hpp"

#include <vector>

namespace treelab::oracle {

inline bool is_matching(const Tree& t, unsigned mask, std::vector<int>& hit) {
    hit.assign(t.n, 0);
    for (size_t i = 0; i < t.edges.size(); ++i) {
        if (!(mask >> i & 1u)) continue;
        auto [a, b] = t.edges[i];
        if (hit[a]++ || hit[b]++) return false;
    }
    return true;
}

inline IntPoly brute_matching_poly(const Tree& t) {
    std::vector<Integer> counts(t.n, Integer(0));
    std::vector<int> hit;
    for (unsigned mask = 0; mask < (1u << t.edges.size()); ++mask) {
        if (!is_matching(t, mask, hit)) continue;
        counts[__builtin_popcount(mask)] += 1;
    }
    return IntPoly(std::move(counts));
}

inline MatchingTriple brute_matching_triple(const RootedTree& t) {
    std::vector<Integer> unsat(t.tree.n, Integer(0)), sat(t.tree.n, Integer(0));
    std::vector<int> hit;
    for (unsigned mask = 0; mask < (1u << t.tree.edges.size()); ++mask) {
        if (!is_matching(t.tree, mask, hit)) continue;
        (hit[t.root] ? sat : unsat)[__builtin_popcount(mask)] += 1;
    }
    MatchingTriple out;
    out.m_unsat = IntPoly(std::move(unsat));
    out.m_sat = IntPoly(std::move(sat));
    out.m_all = out.m_unsat + out.m_sat;
    return out;
}

inline FourWaySplit brute_four_way_split(const Tree& t, int u, int v) {
    std::vector<std::vector<Integer>> c(4, std::vector<Integer>(t.n, Integer(0)));
    std::vector<int> hit;
    for (unsigned mask = 0; mask < (1u << t.edges.size()); ++mask) {
        if (!is_matching(t, mask, hit)) continue;
        int idx = (hit[u] ? 2 : 0) | (hit[v] ? 1 : 0);
        c[idx][__builtin_popcount(mask)] += 1;
    }
    return FourWaySplit{IntPoly(std::move(c[0])), IntPoly(std::move(c[1])),
                        IntPoly(std::move(c[2])), IntPoly(std::move(c[3]))};
}

}  // namespace treelab::oracle

#endif
