#ifndef TREELAB_MATCHGEN_HPP
#define TREELAB_MATCHGEN_HPP

#include "treelab/poly.hpp"
#include "treelab/tree.hpp"

namespace treelab {

// Matching generating function of a rooted tree split by root saturation:
// m_all = m_unsat + m_sat, m_sat has zero constant term.
struct MatchingTriple {
    IntPoly m_all;    // M
    IntPoly m_unsat;  // M0, matchings not saturating the root
    IntPoly m_sat;    // M1, matchings saturating the root
};

// Matchings of a tree with two marked vertices u, v partitioned by which of
// the two are saturated.
struct FourWaySplit {
    IntPoly m00;  // neither
    IntPoly m01;  // v only
    IntPoly m10;  // u only
    IntPoly m11;  // both
};

// Branch recursion: M0 = prod_j M(T_j), M1 = x * sum_j M0(T_j) prod_{i!=j} M(T_i).
MatchingTriple matching_triple(const RootedTree& t);

// Root-independent matching generating function M(T, x).
IntPoly matching_poly(const Tree& t);

// M of the tree obtained by identifying the two roots:
// M(T1)*M0(T2) + M0(T1)*M1(T2).
IntPoly merge_at_root(const MatchingTriple& a, const MatchingTriple& b);

// Triple of S(T) rooted at the image of the original root, computed by the
// subdivision recursion without materializing S(T):
//   M0(S(T)) = prod_j (x*M0(S(T_j)) + M(S(T_j))).
MatchingTriple subdivision_triple(const RootedTree& t);

// Exact tau(T, x) = M0/M (or tau(S(T), x) when subdivided), evaluated by the
// continued-fraction recursions; requires x > 0.
Rational tau_at(const RootedTree& t, const Rational& x, bool subdivided);

// Dynamic program rooted at u tracking (u saturation, v saturation).
FourWaySplit four_way_split(const Tree& t0, int u, int v);

// Hosoya index Z(T) = M(T, 1).
Integer hosoya(const Tree& t);

}  // namespace treelab

#endif
