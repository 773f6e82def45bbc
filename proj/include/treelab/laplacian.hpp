#ifndef TREELAB_LAPLACIAN_HPP
#define TREELAB_LAPLACIAN_HPP

#include "treelab/poly.hpp"
#include "treelab/tree.hpp"

namespace treelab {

// Laplacian coefficient sequence (c_0, ..., c_n): the unsigned coefficients
// of det(lambda*I - L(T)) under the alternating-sign convention.
struct CoeffVector {
    std::vector<Integer> c;  // size n+1

    int order() const { return static_cast<int>(c.size()) - 1; }
};

enum class PosetOrder { Less, Equal, Greater, Incomparable };

// Primary route: c_k = m_k(S(T)), the matching counts of the subdivision.
CoeffVector coefficients_via_subdivision(const Tree& t);

// Independent oracle: exact integer characteristic polynomial of L(T) via
// Faddeev-LeVerrier (all divisions exact).
CoeffVector coefficients_via_charpoly(const Tree& t);

// phi(T, x) = c_0 + c_1 x + ... + c_{n-1} x^{n-1}, exact Horner.
Rational phi_eval(const CoeffVector& c, const Rational& x);

// Componentwise comparison of (c_0, ..., c_{n-1}); Less means <= with at
// least one strict index.
PosetOrder poset_compare(const CoeffVector& a, const CoeffVector& b);

}  // namespace treelab

#endif
