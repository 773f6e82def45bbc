#ifndef TREELAB_ENERGY_HPP
#define TREELAB_ENERGY_HPP

#include "treelab/tree.hpp"

#include <vector>

namespace treelab {

struct SpectralSummary {
    std::vector<double> laplacian_eigenvalues;  // descending, last one 0
    double lel = 0.0;
    double ie = 0.0;
    double subdivision_energy = 0.0;
};

// Eigenvalues of L(T) = D - A, sorted descending, smallest clamped to 0.
std::vector<double> laplacian_spectrum(const Tree& t);

// LEL(T) = sum of square roots of the Laplacian eigenvalues.
double lel(const Tree& t);

// Incidence energy via the signless Laplacian Q = D + A (equals LEL for
// bipartite graphs, hence for trees).
double incidence_energy(const Tree& t);

// Eigenvalues of A(T), sorted descending.
std::vector<double> adjacency_spectrum(const Tree& t);

// E(T) = sum of absolute adjacency eigenvalues.
double adjacency_energy(const Tree& t);

// Coulson integral route for E(S(T)) from the exact matching counts of the
// subdivision: (2/pi) * int_0^inf x^-2 log(sum_k m(S(T),k) x^{2k}) dx.
// Throws std::runtime_error with the achieved error estimate if the
// quadrature fails to converge.
double coulson_energy_of_subdivision(const Tree& t);

SpectralSummary spectral_summary(const Tree& t);

}  // namespace treelab

#endif
