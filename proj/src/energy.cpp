#include "treelab/energy.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "treelab/matchgen.hpp"

namespace treelab {

namespace {

Eigen::MatrixXd adjacency_matrix(const Tree& t) {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(t.n, t.n);
    for (auto& [a, b] : t.edges) {
        A(a, b) = 1.0;
        A(b, a) = 1.0;
    }
    return A;
}

std::vector<double> symmetric_eigenvalues_desc(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigensolver failed");
    std::vector<double> ev(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + m.rows());
    std::reverse(ev.begin(), ev.end());
    return ev;
}

struct Quadrature {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
};

// Adaptive Simpson on [a, b]; fa/fm/fb are precomputed values.
void simpson(const std::function<double(double)>& f, double a, double b, double fa,
             double fm, double fb, double whole, double tol, int depth, Quadrature& q) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol || depth >= 48) {
        if (depth >= 48 && std::abs(err) > 15.0 * tol) {
            q.converged = false;
            q.error += std::abs(err);
        }
        q.value += left + right + err / 15.0;
        return;
    }
    simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth + 1, q);
    simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth + 1, q);
}

Quadrature integrate(const std::function<double(double)>& f, double a, double b,
                     double tol) {
    Quadrature q;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson(f, a, b, fa, fm, fb, whole, tol, 0, q);
    return q;
}

}  // namespace

std::vector<double> laplacian_spectrum(const Tree& t) {
    Eigen::MatrixXd L = -adjacency_matrix(t);
    for (int v = 0; v < t.n; ++v) L(v, v) = t.degree(v);
    auto ev = symmetric_eigenvalues_desc(L);
    if (std::abs(ev.back()) <= 1e-9) ev.back() = 0.0;
    return ev;
}

double lel(const Tree& t) {
    double s = 0.0;
    for (double mu : laplacian_spectrum(t)) s += std::sqrt(std::max(mu, 0.0));
    return s;
}

double incidence_energy(const Tree& t) {
    Eigen::MatrixXd Q = adjacency_matrix(t);
    for (int v = 0; v < t.n; ++v) Q(v, v) = t.degree(v);
    auto ev = symmetric_eigenvalues_desc(Q);
    // Q = D + A is similar to the Laplacian on bipartite graphs, so the
    // smallest eigenvalue is an exact 0; clamp the numerical residue before
    // the square root amplifies it.
    if (std::abs(ev.back()) <= 1e-9) ev.back() = 0.0;
    double s = 0.0;
    for (double q : ev) s += std::sqrt(std::max(q, 0.0));
    return s;
}

std::vector<double> adjacency_spectrum(const Tree& t) {
    return symmetric_eigenvalues_desc(adjacency_matrix(t));
}

double adjacency_energy(const Tree& t) {
    double s = 0.0;
    for (double lam : adjacency_spectrum(t)) s += std::abs(lam);
    return s;
}

double coulson_energy_of_subdivision(const Tree& t) {
    IntPoly p = matching_poly(subdivide(t));  // P(y) = sum_k m_k y^k
    int deg = p.degree();
    if (deg <= 0) return 0.0;
    std::vector<double> c(deg + 1), crev(deg + 1);
    for (int k = 0; k <= deg; ++k) {
        c[k] = p.coeff(k).get_d();
        crev[deg - k] = c[k];
    }
    auto horner = [](const std::vector<double>& cs, double y) {
        double acc = 0.0;
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * y + *it;
        return acc;
    };
    // head: int_0^1 x^-2 log P(x^2) dx, continuous at 0 with limit m_1
    auto head = [&](double x) {
        if (x == 0.0) return c[1];
        return std::log(horner(c, x * x)) / (x * x);
    };
    // tail after x -> 1/t: int_0^1 log P(t^-2) dt
    //   = 2*deg + int_0^1 log(sum_k m_{deg-k} t^{2k}) dt
    auto tail = [&](double x) { return std::log(horner(crev, x * x)); };

    constexpr double tol = 1e-10;
    Quadrature qh = integrate(head, 0.0, 1.0, tol);
    Quadrature qt = integrate(tail, 0.0, 1.0, tol);
    if (!qh.converged || !qt.converged)
        throw std::runtime_error("coulson quadrature did not converge, error ~" +
                                 std::to_string(qh.error + qt.error));
    return 2.0 / std::numbers::pi * (qh.value + 2.0 * deg + qt.value);
}

SpectralSummary spectral_summary(const Tree& t) {
    SpectralSummary s;
    s.laplacian_eigenvalues = laplacian_spectrum(t);
    s.lel = 0.0;
    for (double mu : s.laplacian_eigenvalues) s.lel += std::sqrt(std::max(mu, 0.0));
    s.ie = incidence_energy(t);
    s.subdivision_energy = adjacency_energy(subdivide(t));
    return s;
}

}  // namespace treelab
