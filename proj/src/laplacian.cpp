#include "treelab/laplacian.hpp"

#include <cassert>
#include <stdexcept>

#include "treelab/matchgen.hpp"

namespace treelab {

CoeffVector coefficients_via_subdivision(const Tree& t) {
    IntPoly m = matching_poly(subdivide(t));
    CoeffVector out;
    out.c.assign(t.n + 1, Integer(0));
    for (int k = 0; k <= t.n; ++k) out.c[k] = m.coeff(k);
    // m has degree n-1 (c_n = 0 for any tree), so c_n stays 0
    return out;
}

namespace {

// Dense integer matrix helpers for Faddeev-LeVerrier at tree sizes.
using Mat = std::vector<std::vector<Integer>>;

Mat laplacian_matrix(const Tree& t) {
    Mat L(t.n, std::vector<Integer>(t.n, Integer(0)));
    for (int v = 0; v < t.n; ++v) L[v][v] = t.degree(v);
    for (auto& [a, b] : t.edges) {
        L[a][b] = -1;
        L[b][a] = -1;
    }
    return L;
}

Mat mul(const Mat& a, const Mat& b) {
    int n = static_cast<int>(a.size());
    Mat r(n, std::vector<Integer>(n, Integer(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

}  // namespace

CoeffVector coefficients_via_charpoly(const Tree& t) {
    int n = t.n;
    Mat A = laplacian_matrix(t);
    // det(lambda I - A) = lambda^n + a_1 lambda^{n-1} + ... + a_n
    std::vector<Integer> a(n + 1, Integer(0));
    Mat N(n, std::vector<Integer>(n, Integer(0)));
    for (int i = 0; i < n; ++i) N[i][i] = 1;
    for (int k = 1; k <= n; ++k) {
        Mat M = mul(A, N);
        Integer tr(0);
        for (int i = 0; i < n; ++i) tr += M[i][i];
        // exact division: the trace of M_k is divisible by k
        Integer q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), tr.get_mpz_t(), Integer(k).get_mpz_t());
        assert(r == 0);
        a[k] = -q;
        N = M;
        for (int i = 0; i < n; ++i) N[i][i] += a[k];
    }
    CoeffVector out;
    out.c.assign(n + 1, Integer(0));
    out.c[0] = 1;
    for (int k = 1; k <= n; ++k) {
        // a_k = (-1)^k c_k
        out.c[k] = (k % 2 == 0) ? a[k] : -a[k];
        if (out.c[k] < 0)
            throw std::logic_error("coefficients_via_charpoly: negative coefficient");
    }
    return out;
}

Rational phi_eval(const CoeffVector& c, const Rational& x) {
    Rational acc(0);
    for (int k = c.order() - 1; k >= 0; --k) {
        acc *= x;
        acc += Rational(c.c[k]);
    }
    acc.canonicalize();
    return acc;
}

PosetOrder poset_compare(const CoeffVector& a, const CoeffVector& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("poset_compare: mismatched orders");
    bool a_below = false, b_below = false;
    for (int k = 0; k < a.order(); ++k) {
        if (a.c[k] < b.c[k]) a_below = true;
        if (a.c[k] > b.c[k]) b_below = true;
    }
    if (a_below && b_below) return PosetOrder::Incomparable;
    if (a_below) return PosetOrder::Less;
    if (b_below) return PosetOrder::Greater;
    return PosetOrder::Equal;
}

}  // namespace treelab
