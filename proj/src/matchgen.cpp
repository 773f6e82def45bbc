#include "treelab/matchgen.hpp"

#include <array>
#include <functional>
#include <stdexcept>

namespace treelab {

namespace {

const IntPoly kOne = IntPoly::one();
const IntPoly kX = IntPoly({Integer(0), Integer(1)});

// x * sum_j sel[j] * prod_{i != j} base[i], division-free via prefix/suffix
// products of base.
IntPoly cross_sum(const std::vector<IntPoly>& base, const std::vector<IntPoly>& sel) {
    size_t k = base.size();
    if (k == 0) return {};
    std::vector<IntPoly> pre(k + 1, kOne), suf(k + 1, kOne);
    for (size_t i = 0; i < k; ++i) pre[i + 1] = pre[i] * base[i];
    for (size_t i = k; i-- > 0;) suf[i] = suf[i + 1] * base[i];
    IntPoly acc;
    for (size_t j = 0; j < k; ++j) acc = acc + pre[j] * sel[j] * suf[j + 1];
    return acc.shifted(1);
}

}  // namespace

MatchingTriple matching_triple(const RootedTree& t) {
    const auto& adj = t.tree.adj();
    std::function<MatchingTriple(int, int)> dfs = [&](int v, int parent) {
        std::vector<IntPoly> m, m0;
        for (int c : adj[v]) {
            if (c == parent) continue;
            auto tr = dfs(c, v);
            m.push_back(std::move(tr.m_all));
            m0.push_back(std::move(tr.m_unsat));
        }
        MatchingTriple out;
        out.m_unsat = kOne;
        for (const auto& p : m) out.m_unsat = out.m_unsat * p;
        out.m_sat = cross_sum(m, m0);
        out.m_all = out.m_unsat + out.m_sat;
        return out;
    };
    return dfs(t.root, -1);
}

IntPoly matching_poly(const Tree& t) {
    return matching_triple(RootedTree(t, 0)).m_all;
}

IntPoly merge_at_root(const MatchingTriple& a, const MatchingTriple& b) {
    return a.m_all * b.m_unsat + a.m_unsat * b.m_sat;
}

MatchingTriple subdivision_triple(const RootedTree& t) {
    const auto& adj = t.tree.adj();
    std::function<MatchingTriple(int, int)> dfs = [&](int v, int parent) {
        // base[j] = x*M0(S(T_j)) + M(S(T_j)), the factor contributed by the
        // branch together with its subdividing vertex
        std::vector<IntPoly> base, m;
        for (int c : adj[v]) {
            if (c == parent) continue;
            auto tr = dfs(c, v);
            base.push_back(tr.m_unsat.shifted(1) + tr.m_all);
            m.push_back(std::move(tr.m_all));
        }
        MatchingTriple out;
        out.m_unsat = kOne;
        for (const auto& p : base) out.m_unsat = out.m_unsat * p;
        out.m_sat = cross_sum(base, m);
        out.m_all = out.m_unsat + out.m_sat;
        return out;
    };
    return dfs(t.root, -1);
}

Rational tau_at(const RootedTree& t, const Rational& x, bool subdivided) {
    if (x <= 0) throw std::invalid_argument("tau_at: x must be > 0");
    const auto& adj = t.tree.adj();
    std::function<Rational(int, int)> dfs = [&](int v, int parent) {
        Rational sum(0);
        for (int c : adj[v]) {
            if (c == parent) continue;
            Rational tc = dfs(c, v);
            if (subdivided) {
                Rational term = x / (Rational(1) + x * tc);
                term.canonicalize();
                sum += term;
            } else {
                sum += x * tc;
            }
        }
        Rational r = Rational(1) / (Rational(1) + sum);
        r.canonicalize();
        return r;
    };
    return dfs(t.root, -1);
}

FourWaySplit four_way_split(const Tree& t0, int u, int v) {
    if (u == v) throw std::invalid_argument("four_way_split: u == v");
    if (u < 0 || u >= t0.n || v < 0 || v >= t0.n)
        throw std::invalid_argument("four_way_split: vertex out of range");
    const auto& adj = t0.adj();
    using State = std::array<std::array<IntPoly, 2>, 2>;  // [root sat][v sat]
    std::function<State(int, int)> dfs = [&](int w, int parent) {
        State f;
        f[0][0] = kOne;
        for (int c : adj[w]) {
            if (c == parent) continue;
            State g = dfs(c, w);
            State nf;
            for (int a = 0; a < 2; ++a)
                for (int b1 = 0; b1 < 2; ++b1) {
                    if (f[a][b1].is_zero()) continue;
                    for (int b2 = 0; b2 < 2; ++b2) {
                        int b = b1 | b2;
                        // edge w-c unused: child root free
                        nf[a][b] = nf[a][b] + f[a][b1] * (g[0][b2] + g[1][b2]);
                        // edge w-c in the matching; matching it saturates c,
                        // which flips the v flag when c happens to be v
                        if (a == 0) {
                            int bm = b | (c == v ? 1 : 0);
                            nf[1][bm] = nf[1][bm] + (f[0][b1] * g[0][b2]).shifted(1);
                        }
                    }
                }
            f = std::move(nf);
        }
        if (w == v) {
            // v's own saturation is the root flag at this node
            State nf;
            nf[0][0] = std::move(f[0][0]);
            nf[1][1] = std::move(f[1][0]);
            f = std::move(nf);
        }
        return f;
    };
    State f = dfs(u, -1);
    return FourWaySplit{std::move(f[0][0]), std::move(f[0][1]), std::move(f[1][0]),
                        std::move(f[1][1])};
}

Integer hosoya(const Tree& t) { return matching_poly(t).eval_int(1); }

}  // namespace treelab
