#include "treelab/tree.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace treelab {

Tree::Tree(int n_, std::vector<std::pair<int, int>> edges_)
    : n(n_), edges(std::move(edges_)) {
    if (n < 1) throw std::invalid_argument("Tree: n must be >= 1");
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("Tree: expected n-1 edges");
    adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("Tree: vertex out of range");
        if (a == b) throw std::invalid_argument("Tree: self-loop");
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw std::invalid_argument("Tree: duplicate edge");
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    // n-1 edges + connected => tree
    std::vector<char> vis(n, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int w = q.front();
        q.pop();
        for (int x : adj_[w])
            if (!vis[x]) {
                vis[x] = 1;
                ++cnt;
                q.push(x);
            }
    }
    if (cnt != n) throw std::invalid_argument("Tree: not connected");
}

int Tree::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

RootedTree::RootedTree(Tree t, int r) : tree(std::move(t)), root(r) {
    if (root < 0 || root >= tree.n)
        throw std::invalid_argument("RootedTree: root out of range");
}

std::vector<RootedTree> RootedTree::branches() const {
    std::vector<RootedTree> out;
    const auto& adj = tree.adj();
    for (int c : adj[root]) {
        // collect the component of c in tree - root
        std::vector<int> comp;
        std::vector<int> label(tree.n, -1);
        std::queue<int> q;
        q.push(c);
        label[c] = 0;
        comp.push_back(c);
        while (!q.empty()) {
            int w = q.front();
            q.pop();
            for (int x : adj[w]) {
                if (x == root || label[x] >= 0) continue;
                label[x] = static_cast<int>(comp.size());
                comp.push_back(x);
                q.push(x);
            }
        }
        std::vector<std::pair<int, int>> es;
        for (int w : comp)
            for (int x : adj[w])
                if (x != root && w < x) es.emplace_back(label[w], label[x]);
        out.emplace_back(Tree(static_cast<int>(comp.size()), std::move(es)), 0);
    }
    return out;
}

Tree make_path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Tree(n, std::move(es));
}

Tree make_star(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < n; ++i) es.emplace_back(0, i);
    return Tree(n, std::move(es));
}

RootedTree make_complete_d_ary(int d, int h, int max_vertices) {
    if (d < 1 || h < 1) throw std::invalid_argument("make_complete_d_ary: d,h >= 1");
    // order = 1 + d + d^2 + ... + d^(h-1)
    long long total = 1, pw = 1;
    for (int i = 1; i < h; ++i) {
        pw *= d;
        total += pw;
        if (total > max_vertices)
            throw std::invalid_argument("make_complete_d_ary: exceeds vertex limit");
    }
    std::vector<std::pair<int, int>> es;
    // BFS layout: level boundaries, children of vertex at depth < h-1
    std::vector<int> depth{0};
    int next = 1;
    for (int v = 0; v < total; ++v) {
        if (depth[v] == h - 1) continue;
        for (int c = 0; c < d; ++c) {
            es.emplace_back(v, next);
            depth.push_back(depth[v] + 1);
            ++next;
        }
    }
    return RootedTree(Tree(static_cast<int>(total), std::move(es)), 0);
}

Tree make_greedy(int n, int dplus1) {
    if (dplus1 < 2) throw std::invalid_argument("make_greedy: dplus1 >= 2");
    if (n < dplus1 + 1)
        throw std::invalid_argument("make_greedy: n must be >= dplus1 + 1");
    std::vector<std::pair<int, int>> es;
    std::queue<std::pair<int, int>> q;  // (vertex, child capacity)
    q.emplace(0, dplus1);
    int next = 1;
    while (next < n) {
        auto [v, cap] = q.front();
        q.pop();
        for (int c = 0; c < cap && next < n; ++c) {
            es.emplace_back(v, next);
            q.emplace(next, dplus1 - 1);
            ++next;
        }
    }
    return Tree(n, std::move(es));
}

Tree make_broom(int n, int dplus1) {
    if (dplus1 < 2) throw std::invalid_argument("make_broom: dplus1 >= 2");
    if (n < dplus1 + 1)
        throw std::invalid_argument("make_broom: n must be >= dplus1 + 1");
    int d = dplus1 - 1;
    // path 0..n-d-1, leaves n-d..n-1 attached to vertex 0
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n - d; ++i) es.emplace_back(i, i + 1);
    for (int i = n - d; i < n; ++i) es.emplace_back(0, i);
    return Tree(n, std::move(es));
}

Tree subdivide(const Tree& t) {
    std::vector<std::pair<int, int>> es;
    es.reserve(2 * t.edges.size());
    for (int i = 0; i < static_cast<int>(t.edges.size()); ++i) {
        es.emplace_back(t.edges[i].first, t.n + i);
        es.emplace_back(t.n + i, t.edges[i].second);
    }
    return Tree(2 * t.n - 1, std::move(es));
}

namespace {

std::string ahu(const std::vector<std::vector<int>>& adj, int root, int parent) {
    std::vector<std::string> kids;
    for (int c : adj[root])
        if (c != parent) kids.push_back(ahu(adj, c, root));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids) out += k;
    out += ")";
    return out;
}

// Centers of a free tree via leaf stripping: one or two vertices.
std::vector<int> centers(const Tree& t) {
    if (t.n == 1) return {0};
    std::vector<int> deg(t.n);
    std::vector<int> layer;
    for (int v = 0; v < t.n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    int remaining = t.n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (int w : t.adj()[v])
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace

std::string rooted_code(const RootedTree& t) {
    return ahu(t.tree.adj(), t.root, -1);
}

std::string canonical_code(const Tree& t) {
    auto cs = centers(t);
    if (cs.size() == 1) return "0" + ahu(t.adj(), cs[0], -1);
    // bicentral: code the two halves across the central edge
    std::string a = ahu(t.adj(), cs[0], cs[1]);
    std::string b = ahu(t.adj(), cs[1], cs[0]);
    if (b < a) std::swap(a, b);
    return "1" + a + b;
}

Tree prufer_decode(int n, const std::vector<int>& seq) {
    if (n == 1) return Tree(1, {});
    if (static_cast<int>(seq.size()) != n - 2)
        throw std::invalid_argument("prufer_decode: need n-2 entries");
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::vector<std::pair<int, int>> es;
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);
    for (int s : seq) {
        int leaf = leaves.top();
        leaves.pop();
        es.emplace_back(leaf, s);
        if (--deg[s] == 1) leaves.push(s);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    es.emplace_back(a, b);
    return Tree(n, std::move(es));
}

namespace {

std::vector<Tree> sorted_by_code(std::map<std::string, Tree>&& by_code) {
    std::vector<Tree> out;
    out.reserve(by_code.size());
    for (auto& [code, t] : by_code) out.push_back(std::move(t));
    return out;
}

}  // namespace

std::vector<Tree> enumerate_trees_prufer(int n, int max_deg, bool exact) {
    std::map<std::string, Tree> by_code;
    if (n <= 2) {
        Tree t = make_path(n);
        if (exact ? t.max_degree() == max_deg : t.max_degree() <= max_deg)
            by_code.emplace(canonical_code(t), t);
        return sorted_by_code(std::move(by_code));
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        Tree t = prufer_decode(n, seq);
        int md = t.max_degree();
        if (exact ? md == max_deg : md <= max_deg) {
            std::string code = canonical_code(t);
            by_code.emplace(std::move(code), std::move(t));
        }
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return sorted_by_code(std::move(by_code));
}

std::vector<Tree> enumerate_trees(int n, int max_deg, bool exact) {
    // Degree-constrained leaf extension with canonical dedup: every tree of
    // order k with max degree <= D arises from one of order k-1 by attaching
    // a leaf at a vertex of degree < D.
    std::vector<Tree> level{Tree(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Tree> next;
        for (const Tree& t : level) {
            for (int v = 0; v < t.n; ++v) {
                if (t.degree(v) >= max_deg) continue;
                auto es = t.edges;
                es.emplace_back(v, t.n);
                Tree bigger(t.n + 1, std::move(es));
                std::string code = canonical_code(bigger);
                next.emplace(std::move(code), std::move(bigger));
            }
        }
        level = sorted_by_code(std::move(next));
    }
    if (exact) {
        std::erase_if(level, [&](const Tree& t) { return t.max_degree() != max_deg; });
    }
    return level;
}

Decomposition decompose(const Tree& t, int u, int v) {
    if (u == v) throw std::invalid_argument("decompose: u == v");
    if (u < 0 || u >= t.n || v < 0 || v >= t.n)
        throw std::invalid_argument("decompose: vertex out of range");

    // For a marked vertex m with opposite vertex o: every neighbor of m not
    // on the m->o side spawns a branch (the component of t-m rooted there,
    // plus a copy of m as the branch root).
    auto side_toward = [&](int from, int target) {
        // neighbor of `from` on the path to `target`
        std::vector<int> par(t.n, -2);
        std::queue<int> q;
        q.push(from);
        par[from] = -1;
        while (!q.empty()) {
            int w = q.front();
            q.pop();
            for (int x : t.adj()[w])
                if (par[x] == -2) {
                    par[x] = w;
                    q.push(x);
                }
        }
        int cur = target;
        while (par[cur] != from) cur = par[cur];
        return cur;
    };

    auto branches_at = [&](int m, int toward) {
        std::vector<RootedTree> out;
        for (int c : t.adj()[m]) {
            if (c == toward) continue;
            // component of c in t - m, with a fresh root copy of m
            std::vector<int> comp{c};
            std::vector<int> label(t.n, -1);
            label[c] = 1;  // 0 is the root copy
            std::queue<int> q;
            q.push(c);
            while (!q.empty()) {
                int w = q.front();
                q.pop();
                for (int x : t.adj()[w])
                    if (x != m && label[x] < 0) {
                        label[x] = static_cast<int>(comp.size()) + 1;
                        comp.push_back(x);
                        q.push(x);
                    }
            }
            std::vector<std::pair<int, int>> es{{0, 1}};
            for (int w : comp)
                for (int x : t.adj()[w])
                    if (x != m && w < x) es.emplace_back(label[w], label[x]);
            out.emplace_back(Tree(static_cast<int>(comp.size()) + 1, std::move(es)), 0);
        }
        return out;
    };

    int tu = side_toward(u, v);
    int tv = side_toward(v, u);
    Decomposition dec;
    dec.left_branches = branches_at(u, tu);
    dec.right_branches = branches_at(v, tv);

    // T0 = t minus all branch interiors: vertices reachable from u without
    // entering a removed component.
    std::vector<char> removed(t.n, 0);
    auto mark_removed = [&](int m, int toward) {
        for (int c : t.adj()[m]) {
            if (c == toward) continue;
            std::queue<int> q;
            q.push(c);
            removed[c] = 1;
            while (!q.empty()) {
                int w = q.front();
                q.pop();
                for (int x : t.adj()[w])
                    if (x != m && !removed[x]) {
                        removed[x] = 1;
                        q.push(x);
                    }
            }
        }
    };
    mark_removed(u, tu);
    mark_removed(v, tv);

    std::vector<int> label(t.n, -1);
    std::vector<int> keep;
    for (int w = 0; w < t.n; ++w)
        if (!removed[w]) {
            label[w] = static_cast<int>(keep.size());
            keep.push_back(w);
        }
    std::vector<std::pair<int, int>> es;
    for (auto& [a, b] : t.edges)
        if (!removed[a] && !removed[b]) es.emplace_back(label[a], label[b]);
    dec.t0 = Tree(static_cast<int>(keep.size()), std::move(es));
    dec.u = label[u];
    dec.v = label[v];
    return dec;
}

Tree compose(const Decomposition& dec) {
    std::vector<std::pair<int, int>> es = dec.t0.edges;
    int next = dec.t0.n;
    auto attach = [&](const RootedTree& br, int at) {
        // identify br.root with `at`, append the remaining vertices
        std::vector<int> label(br.tree.n, -1);
        label[br.root] = at;
        for (int w = 0; w < br.tree.n; ++w)
            if (w != br.root) label[w] = next++;
        for (auto& [a, b] : br.tree.edges) es.emplace_back(label[a], label[b]);
    };
    for (const auto& br : dec.left_branches) attach(br, dec.u);
    for (const auto& br : dec.right_branches) attach(br, dec.v);
    return Tree(next, std::move(es));
}

}  // namespace treelab
