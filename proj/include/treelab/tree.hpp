#ifndef TREELAB_TREE_HPP
#define TREELAB_TREE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treelab {

// Unrooted simple tree on n labeled vertices {0,...,n-1}.
struct Tree {
    int n = 1;
    std::vector<std::pair<int, int>> edges;

    Tree() = default;
    Tree(int n_, std::vector<std::pair<int, int>> edges_);

    // Adjacency list, built on construction.
    const std::vector<std::vector<int>>& adj() const { return adj_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

private:
    std::vector<std::vector<int>> adj_;
};

struct RootedTree {
    Tree tree;
    int root = 0;

    RootedTree() = default;
    RootedTree(Tree t, int r);

    // Components of tree - root, each rooted at the corresponding neighbor
    // of the root, with vertices relabeled to 0..k-1.
    std::vector<RootedTree> branches() const;
};

// Middle tree t0 with marked vertices u, v plus branch lists attached at u
// and at v. Branch roots are identified with u (resp. v) on composition, so
// a branch of order s contributes s-1 new vertices.
struct Decomposition {
    Tree t0;
    int u = 0;
    int v = 0;
    std::vector<RootedTree> left_branches;
    std::vector<RootedTree> right_branches;
};

Tree make_path(int n);
Tree make_star(int n);

// Complete d-ary tree C_h: C_1 is a single vertex, the root of C_h has d
// branches each equal to C_{h-1}. Throws if the order exceeds max_vertices.
RootedTree make_complete_d_ary(int d, int h, int max_vertices = 1 << 20);

// Greedy tree on n vertices with maximum degree dplus1: BFS left-to-right
// fill, root gets dplus1 children and every later internal vertex gets
// dplus1-1 children. Requires n >= dplus1 + 1.
Tree make_greedy(int n, int dplus1);

// Broom B_{n,d+1}: path on n-d vertices with d extra pendant vertices on one
// endpoint. Requires n >= dplus1 + 1.
Tree make_broom(int n, int dplus1);

// Subdivision tree S(T): original vertices keep their labels 0..n-1, the
// vertex splitting edge i is labeled n+i.
Tree subdivide(const Tree& t);

// Isomorphism-invariant code: AHU encoding rooted at the center (bicentral
// ties resolved by the lexicographically smaller half code).
std::string canonical_code(const Tree& t);

// AHU code of a rooted tree; equal iff rooted-isomorphic.
std::string rooted_code(const RootedTree& t);

// One representative per isomorphism class, sorted by canonical code.
// exact=true keeps only trees whose maximum degree equals max_deg,
// otherwise max degree <= max_deg.
std::vector<Tree> enumerate_trees(int n, int max_deg, bool exact);

// Brute-force oracle: decode every Pruefer sequence and dedup. Exponential,
// intended for n <= 9.
std::vector<Tree> enumerate_trees_prufer(int n, int max_deg, bool exact);

// Decode a Pruefer sequence of length n-2 over {0,...,n-1}.
Tree prufer_decode(int n, const std::vector<int>& seq);

Decomposition decompose(const Tree& t, int u, int v);
Tree compose(const Decomposition& dec);

}  // namespace treelab

#endif
