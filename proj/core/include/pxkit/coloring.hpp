#pragma once

#include "pxkit/graph.hpp"

#include <map>
#include <optional>
#include <vector>

namespace pxkit {

// Edge coloring: colors[id] in 1..palette for every edge id of the host graph.
struct EdgeColoring {
    std::vector<int> colors;
    int palette = 0;

    std::vector<int> used_colors() const; // sorted, distinct
};

enum class TreePredicate { proper, rainbow };

// A tree inside the host graph covering the vertex set s.
struct TreeWitness {
    std::vector<int> s;          // sorted vertices
    std::vector<int> tree_edges; // sorted edge ids
};

// True iff the edge set forms a tree on the vertices it touches.
bool edge_set_is_tree(const Graph& g, const std::vector<int>& tree_edges);

// True iff every vertex of s is touched by the tree (a lone vertex counts as
// covered only when s has at most one element and the tree is empty).
bool tree_covers(const Graph& g, const std::vector<int>& tree_edges, const std::vector<int>& s);

// Proper: no two tree edges sharing a vertex have equal colors.
// Rainbow: all tree edge colors pairwise distinct.
// Both throw InvalidInput when the edge set is not a tree.
bool is_proper_tree(const Graph& g, const EdgeColoring& col, const std::vector<int>& tree_edges);
bool is_rainbow_tree(const Graph& g, const EdgeColoring& col, const std::vector<int>& tree_edges);

// Exhaustive search for a tree covering s whose edges satisfy the predicate:
// connected vertex supersets of s by increasing size (then lexicographic),
// spanning trees of each induced subgraph in stream order; first hit wins.
// Requires g connected, |s| >= 2, n <= 10.
std::optional<TreeWitness> proper_s_tree_exists(const Graph& g, const EdgeColoring& col,
                                                const std::vector<int>& s);
std::optional<TreeWitness> rainbow_s_tree_exists(const Graph& g, const EdgeColoring& col,
                                                 const std::vector<int>& s);

struct VerifyResult {
    // Lexicographically first k-subset with no suitable tree; empty optional
    // means the coloring is valid and `witnesses` holds one tree per subset.
    std::optional<std::vector<int>> failing;
    std::map<std::vector<int>, TreeWitness> witnesses;

    bool valid() const { return !failing.has_value(); }
};

// Scans all C(n,k) subsets in lexicographic order. Requires 2 <= k <= n <= 10,
// g connected, col well-formed for g.
VerifyResult verify_k_proper(const Graph& g, const EdgeColoring& col, int k);
VerifyResult verify_k_rainbow(const Graph& g, const EdgeColoring& col, int k);

// Fast existence-only scan used inside the solver's search loop: subsets are
// tried in a heuristic order (those containing a max-degree vertex first) and
// `try_first`, when given, is tested before anything else. Returns a failing
// subset or nothing.
std::optional<std::vector<int>> find_failing_subset(const Graph& g, const EdgeColoring& col, int k,
                                                    TreePredicate pred,
                                                    const std::vector<int>* try_first = nullptr);

struct ChiPrimeResult {
    int value = 0;
    EdgeColoring coloring;
};

// Exact edge-chromatic number: palette Delta, then Delta+1 (Vizing). n <= 10.
ChiPrimeResult chi_prime(const Graph& g);

// Greedy root-to-leaf proper edge coloring of a tree with exactly Delta colors:
// child edges take the smallest colors distinct from the parent edge and from
// each other. Requires a tree with n >= 2.
EdgeColoring proper_edge_color_tree(const Graph& t);

} // namespace pxkit
