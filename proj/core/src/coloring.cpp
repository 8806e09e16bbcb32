#include "pxkit/coloring.hpp"
#include "pxkit/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <string>

namespace pxkit {

std::vector<int> EdgeColoring::used_colors() const {
    std::vector<int> u(colors);
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

namespace {

void require_coloring(const Graph& g, const EdgeColoring& col) {
    if (static_cast<int>(col.colors.size()) != g.edge_count())
        throw InvalidInput("coloring has " + std::to_string(col.colors.size()) + " entries for " +
                           std::to_string(g.edge_count()) + " edges");
    for (int c : col.colors)
        if (c < 1 || c > col.palette)
            throw InvalidInput("edge color " + std::to_string(c) + " outside palette 1.." +
                               std::to_string(col.palette));
}

std::vector<int> touched_vertices(const Graph& g, const std::vector<int>& tree_edges) {
    std::vector<int> verts;
    for (int e : tree_edges) {
        if (e < 0 || e >= g.edge_count())
            throw InvalidInput("edge id " + std::to_string(e) + " out of range");
        auto [u, v] = g.edge(e);
        verts.push_back(u);
        verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

} // namespace

bool edge_set_is_tree(const Graph& g, const std::vector<int>& tree_edges) {
    if (tree_edges.empty())
        return true; // the trivial tree
    {
        std::set<int> distinct(tree_edges.begin(), tree_edges.end());
        if (distinct.size() != tree_edges.size())
            return false;
    }
    std::vector<int> verts = touched_vertices(g, tree_edges);
    if (verts.size() != tree_edges.size() + 1)
        return false;
    // Acyclic and right edge count on its vertex set: connectivity via union-find.
    std::vector<int> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    for (int e : tree_edges) {
        auto [u, v] = g.edge(e);
        int a = find(local(u)), b = find(local(v));
        if (a == b)
            return false;
        parent[static_cast<std::size_t>(b)] = a;
    }
    return true;
}

bool tree_covers(const Graph& g, const std::vector<int>& tree_edges, const std::vector<int>& s) {
    if (tree_edges.empty())
        return s.size() <= 1;
    std::vector<int> verts = touched_vertices(g, tree_edges);
    for (int v : s)
        if (!std::binary_search(verts.begin(), verts.end(), v))
            return false;
    return true;
}

bool is_proper_tree(const Graph& g, const EdgeColoring& col, const std::vector<int>& tree_edges) {
    require_coloring(g, col);
    if (!edge_set_is_tree(g, tree_edges))
        throw InvalidInput("edge set is not a tree");
    // Adjacent tree edges must differ: per-vertex distinctness of incident colors.
    std::vector<std::vector<int>> at(static_cast<std::size_t>(g.vertex_count()));
    for (int e : tree_edges) {
        auto [u, v] = g.edge(e);
        int c = col.colors[static_cast<std::size_t>(e)];
        for (int w : {u, v}) {
            auto& seen = at[static_cast<std::size_t>(w)];
            if (std::find(seen.begin(), seen.end(), c) != seen.end())
                return false;
            seen.push_back(c);
        }
    }
    return true;
}

bool is_rainbow_tree(const Graph& g, const EdgeColoring& col, const std::vector<int>& tree_edges) {
    require_coloring(g, col);
    if (!edge_set_is_tree(g, tree_edges))
        throw InvalidInput("edge set is not a tree");
    std::vector<int> cs;
    for (int e : tree_edges)
        cs.push_back(col.colors[static_cast<std::size_t>(e)]);
    std::sort(cs.begin(), cs.end());
    return std::adjacent_find(cs.begin(), cs.end()) == cs.end();
}

namespace {

struct Induced {
    Graph sub;
    std::vector<int> edge_map; // sub edge id -> host edge id
};

Induced induce(const Graph& g, const std::vector<int>& verts) {
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_map;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (std::binary_search(verts.begin(), verts.end(), u) &&
            std::binary_search(verts.begin(), verts.end(), v)) {
            edges.emplace_back(local(u), local(v));
            edge_map.push_back(e);
        }
    }
    return {Graph::from_edges(static_cast<int>(verts.size()), edges), std::move(edge_map)};
}

// Predicate check on a candidate tree given as sub-edge ids; colors read
// through the host mapping. Avoids building per-tree EdgeColoring objects.
bool tree_passes(const Graph& sub, const std::vector<int>& edge_map, const EdgeColoring& col,
                 const std::vector<int>& tree, TreePredicate pred) {
    if (pred == TreePredicate::rainbow) {
        std::array<int, 16> cs{};
        int cnt = 0;
        for (int e : tree) {
            int c = col.colors[static_cast<std::size_t>(edge_map[static_cast<std::size_t>(e)])];
            for (int i = 0; i < cnt; ++i)
                if (cs[static_cast<std::size_t>(i)] == c)
                    return false;
            cs[static_cast<std::size_t>(cnt++)] = c;
        }
        return true;
    }
    std::array<std::uint32_t, 16> seen{}; // per-vertex color bitmask; palette fits desk scale
    for (int e : tree) {
        int c = col.colors[static_cast<std::size_t>(edge_map[static_cast<std::size_t>(e)])];
        auto [u, v] = sub.edge(e);
        if (c < 32) {
            std::uint32_t bit = 1u << c;
            if ((seen[static_cast<std::size_t>(u)] & bit) || (seen[static_cast<std::size_t>(v)] & bit))
                return false;
            seen[static_cast<std::size_t>(u)] |= bit;
            seen[static_cast<std::size_t>(v)] |= bit;
        } else {
            // Palettes past 31 cannot occur under the n <= 10 caps, but stay correct.
            return is_proper_tree(sub, EdgeColoring{[&] {
                                      std::vector<int> cs;
                                      for (int id = 0; id < sub.edge_count(); ++id)
                                          cs.push_back(col.colors[static_cast<std::size_t>(
                                              edge_map[static_cast<std::size_t>(id)])]);
                                      return cs;
                                  }(),
                                                    col.palette},
                                  tree);
        }
    }
    return true;
}

std::optional<TreeWitness> s_tree_search(const Graph& g, const EdgeColoring& col,
                                         const std::vector<int>& s_in, TreePredicate pred) {
    require_coloring(g, col);
    if (!is_connected(g))
        throw InvalidInput("s-tree search requires a connected graph");
    if (g.vertex_count() > 10)
        throw CapError("s-tree search supports at most 10 vertices, got " +
                       std::to_string(g.vertex_count()));
    std::vector<int> s(s_in);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() < 2)
        throw InvalidInput("s-tree search needs at least two vertices in s");
    for (int v : s)
        if (v < 0 || v >= g.vertex_count())
            throw InvalidInput("s contains vertex " + std::to_string(v) + " outside the graph");

    std::vector<int> rest;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!std::binary_search(s.begin(), s.end(), v))
            rest.push_back(v);

    std::optional<TreeWitness> found;
    for (std::size_t add = 0; add <= rest.size() && !found; ++add) {
        // Lexicographic combinations of `add` extra vertices.
        std::vector<std::size_t> idx(add);
        std::iota(idx.begin(), idx.end(), 0);
        bool more = true;
        while (more && !found) {
            std::vector<int> verts(s);
            for (std::size_t i : idx)
                verts.push_back(rest[i]);
            std::sort(verts.begin(), verts.end());
            Induced ind = induce(g, verts);
            if (is_connected(ind.sub)) {
                for_each_spanning_tree(ind.sub, std::numeric_limits<std::uint64_t>::max(),
                                       [&](const std::vector<int>& tree) {
                                           if (!tree_passes(ind.sub, ind.edge_map, col, tree, pred))
                                               return true;
                                           TreeWitness w;
                                           w.s = s;
                                           for (int e : tree)
                                               w.tree_edges.push_back(
                                                   ind.edge_map[static_cast<std::size_t>(e)]);
                                           std::sort(w.tree_edges.begin(), w.tree_edges.end());
                                           found = std::move(w);
                                           return false;
                                       });
            }
            // Advance the combination.
            if (add == 0)
                break;
            std::size_t i = add;
            while (i > 0) {
                --i;
                if (idx[i] != i + rest.size() - add) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < add; ++j)
                        idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0)
                    more = false;
            }
        }
    }
    return found;
}

} // namespace

std::optional<TreeWitness> proper_s_tree_exists(const Graph& g, const EdgeColoring& col,
                                                const std::vector<int>& s) {
    return s_tree_search(g, col, s, TreePredicate::proper);
}

std::optional<TreeWitness> rainbow_s_tree_exists(const Graph& g, const EdgeColoring& col,
                                                 const std::vector<int>& s) {
    return s_tree_search(g, col, s, TreePredicate::rainbow);
}

namespace {

VerifyResult verify_impl(const Graph& g, const EdgeColoring& col, int k, TreePredicate pred) {
    require_coloring(g, col);
    int n = g.vertex_count();
    if (k < 2 || k > n)
        throw InvalidInput("k must lie in 2..n, got " + std::to_string(k));
    if (n > 10)
        throw CapError("verification supports at most 10 vertices, got " + std::to_string(n));
    if (!is_connected(g))
        throw InvalidInput("verification requires a connected graph");

    VerifyResult result;
    std::vector<int> subset(static_cast<std::size_t>(k));
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
        auto witness = s_tree_search(g, col, subset, pred);
        if (!witness) {
            result.failing = subset;
            result.witnesses.clear();
            return result;
        }
        result.witnesses.emplace(subset, std::move(*witness));
        // Next k-combination of 0..n-1.
        int i = k;
        bool more = false;
        while (i > 0) {
            --i;
            if (subset[static_cast<std::size_t>(i)] != i + n - k) {
                ++subset[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
                more = true;
                break;
            }
        }
        if (!more)
            return result;
    }
}

} // namespace

VerifyResult verify_k_proper(const Graph& g, const EdgeColoring& col, int k) {
    return verify_impl(g, col, k, TreePredicate::proper);
}

VerifyResult verify_k_rainbow(const Graph& g, const EdgeColoring& col, int k) {
    return verify_impl(g, col, k, TreePredicate::rainbow);
}

std::optional<std::vector<int>> find_failing_subset(const Graph& g, const EdgeColoring& col, int k,
                                                    TreePredicate pred,
                                                    const std::vector<int>* try_first) {
    require_coloring(g, col);
    int n = g.vertex_count();
    if (k < 2 || k > n)
        throw InvalidInput("k must lie in 2..n, got " + std::to_string(k));
    if (n > 10)
        throw CapError("verification supports at most 10 vertices, got " + std::to_string(n));

    if (try_first && static_cast<int>(try_first->size()) == k) {
        if (!s_tree_search(g, col, *try_first, pred))
            return *try_first;
    }
    int hub = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(hub))
            hub = v;
    // Two passes: subsets containing the max-degree vertex, then the rest.
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<int> subset(static_cast<std::size_t>(k));
        std::iota(subset.begin(), subset.end(), 0);
        while (true) {
            bool has_hub = std::binary_search(subset.begin(), subset.end(), hub);
            if ((pass == 0) == has_hub) {
                if (!(try_first && *try_first == subset) && !s_tree_search(g, col, subset, pred))
                    return subset;
            }
            int i = k;
            bool more = false;
            while (i > 0) {
                --i;
                if (subset[static_cast<std::size_t>(i)] != i + n - k) {
                    ++subset[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < k; ++j)
                        subset[static_cast<std::size_t>(j)] =
                            subset[static_cast<std::size_t>(j - 1)] + 1;
                    more = true;
                    break;
                }
            }
            if (!more)
                break;
        }
    }
    return std::nullopt;
}

namespace {

struct EdgeColorSearch {
    const Graph& g;
    int palette;
    std::vector<int> colors;              // 0 = uncolored
    std::vector<std::uint32_t> used_at;   // per-vertex bitmask of colors (bit c for color c)
    int max_used = 0;

    explicit EdgeColorSearch(const Graph& g_, int palette_)
        : g(g_), palette(palette_), colors(static_cast<std::size_t>(g_.edge_count()), 0),
          used_at(static_cast<std::size_t>(g_.vertex_count()), 0) {}

    int pick_edge() const {
        int best = -1, best_avail = std::numeric_limits<int>::max();
        for (int e = 0; e < g.edge_count(); ++e) {
            if (colors[static_cast<std::size_t>(e)])
                continue;
            auto [u, v] = g.edge(e);
            std::uint32_t blocked =
                used_at[static_cast<std::size_t>(u)] | used_at[static_cast<std::size_t>(v)];
            int avail = palette - std::popcount(blocked);
            if (avail < best_avail) {
                best_avail = avail;
                best = e;
            }
        }
        return best;
    }

    bool solve(int colored) {
        if (colored == g.edge_count())
            return true;
        int e = pick_edge();
        auto [u, v] = g.edge(e);
        std::uint32_t blocked =
            used_at[static_cast<std::size_t>(u)] | used_at[static_cast<std::size_t>(v)];
        // Color symmetry break: never jump past the first unused color.
        int limit = std::min(palette, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            std::uint32_t bit = 1u << c;
            if (blocked & bit)
                continue;
            colors[static_cast<std::size_t>(e)] = c;
            used_at[static_cast<std::size_t>(u)] |= bit;
            used_at[static_cast<std::size_t>(v)] |= bit;
            int saved = max_used;
            max_used = std::max(max_used, c);
            if (solve(colored + 1))
                return true;
            max_used = saved;
            colors[static_cast<std::size_t>(e)] = 0;
            used_at[static_cast<std::size_t>(u)] &= ~bit;
            used_at[static_cast<std::size_t>(v)] &= ~bit;
        }
        return false;
    }
};

} // namespace

ChiPrimeResult chi_prime(const Graph& g) {
    if (g.vertex_count() > 10)
        throw CapError("chi_prime supports at most 10 vertices, got " +
                       std::to_string(g.vertex_count()));
    ChiPrimeResult r;
    if (g.edge_count() == 0) {
        r.value = 0;
        r.coloring = EdgeColoring{{}, 0};
        return r;
    }
    int delta = degree_stats(g).max_degree;
    for (int c = delta; c <= delta + 1; ++c) {
        EdgeColorSearch search(g, c);
        if (search.solve(0)) {
            r.value = c;
            r.coloring = EdgeColoring{std::move(search.colors), c};
            return r;
        }
    }
    throw std::logic_error("edge coloring above Vizing bound failed"); // unreachable
}

EdgeColoring proper_edge_color_tree(const Graph& t) {
    if (!is_tree(t) || t.vertex_count() < 2)
        throw InvalidInput("proper_edge_color_tree requires a tree with at least one edge");
    int delta = degree_stats(t).max_degree;
    EdgeColoring col;
    col.colors.assign(static_cast<std::size_t>(t.edge_count()), 0);
    col.palette = delta;
    // BFS from vertex 0; child edges take the smallest colors distinct from the
    // parent edge color and from each other.
    std::vector<int> parent_color(static_cast<std::size_t>(t.vertex_count()), 0);
    std::vector<char> visited(static_cast<std::size_t>(t.vertex_count()), 0);
    std::vector<int> queue{0};
    visited[0] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        int next = 1;
        for (int e : t.incident_edges(v)) {
            auto [a, b] = t.edge(e);
            int w = a == v ? b : a;
            if (visited[static_cast<std::size_t>(w)])
                continue;
            while (next == parent_color[static_cast<std::size_t>(v)])
                ++next;
            col.colors[static_cast<std::size_t>(e)] = next;
            parent_color[static_cast<std::size_t>(w)] = next;
            ++next;
            visited[static_cast<std::size_t>(w)] = 1;
            queue.push_back(w);
        }
    }
    return col;
}

} // namespace pxkit
