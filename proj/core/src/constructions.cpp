#include "pxkit/constructions.hpp"
#include "pxkit/errors.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

namespace pxkit {

std::string_view family_name(Family family) {
    switch (family) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
    case Family::complete: return "complete";
    case Family::starPlus: return "star-plus";
    case Family::starPlusPlus: return "star-plus-plus";
    case Family::broom: return "broom";
    case Family::unicyclicBroomVariant: return "unicyclic-broom-variant";
    case Family::independenceTree: return "independence-tree";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::path, Family::cycle, Family::star, Family::wheel, Family::complete,
                     Family::starPlus, Family::starPlusPlus, Family::broom,
                     Family::unicyclicBroomVariant, Family::independenceTree})
        if (family_name(f) == name)
            return f;
    return std::nullopt;
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok)
        throw InvalidInput(message);
}

std::vector<std::pair<int, int>> star_edges(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(0, v);
    return edges;
}

} // namespace

Graph build(const FamilySpec& spec) {
    int n = spec.n;
    switch (spec.family) {
    case Family::path: {
        require(n >= 2, "path needs n >= 2");
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v + 1 < n; ++v)
            edges.emplace_back(v, v + 1);
        return Graph::from_edges(n, edges);
    }
    case Family::cycle: {
        require(n >= 3, "cycle needs n >= 3");
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v + 1 < n; ++v)
            edges.emplace_back(v, v + 1);
        edges.emplace_back(0, n - 1);
        return Graph::from_edges(n, edges);
    }
    case Family::star: {
        require(n >= 3, "star needs n >= 3");
        return Graph::from_edges(n, star_edges(n));
    }
    case Family::wheel: {
        require(n >= 4, "wheel needs n >= 4");
        auto edges = star_edges(n);
        for (int v = 1; v + 1 < n; ++v)
            edges.emplace_back(v, v + 1);
        edges.emplace_back(1, n - 1);
        return Graph::from_edges(n, edges);
    }
    case Family::complete: {
        require(n >= 2, "complete needs n >= 2");
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }
    case Family::starPlus: {
        require(n >= 4, "star-plus needs n >= 4");
        auto edges = star_edges(n);
        edges.emplace_back(1, 2);
        return Graph::from_edges(n, edges);
    }
    case Family::starPlusPlus: {
        require(n >= 5, "star-plus-plus needs n >= 5");
        auto edges = star_edges(n);
        edges.emplace_back(1, 2);
        if (spec.variant == SnppVariant::disjoint)
            edges.emplace_back(3, 4);
        else
            edges.emplace_back(2, 3);
        return Graph::from_edges(n, edges);
    }
    case Family::broom: {
        require(n >= 5, "broom needs n >= 5");
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v <= n - 2; ++v)
            edges.emplace_back(0, v);
        edges.emplace_back(1, n - 1);
        return Graph::from_edges(n, edges);
    }
    case Family::unicyclicBroomVariant: {
        require(spec.broom_variant >= 1 && spec.broom_variant <= 3,
                "unicyclic-broom-variant index must be 1, 2 or 3");
        auto variants = broom_unicyclic_variants(n);
        return variants[static_cast<std::size_t>(spec.broom_variant - 1)];
    }
    case Family::independenceTree: {
        require(spec.a >= 2 && spec.a <= spec.b,
                "independence-tree needs 2 <= a <= b");
        // Spider: a legs from the hub, b edges in total, legs as equal as possible.
        int a = spec.a, b = spec.b;
        int base = b / a, extra = b % a;
        std::vector<std::pair<int, int>> edges;
        int next = 1;
        for (int leg = 0; leg < a; ++leg) {
            int len = base + (leg < extra ? 1 : 0);
            int prev = 0;
            for (int i = 0; i < len; ++i) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
        }
        return Graph::from_edges(b + 1, edges);
    }
    }
    throw InvalidInput("unknown family");
}

bool unicyclic_favorable_case(const Graph& g) {
    if (!is_unicyclic(g))
        throw InvalidInput("unicyclic classification requires a unicyclic graph");
    int delta = degree_stats(g).max_degree;
    std::vector<int> max_verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == delta)
            max_verts.push_back(v);
    if (max_verts.size() > 2)
        return false;
    std::vector<int> cycle = cycle_vertices(g);
    for (int v : max_verts)
        if (!std::binary_search(cycle.begin(), cycle.end(), v))
            return false;
    if (max_verts.size() == 2 && !g.adjacent(max_verts[0], max_verts[1]))
        return false;
    return true;
}

std::vector<Graph> broom_unicyclic_variants(int n) {
    if (n < 5)
        throw InvalidInput("broom variants need n >= 5");
    if (n > 10)
        throw CapError("broom variants need n <= 10 (isomorphism cap)");
    Graph g0 = build({.family = Family::broom, .n = n});
    std::vector<Graph> classes;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g0.adjacent(u, v))
                continue;
            auto edges = g0.edges();
            edges.emplace_back(u, v);
            Graph cand = Graph::from_edges(n, edges);
            if (degree_stats(cand).max_degree != n - 2)
                continue;
            if (!unicyclic_favorable_case(cand))
                continue;
            bool known = false;
            for (const Graph& seen : classes)
                if (are_isomorphic(cand, seen)) {
                    known = true;
                    break;
                }
            if (!known)
                classes.push_back(std::move(cand));
        }
    }
    if (classes.size() != 3)
        throw Error("broom edge additions produced " + std::to_string(classes.size()) +
                    " classes instead of 3");
    return classes;
}

EdgeColoring color_traceable(const Graph& g) {
    auto path = hamilton_path(g);
    if (!path)
        throw InvalidInput("color_traceable requires a graph with a spanning path");
    EdgeColoring col;
    col.palette = 2;
    col.colors.assign(static_cast<std::size_t>(g.edge_count()), 1);
    for (std::size_t i = 0; i + 1 < path->size(); ++i) {
        auto id = g.edge_id((*path)[i], (*path)[i + 1]);
        col.colors[static_cast<std::size_t>(*id)] = static_cast<int>(i % 2) + 1;
    }
    return col;
}

namespace {

// Colors the spanning tree and returns the host-indexed coloring; non-tree
// edges get the smallest color unused by tree edges at both endpoints, else 1.
EdgeColoring spread_tree_coloring(const Graph& g, const std::vector<int>& tree_edges,
                                  const std::vector<int>& tree_colors, int palette) {
    EdgeColoring col;
    col.palette = palette;
    col.colors.assign(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<char> in_tree(static_cast<std::size_t>(g.edge_count()), 0);
    for (std::size_t i = 0; i < tree_edges.size(); ++i) {
        col.colors[static_cast<std::size_t>(tree_edges[i])] = tree_colors[i];
        in_tree[static_cast<std::size_t>(tree_edges[i])] = 1;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_tree[static_cast<std::size_t>(e)])
            continue;
        auto [u, v] = g.edge(e);
        int pick = 0;
        for (int c = 1; c <= palette && !pick; ++c) {
            bool blocked = false;
            for (int w : {u, v}) {
                for (int f : g.incident_edges(w)) {
                    if (in_tree[static_cast<std::size_t>(f)] &&
                        col.colors[static_cast<std::size_t>(f)] == c) {
                        blocked = true;
                        break;
                    }
                }
                if (blocked)
                    break;
            }
            if (!blocked)
                pick = c;
        }
        col.colors[static_cast<std::size_t>(e)] = pick ? pick : 1;
    }
    return col;
}

} // namespace

EdgeColoring color_via_spanning_tree(const Graph& g, const std::vector<int>& tree_edges) {
    std::vector<int> sorted(tree_edges);
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<int, int>> pairs;
    for (int e : sorted)
        pairs.push_back(g.edge(e));
    Graph tree = Graph::from_edges(g.vertex_count(), pairs);
    if (!is_tree(tree))
        throw InvalidInput("edge set is not a spanning tree");
    EdgeColoring tcol = proper_edge_color_tree(tree);
    return spread_tree_coloring(g, sorted, tcol.colors, tcol.palette);
}

EdgeColoring color_rainbow_spanning_tree(const Graph& g, const std::vector<int>& tree_edges) {
    std::vector<int> sorted(tree_edges);
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<int, int>> pairs;
    for (int e : sorted)
        pairs.push_back(g.edge(e));
    Graph tree = Graph::from_edges(g.vertex_count(), pairs);
    if (!is_tree(tree))
        throw InvalidInput("edge set is not a spanning tree");
    std::vector<int> tree_colors(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        tree_colors[i] = static_cast<int>(i) + 1;
    return spread_tree_coloring(g, sorted, tree_colors, static_cast<int>(sorted.size()));
}

UnicyclicColoring color_unicyclic(const Graph& g) {
    if (!is_unicyclic(g))
        throw InvalidInput("color_unicyclic requires a unicyclic graph");
    DegreeStats ds = degree_stats(g);
    if (ds.max_degree == 2) // the cycle itself
        return {color_traceable(g), 2};

    std::vector<int> cycle = cycle_vertices(g);
    std::vector<int> cycle_edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (std::binary_search(cycle.begin(), cycle.end(), u) &&
            std::binary_search(cycle.begin(), cycle.end(), v))
            cycle_edges.push_back(e);
    }

    int delta = ds.max_degree;
    int doomed = -1;
    int claimed = 0;
    if (unicyclic_favorable_case(g)) {
        claimed = delta - 1;
        std::vector<int> max_verts;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == delta)
                max_verts.push_back(v);
        if (max_verts.size() == 2) {
            doomed = *g.edge_id(max_verts[0], max_verts[1]);
        } else {
            for (int e : cycle_edges) {
                auto [u, v] = g.edge(e);
                if (u == max_verts[0] || v == max_verts[0]) {
                    doomed = e;
                    break;
                }
            }
        }
    } else {
        claimed = delta;
        int best = -1;
        for (int e : cycle_edges) {
            auto [u, v] = g.edge(e);
            int worst = 0;
            for (int w = 0; w < g.vertex_count(); ++w) {
                int d = g.degree(w) - (w == u || w == v ? 1 : 0);
                worst = std::max(worst, d);
            }
            if (best == -1 || worst < best) {
                best = worst;
                doomed = e;
            }
        }
    }

    std::vector<int> tree_edges;
    for (int e = 0; e < g.edge_count(); ++e)
        if (e != doomed)
            tree_edges.push_back(e);
    EdgeColoring col = color_via_spanning_tree(g, tree_edges);
    if (col.palette != claimed)
        throw std::logic_error("unicyclic coloring palette disagrees with the claimed value");
    return {std::move(col), claimed};
}

EdgeColoring color_snpp(const Graph& g) {
    int n = g.vertex_count();
    if (n < 5)
        throw InvalidInput("star-plus-plus coloring needs n >= 5");
    if (g.edge_count() != n + 1)
        throw InvalidInput("not a star plus two edges: edge count is " +
                           std::to_string(g.edge_count()) + ", expected " + std::to_string(n + 1));
    int hub = -1;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1)
            hub = v;
    if (hub < 0)
        throw InvalidInput("not a star plus two edges: no vertex of degree n-1");
    std::vector<std::pair<int, int>> extra;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (u != hub && v != hub)
            extra.push_back({u, v});
    }
    if (extra.size() != 2)
        throw std::logic_error("hub of degree n-1 with wrong non-hub edge count");

    auto [a1, b1] = extra[0];
    auto [a2, b2] = extra[1];
    int drop1, drop2;
    std::set<int> ends{a1, b1, a2, b2};
    if (ends.size() == 4) {
        // Vertex-disjoint extras: drop the hub edge to one endpoint of each.
        drop1 = std::min(a1, b1);
        drop2 = std::min(a2, b2);
    } else {
        // Extras share a vertex: drop the hub edges to it and to the smallest
        // of the remaining endpoints.
        int shared = (a1 == a2 || a1 == b2) ? a1 : b1;
        std::vector<int> others;
        for (int v : ends)
            if (v != shared)
                others.push_back(v);
        drop1 = shared;
        drop2 = *std::min_element(others.begin(), others.end());
    }

    int e1 = *g.edge_id(hub, drop1);
    int e2 = *g.edge_id(hub, drop2);
    std::vector<int> tree_edges;
    for (int e = 0; e < g.edge_count(); ++e)
        if (e != e1 && e != e2)
            tree_edges.push_back(e);
    EdgeColoring col = color_via_spanning_tree(g, tree_edges);
    if (col.palette != n - 3)
        throw std::logic_error("star-plus-plus tree coloring palette is not n-3");
    return col;
}

} // namespace pxkit
