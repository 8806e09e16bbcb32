#include "pxkit/graph.hpp"
#include "pxkit/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace pxkit {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0)
        throw InvalidInput("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    g.inc_.assign(static_cast<std::size_t>(n), {});
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        int u = std::min(a, b), v = std::max(a, b);
        if (u < 0 || v >= n)
            throw InvalidInput("edge endpoint out of range: {" + std::to_string(a) + "," +
                               std::to_string(b) + "}");
        if (u == v)
            throw InvalidInput("loop at vertex " + std::to_string(u));
        if (!seen.insert({u, v}).second)
            throw InvalidInput("parallel edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        int id = static_cast<int>(g.edges_.size());
        g.edges_.emplace_back(u, v);
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
        g.inc_[static_cast<std::size_t>(u)].push_back(id);
        g.inc_[static_cast<std::size_t>(v)].push_back(id);
    }
    for (auto& nb : g.adj_)
        std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<int> Graph::edge_id(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    for (int id : inc_[static_cast<std::size_t>(u)]) {
        if (edges_[static_cast<std::size_t>(id)] == std::pair<int, int>{u, v})
            return id;
    }
    return std::nullopt;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    s.degrees.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        s.degrees[static_cast<std::size_t>(v)] = g.degree(v);
    if (!s.degrees.empty()) {
        s.max_degree = *std::max_element(s.degrees.begin(), s.degrees.end());
        s.min_degree = *std::min_element(s.degrees.begin(), s.degrees.end());
    }
    return s;
}

namespace {

int count_reachable(const Graph& g, int start, int skip_edge = -1) {
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int e : g.incident_edges(v)) {
            if (e == skip_edge)
                continue;
            auto [a, b] = g.edge(e);
            int w = a == v ? b : a;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return count;
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0)
        return false;
    return count_reachable(g, 0) == g.vertex_count();
}

BridgeStats bridge_stats(const Graph& g) {
    if (!is_connected(g))
        throw InvalidInput("bridge_stats requires a connected graph");
    int n = g.vertex_count();
    BridgeStats stats;
    stats.per_vertex.assign(static_cast<std::size_t>(n), 0);

    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    int timer = 0;
    // Iterative DFS; classic lowpoint rule: edge (v,w) is a bridge iff low[w] > disc[v].
    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };
    std::vector<Frame> stack;
    stack.push_back({0, -1, 0});
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& inc = g.incident_edges(f.v);
        if (f.next < inc.size()) {
            int e = inc[f.next++];
            if (e == f.parent_edge)
                continue;
            auto [a, b] = g.edge(e);
            int w = a == f.v ? b : a;
            if (disc[static_cast<std::size_t>(w)] == -1) {
                disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                stack.push_back({w, e, 0});
            } else {
                low[static_cast<std::size_t>(f.v)] =
                    std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
            }
        } else {
            int v = f.v;
            int pe = f.parent_edge;
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack.back().v;
                low[static_cast<std::size_t>(p)] =
                    std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(p)])
                    stats.bridges.push_back(pe);
            }
        }
    }
    std::sort(stats.bridges.begin(), stats.bridges.end());
    for (int e : stats.bridges) {
        auto [u, v] = g.edge(e);
        ++stats.per_vertex[static_cast<std::size_t>(u)];
        ++stats.per_vertex[static_cast<std::size_t>(v)];
    }
    stats.max_per_vertex =
        stats.per_vertex.empty() ? 0 : *std::max_element(stats.per_vertex.begin(), stats.per_vertex.end());
    return stats;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_unicyclic(const Graph& g) {
    return g.vertex_count() >= 3 && g.edge_count() == g.vertex_count() && is_connected(g);
}

std::vector<int> cycle_vertices(const Graph& g) {
    if (!is_unicyclic(g))
        throw InvalidInput("cycle_vertices requires a unicyclic graph");
    // Strip leaves until only the cycle remains.
    int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1)
            queue.push_back(v);
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        removed[static_cast<std::size_t>(v)] = 1;
        for (int w : g.neighbors(v)) {
            if (removed[static_cast<std::size_t>(w)])
                continue;
            if (--deg[static_cast<std::size_t>(w)] == 1)
                queue.push_back(w);
        }
    }
    std::vector<int> cycle;
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<std::size_t>(v)])
            cycle.push_back(v);
    return cycle;
}

std::optional<std::vector<int>> hamilton_path(const Graph& g) {
    int n = g.vertex_count();
    if (n > 20)
        throw CapError("hamilton_path supports at most 20 vertices, got " + std::to_string(n));
    if (n == 0)
        return std::nullopt;
    if (n == 1)
        return std::vector<int>{0};

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= 1u << v;
        adj[static_cast<std::size_t>(v)] |= 1u << u;
    }
    std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    // ends[mask] = set of vertices that can terminate a path covering mask.
    std::vector<std::uint32_t> ends(static_cast<std::size_t>(full) + 1, 0);
    for (int v = 0; v < n; ++v)
        ends[1u << v] = 1u << v;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t e = ends[mask];
        if (!e)
            continue;
        for (int v = 0; v < n; ++v) {
            if (!(e & (1u << v)))
                continue;
            std::uint32_t ext = adj[static_cast<std::size_t>(v)] & ~mask;
            while (ext) {
                int w = std::countr_zero(ext);
                ext &= ext - 1;
                ends[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    if (!ends[full])
        return std::nullopt;
    // Reconstruct backwards, lowest-numbered choice at each step.
    std::vector<int> path;
    std::uint32_t mask = full;
    int v = std::countr_zero(ends[full]);
    while (true) {
        path.push_back(v);
        std::uint32_t rest = mask & ~(1u << v);
        if (!rest)
            break;
        std::uint32_t prev = ends[rest] & adj[static_cast<std::size_t>(v)];
        mask = rest;
        v = std::countr_zero(prev);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

bool hamilton_path_exists(const Graph& g) { return hamilton_path(g).has_value(); }

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

struct TreeEnum {
    const Graph& g;
    std::uint64_t cap;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::uint64_t yielded = 0;
    bool visitor_stopped = false;
    std::vector<int> chosen;

    // True if `chosen` plus edges with id >= from can still span the graph.
    bool completable(const Dsu& dsu, int from) const {
        Dsu probe = dsu;
        int components = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (probe.find(v) == v)
                ++components;
        for (int e = from; e < g.edge_count() && components > 1; ++e) {
            auto [u, v] = g.edge(e);
            if (probe.unite(u, v))
                --components;
        }
        return components == 1;
    }

    // Returns false when the whole enumeration must stop.
    bool recurse(Dsu dsu, int i) {
        if (static_cast<int>(chosen.size()) == g.vertex_count() - 1) {
            ++yielded;
            if (!visit(chosen)) {
                visitor_stopped = true;
                return false;
            }
            return yielded < cap;
        }
        if (i >= g.edge_count())
            return true;
        auto [u, v] = g.edge(i);
        if (dsu.find(u) == dsu.find(v))
            return recurse(std::move(dsu), i + 1); // already joined; not a choice point
        // Include edge i.
        Dsu with = dsu;
        with.unite(u, v);
        chosen.push_back(i);
        bool go = recurse(std::move(with), i + 1);
        chosen.pop_back();
        if (!go)
            return false;
        // Exclude edge i, unless that disconnects everything that is left.
        if (completable(dsu, i + 1))
            return recurse(std::move(dsu), i + 1);
        return true;
    }
};

} // namespace

TreeStream for_each_spanning_tree(const Graph& g, std::uint64_t cap,
                                  const std::function<bool(const std::vector<int>&)>& visit) {
    if (!is_connected(g))
        throw InvalidInput("for_each_spanning_tree requires a connected graph");
    if (g.vertex_count() == 1) {
        std::vector<int> empty;
        visit(empty);
        return TreeStream::complete;
    }
    TreeEnum en{g, cap, visit};
    bool finished = en.recurse(Dsu(g.vertex_count()), 0);
    if (en.visitor_stopped)
        return TreeStream::stopped;
    return finished ? TreeStream::complete : TreeStream::capped;
}

namespace {

std::vector<std::vector<int>> neighbor_degree_signature(const Graph& g) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int w : g.neighbors(v))
            sig[static_cast<std::size_t>(v)].push_back(g.degree(w));
        std::sort(sig[static_cast<std::size_t>(v)].begin(), sig[static_cast<std::size_t>(v)].end());
    }
    return sig;
}

bool extend_mapping(const Graph& a, const Graph& b, std::vector<int>& map_ab,
                    std::vector<char>& used_b, const std::vector<int>& order, std::size_t pos) {
    if (pos == order.size())
        return true;
    int va = order[pos];
    for (int vb = 0; vb < b.vertex_count(); ++vb) {
        if (used_b[static_cast<std::size_t>(vb)] || a.degree(va) != b.degree(vb))
            continue;
        bool ok = true;
        for (std::size_t i = 0; i < pos && ok; ++i) {
            int ua = order[i];
            bool ea = a.adjacent(va, ua);
            bool eb = b.adjacent(vb, map_ab[static_cast<std::size_t>(ua)]);
            if (ea != eb)
                ok = false;
        }
        if (!ok)
            continue;
        map_ab[static_cast<std::size_t>(va)] = vb;
        used_b[static_cast<std::size_t>(vb)] = 1;
        if (extend_mapping(a, b, map_ab, used_b, order, pos + 1))
            return true;
        used_b[static_cast<std::size_t>(vb)] = 0;
    }
    return false;
}

} // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() > 10 || b.vertex_count() > 10)
        throw CapError("are_isomorphic supports at most 10 vertices");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    auto da = degree_stats(a).degrees;
    auto db = degree_stats(b).degrees;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return false;
    auto sa = neighbor_degree_signature(a);
    auto sb = neighbor_degree_signature(b);
    {
        auto ta = sa;
        auto tb = sb;
        std::sort(ta.begin(), ta.end());
        std::sort(tb.begin(), tb.end());
        if (ta != tb)
            return false;
    }
    // Map rare/high-degree vertices first.
    std::vector<int> order(static_cast<std::size_t>(a.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (a.degree(x) != a.degree(y))
            return a.degree(x) > a.degree(y);
        return x < y;
    });
    std::vector<int> map_ab(static_cast<std::size_t>(a.vertex_count()), -1);
    std::vector<char> used_b(static_cast<std::size_t>(b.vertex_count()), 0);
    return extend_mapping(a, b, map_ab, used_b, order, 0);
}

} // namespace pxkit
