#include "pxkit/solver.hpp"
#include "pxkit/constructions.hpp"
#include "pxkit/errors.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pxkit {

std::string_view bound_rule_name(BoundRule rule) {
    switch (rule) {
    case BoundRule::trivial2: return "trivial-2";
    case BoundRule::bridgeB: return "bridge-b";
    case BoundRule::monotonicFromSmallerK: return "monotonic-from-smaller-k";
    case BoundRule::chiPrime: return "chi-prime";
    case BoundRule::deltaPlus1: return "delta-plus-1";
    case BoundRule::delta: return "delta";
    case BoundRule::minSpanningTreeDelta: return "min-spanning-tree-delta";
    case BoundRule::nMinus1: return "n-1";
    case BoundRule::traceable2: return "traceable-2";
    }
    return "?";
}

std::optional<BoundRule> bound_rule_from_name(std::string_view name) {
    for (BoundRule r : {BoundRule::trivial2, BoundRule::bridgeB, BoundRule::monotonicFromSmallerK,
                        BoundRule::chiPrime, BoundRule::deltaPlus1, BoundRule::delta,
                        BoundRule::minSpanningTreeDelta, BoundRule::nMinus1, BoundRule::traceable2})
        if (bound_rule_name(r) == name)
            return r;
    return std::nullopt;
}

bool bound_rule_is_lower(BoundRule rule) {
    return rule == BoundRule::trivial2 || rule == BoundRule::bridgeB ||
           rule == BoundRule::monotonicFromSmallerK;
}

MinSpanningTreeDelta min_spanning_tree_delta(const Graph& g, std::uint64_t cap) {
    if (!is_connected(g))
        throw InvalidInput("min_spanning_tree_delta requires a connected graph");
    int n = g.vertex_count();
    int floor = n <= 2 ? n - 1 : 2; // a spanning tree on n >= 3 vertices has an internal vertex
    MinSpanningTreeDelta best;
    best.value = INT_MAX;
    std::vector<int> deg(static_cast<std::size_t>(n));
    TreeStream stream = for_each_spanning_tree(g, cap, [&](const std::vector<int>& tree) {
        std::fill(deg.begin(), deg.end(), 0);
        int worst = 0;
        for (int e : tree) {
            auto [u, v] = g.edge(e);
            worst = std::max({worst, ++deg[static_cast<std::size_t>(u)],
                              ++deg[static_cast<std::size_t>(v)]});
        }
        if (worst < best.value) {
            best.value = worst;
            best.tree_edges = tree;
        }
        return best.value > floor; // at the floor nothing can improve
    });
    best.exact = stream != TreeStream::capped; // completed, or stopped at the floor
    return best;
}

namespace {

bool is_complete(const Graph& g) {
    int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

} // namespace

BoundsReport bounds(const Graph& g, int k, const BoundsOptions& opts) {
    int n = g.vertex_count();
    if (!is_connected(g))
        throw InvalidInput("bounds requires a connected graph");
    if (k < 2 || k > n)
        throw InvalidInput("k must lie in 2..n, got " + std::to_string(k));

    BoundsReport rep;
    // Two colors are forced once any required tree has an internal vertex; the
    // only escape is k = 2 on a complete graph, where single edges serve.
    int trivial = (k == 2 && is_complete(g)) ? 1 : 2;
    rep.lower.push_back({trivial, BoundRule::trivial2});
    BridgeStats bs = bridge_stats(g);
    if (bs.max_per_vertex >= 1)
        rep.lower.push_back({bs.max_per_vertex, BoundRule::bridgeB});
    if (opts.monotonic_prior)
        rep.lower.push_back({*opts.monotonic_prior, BoundRule::monotonicFromSmallerK});

    if (opts.kind == IndexKind::proper) {
        int delta = degree_stats(g).max_degree;
        ChiPrimeResult chi;
        if (n <= 10) {
            chi = chi_prime(g);
            rep.upper.push_back({chi.value, BoundRule::chiPrime});
        }
        rep.upper.push_back({delta + 1, BoundRule::deltaPlus1});
        rep.upper.push_back({delta, BoundRule::delta});
        MinSpanningTreeDelta mst = min_spanning_tree_delta(g, opts.tree_cap);
        rep.upper.push_back({mst.value, BoundRule::minSpanningTreeDelta, !mst.exact});
        rep.upper.push_back({n - 1, BoundRule::nMinus1});
        if (n <= 20 && hamilton_path_exists(g))
            rep.upper.push_back({2, BoundRule::traceable2});
    } else {
        rep.upper.push_back({n - 1, BoundRule::nMinus1});
    }

    rep.best_lower = 0;
    for (const BoundEntry& e : rep.lower)
        rep.best_lower = std::max(rep.best_lower, e.value);
    rep.best_upper = INT_MAX;
    for (const BoundEntry& e : rep.upper)
        rep.best_upper = std::min(rep.best_upper, e.value);
    if (rep.best_lower > rep.best_upper)
        throw std::logic_error("bound bracket inverted: lower " + std::to_string(rep.best_lower) +
                               " above upper " + std::to_string(rep.best_upper));
    return rep;
}

std::vector<int> solver_edge_order(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto [au, av] = g.edge(a);
        auto [bu, bv] = g.edge(b);
        int da = std::max(g.degree(au), g.degree(av));
        int db = std::max(g.degree(bu), g.degree(bv));
        if (da != db)
            return da > db;
        return a < b;
    });
    return order;
}

namespace {

bool canonical_recurse(std::vector<int>& colors, int pos, int max_used, int c,
                       const std::function<bool(const std::vector<int>&)>& visit) {
    if (pos == static_cast<int>(colors.size()))
        return visit(colors);
    int limit = std::min(c, max_used + 1);
    for (int x = 1; x <= limit; ++x) {
        colors[static_cast<std::size_t>(pos)] = x;
        if (!canonical_recurse(colors, pos + 1, std::max(max_used, x), c, visit))
            return false;
    }
    return true;
}

} // namespace

bool for_each_canonical_coloring(int m, int c,
                                 const std::function<bool(const std::vector<int>&)>& visit) {
    if (m < 0 || c < 1)
        throw InvalidInput("canonical enumeration needs m >= 0 and c >= 1");
    std::vector<int> colors(static_cast<std::size_t>(m));
    return canonical_recurse(colors, 0, 0, c, visit);
}

namespace {

// All spanning trees of every connected induced subgraph, cached per vertex
// mask, so the palette search can re-test subsets across thousands of
// candidate colorings without re-enumerating.
struct SubsetChecker {
    const Graph& g;
    int k;
    TreePredicate pred;
    int n;
    std::vector<std::uint32_t> subsets;                 // k-subset masks in scan order
    std::vector<std::vector<std::uint32_t>> supersets;  // per subset, by (popcount, value)
    std::vector<char> filled;
    std::vector<std::vector<std::vector<int>>> trees;   // mask -> spanning trees (host edge ids)
    std::size_t last_fail = SIZE_MAX;

    SubsetChecker(const Graph& g_, int k_, TreePredicate pred_)
        : g(g_), k(k_), pred(pred_), n(g_.vertex_count()),
          filled(static_cast<std::size_t>(1) << n, 0),
          trees(static_cast<std::size_t>(1) << n) {
        int hub = 0;
        for (int v = 1; v < n; ++v)
            if (g.degree(v) > g.degree(hub))
                hub = v;
        std::vector<std::uint32_t> with_hub, without_hub;
        std::uint32_t full = (1u << n) - 1;
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if (std::popcount(mask) != k)
                continue;
            (mask >> hub & 1 ? with_hub : without_hub).push_back(mask);
        }
        subsets = std::move(with_hub);
        subsets.insert(subsets.end(), without_hub.begin(), without_hub.end());
        supersets.resize(subsets.size());
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            std::uint32_t s = subsets[i];
            std::uint32_t rest = full & ~s;
            // All masks containing s: s | (submask of rest).
            std::uint32_t t = rest;
            while (true) {
                supersets[i].push_back(s | t);
                if (t == 0)
                    break;
                t = (t - 1) & rest;
            }
            std::sort(supersets[i].begin(), supersets[i].end(),
                      [](std::uint32_t a, std::uint32_t b) {
                          int pa = std::popcount(a), pb = std::popcount(b);
                          if (pa != pb)
                              return pa < pb;
                          return a < b;
                      });
        }
    }

    void fill(std::uint32_t mask) {
        filled[mask] = 1;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1)
                verts.push_back(v);
        std::vector<std::pair<int, int>> pairs;
        std::vector<int> ids;
        auto local = [&](int v) {
            return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
        };
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            if ((mask >> u & 1) && (mask >> v & 1)) {
                pairs.emplace_back(local(u), local(v));
                ids.push_back(e);
            }
        }
        Graph sub = Graph::from_edges(static_cast<int>(verts.size()), pairs);
        if (!is_connected(sub))
            return; // no spanning trees to record
        for_each_spanning_tree(sub, UINT64_MAX, [&](const std::vector<int>& tree) {
            std::vector<int> host;
            host.reserve(tree.size());
            for (int e : tree)
                host.push_back(ids[static_cast<std::size_t>(e)]);
            trees[mask].push_back(std::move(host));
            return true;
        });
    }

    bool tree_ok(const std::vector<int>& tree, const std::vector<int>& colors) const {
        if (pred == TreePredicate::rainbow) {
            std::uint32_t seen = 0;
            for (int e : tree) {
                std::uint32_t bit = 1u << colors[static_cast<std::size_t>(e)];
                if (seen & bit)
                    return false;
                seen |= bit;
            }
            return true;
        }
        std::array<std::uint32_t, 8> seen{};
        for (int e : tree) {
            auto [u, v] = g.edge(e);
            std::uint32_t bit = 1u << colors[static_cast<std::size_t>(e)];
            if ((seen[static_cast<std::size_t>(u)] | seen[static_cast<std::size_t>(v)]) & bit)
                return false;
            seen[static_cast<std::size_t>(u)] |= bit;
            seen[static_cast<std::size_t>(v)] |= bit;
        }
        return true;
    }

    bool subset_ok(std::size_t i, const std::vector<int>& colors) {
        for (std::uint32_t mask : supersets[i]) {
            if (!filled[mask])
                fill(mask);
            for (const auto& tree : trees[mask])
                if (tree_ok(tree, colors))
                    return true;
        }
        return false;
    }

    // True iff every k-subset has a passing tree under `colors`.
    bool all_pass(const std::vector<int>& colors) {
        if (last_fail != SIZE_MAX && !subset_ok(last_fail, colors))
            return false;
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            if (i == last_fail)
                continue;
            if (!subset_ok(i, colors)) {
                last_fail = i;
                return false;
            }
        }
        return true;
    }
};

struct PaletteSearch {
    const Graph& g;
    int palette;
    SubsetChecker& checker;
    std::vector<int> order;
    std::vector<char> is_bridge;
    std::vector<std::uint32_t> bridge_used; // per-vertex colors taken by bridges
    std::vector<int> colors;                // host edge id -> color (0 unset)
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;

    PaletteSearch(const Graph& g_, int palette_, SubsetChecker& checker_)
        : g(g_), palette(palette_), checker(checker_), order(solver_edge_order(g_)),
          is_bridge(static_cast<std::size_t>(g_.edge_count()), 0),
          bridge_used(static_cast<std::size_t>(g_.vertex_count()), 0),
          colors(static_cast<std::size_t>(g_.edge_count()), 0) {
        for (int e : bridge_stats(g_).bridges)
            is_bridge[static_cast<std::size_t>(e)] = 1;
    }

    bool run(int pos, int max_used) {
        if (pos == static_cast<int>(order.size())) {
            ++examined;
            return checker.all_pass(colors);
        }
        int e = order[static_cast<std::size_t>(pos)];
        auto [u, v] = g.edge(e);
        int limit = std::min(palette, max_used + 1);
        for (int x = 1; x <= limit; ++x) {
            std::uint32_t bit = 1u << x;
            if (is_bridge[static_cast<std::size_t>(e)] &&
                ((bridge_used[static_cast<std::size_t>(u)] |
                  bridge_used[static_cast<std::size_t>(v)]) &
                 bit)) {
                // Bridges sharing a vertex sit in every tree joining their far
                // endpoints, so equal colors can never verify; skip the branch.
                ++pruned;
                continue;
            }
            colors[static_cast<std::size_t>(e)] = x;
            if (is_bridge[static_cast<std::size_t>(e)]) {
                bridge_used[static_cast<std::size_t>(u)] |= bit;
                bridge_used[static_cast<std::size_t>(v)] |= bit;
            }
            if (run(pos + 1, std::max(max_used, x)))
                return true;
            colors[static_cast<std::size_t>(e)] = 0;
            if (is_bridge[static_cast<std::size_t>(e)]) {
                bridge_used[static_cast<std::size_t>(u)] &= ~bit;
                bridge_used[static_cast<std::size_t>(v)] &= ~bit;
            }
        }
        return false;
    }
};

EdgeColoring upper_witness(const Graph& g, const BoundsReport& rep, IndexKind kind, int c,
                           std::uint64_t tree_cap) {
    if (kind == IndexKind::rainbow) {
        if (c != g.vertex_count() - 1)
            throw std::logic_error("rainbow upper bound is not n-1");
        std::vector<int> first_tree;
        for_each_spanning_tree(g, UINT64_MAX, [&](const std::vector<int>& tree) {
            first_tree = tree;
            return false;
        });
        return color_rainbow_spanning_tree(g, first_tree);
    }
    for (const BoundEntry& e : rep.upper)
        if (e.rule == BoundRule::traceable2 && e.value == c)
            return color_traceable(g);
    for (const BoundEntry& e : rep.upper) {
        if (e.rule == BoundRule::minSpanningTreeDelta && e.value == c) {
            MinSpanningTreeDelta mst = min_spanning_tree_delta(g, tree_cap);
            if (mst.value != c)
                throw std::logic_error("spanning tree bound shifted between runs");
            return color_via_spanning_tree(g, mst.tree_edges);
        }
    }
    // The tree bound never exceeds the degree-based bounds, so one of the two
    // constructive rules above always defines the best upper value.
    throw std::logic_error("best upper bound lacks a constructive witness");
}

PxCertificate solve(const Graph& g, int k, IndexKind kind, const SolveOptions& opts) {
    int n = g.vertex_count();
    if (n < 3 || n > 8)
        throw CapError("exact solving supports 3..8 vertices, got " + std::to_string(n));
    if (!is_connected(g))
        throw InvalidInput("solving requires a connected graph");
    if (k < 2 || k > n)
        throw InvalidInput("k must lie in 2..n, got " + std::to_string(k));

    BoundsOptions bopts;
    bopts.kind = kind;
    bopts.monotonic_prior = opts.monotonic_prior;
    BoundsReport rep = bounds(g, k, bopts);

    TreePredicate pred = kind == IndexKind::proper ? TreePredicate::proper : TreePredicate::rainbow;
    SubsetChecker checker(g, k, pred);
    std::optional<ExhaustionRecord> last_exhaustion;
    for (int c = rep.best_lower; c <= rep.best_upper; ++c) {
        std::optional<EdgeColoring> coloring;
        if (c == rep.best_upper) {
            coloring = upper_witness(g, rep, kind, c, bopts.tree_cap);
        } else {
            PaletteSearch search(g, c, checker);
            if (search.run(0, 0)) {
                coloring = EdgeColoring{search.colors, c};
            } else {
                last_exhaustion = ExhaustionRecord{c, search.examined, search.pruned};
                continue;
            }
        }

        if (static_cast<int>(coloring->used_colors().size()) != c)
            throw std::logic_error("solver coloring does not use exactly its palette");
        VerifyResult full = kind == IndexKind::proper ? verify_k_proper(g, *coloring, k)
                                                      : verify_k_rainbow(g, *coloring, k);
        if (!full.valid())
            throw std::logic_error("solver accepted a coloring the verifier rejects");
        if (c < rep.best_lower || c > rep.best_upper)
            throw std::logic_error("solved value escaped the bound bracket");

        PxCertificate cert{kind, g, k, c, std::move(*coloring), std::move(full.witnesses), {}, rep};
        if (c == rep.best_lower) {
            cert.lower_evidence.kind = LowerEvidenceKind::boundMet;
            // Prefer structural evidence over the generic floor, and both over
            // a value inherited from a smaller k.
            for (BoundRule r : {BoundRule::bridgeB, BoundRule::trivial2,
                                BoundRule::monotonicFromSmallerK}) {
                for (const BoundEntry& e : rep.lower) {
                    if (e.rule == r && e.value == c) {
                        cert.lower_evidence.bound = e;
                        break;
                    }
                }
                if (cert.lower_evidence.bound)
                    break;
            }
            if (!cert.lower_evidence.bound)
                throw std::logic_error("no lower bound entry matches the solved value");
        } else {
            if (!last_exhaustion || last_exhaustion->palette != c - 1)
                throw std::logic_error("missing exhaustion record below the solved value");
            cert.lower_evidence.kind = LowerEvidenceKind::exhaustion;
            cert.lower_evidence.exhaustion = last_exhaustion;
        }
        return cert;
    }
    throw std::logic_error("palette loop ended without a certificate");
}

} // namespace

PxCertificate solve_px(const Graph& g, int k, const SolveOptions& opts) {
    return solve(g, k, IndexKind::proper, opts);
}

PxCertificate solve_rx(const Graph& g, int k, const SolveOptions& opts) {
    return solve(g, k, IndexKind::rainbow, opts);
}

} // namespace pxkit
