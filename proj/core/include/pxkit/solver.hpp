#pragma once

#include "pxkit/coloring.hpp"
#include "pxkit/graph.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace pxkit {

enum class BoundRule {
    // lower
    trivial2,
    bridgeB,
    monotonicFromSmallerK,
    // upper
    chiPrime,
    deltaPlus1,
    delta,
    minSpanningTreeDelta,
    nMinus1,
    traceable2,
};

// Stable names used in reports and serialized certificates.
std::string_view bound_rule_name(BoundRule rule);
std::optional<BoundRule> bound_rule_from_name(std::string_view name);
bool bound_rule_is_lower(BoundRule rule);

struct BoundEntry {
    int value = 0;
    BoundRule rule{};
    bool heuristic = false; // true when a size cap kept the rule from being exact
};

struct BoundsReport {
    std::vector<BoundEntry> lower;
    std::vector<BoundEntry> upper;
    int best_lower = 0;
    int best_upper = 0;
};

enum class IndexKind { proper, rainbow };

struct BoundsOptions {
    IndexKind kind = IndexKind::proper;
    std::optional<int> monotonic_prior; // solved value at a smaller k, if any
    std::uint64_t tree_cap = 1'000'000; // spanning-tree stream budget for min-delta
};

// Every applicable bound for px_k (or rx_k). Requires g connected, 2 <= k <= n.
// Rules whose machinery is size-capped (traceable needs n <= 20, chi-prime
// n <= 10) are skipped on larger graphs rather than failing.
BoundsReport bounds(const Graph& g, int k, const BoundsOptions& opts = {});

struct MinSpanningTreeDelta {
    int value = 0;
    bool exact = false;          // stream completed (or provably minimal)
    std::vector<int> tree_edges; // first streamed tree attaining value
};

// Minimum max-degree over streamed spanning trees; heuristic when capped.
MinSpanningTreeDelta min_spanning_tree_delta(const Graph& g, std::uint64_t cap = 1'000'000);

// Deterministic search order: edges incident to the highest-degree endpoints
// first (ties by edge id). Position i of the result is an edge id.
std::vector<int> solver_edge_order(const Graph& g);

// All colorings of m edges with palette 1..c where the first occurrence of
// each new color is the smallest unused one (exactly one representative per
// color-permutation class). Assignment follows index order 0..m-1. The visitor
// returns false to stop. Returns false if stopped early.
bool for_each_canonical_coloring(int m, int c, const std::function<bool(const std::vector<int>&)>& visit);

struct ExhaustionRecord {
    int palette = 0;
    std::uint64_t colorings_examined = 0; // complete canonical colorings verified
    std::uint64_t branches_pruned = 0;    // assignments cut by the bridge rule
};

enum class LowerEvidenceKind { boundMet, exhaustion };

struct LowerEvidence {
    LowerEvidenceKind kind = LowerEvidenceKind::boundMet;
    std::optional<BoundEntry> bound;           // boundMet: the lower bound equal to value
    std::optional<ExhaustionRecord> exhaustion; // exhaustion: palette value-1 fully searched
};

struct PxCertificate {
    IndexKind kind = IndexKind::proper;
    Graph graph;
    int k = 0;
    int value = 0;
    EdgeColoring coloring;
    std::map<std::vector<int>, TreeWitness> witnesses; // one per k-subset
    LowerEvidence lower_evidence;
    BoundsReport bounds;
};

struct SolveOptions {
    std::optional<int> monotonic_prior;
};

// Exact k-proper index by palette search: c runs from bestLower to bestUpper;
// palettes below the answer are exhausted over canonical colorings (bridge
// pruning only cuts colorings no valid assignment can use); the final palette
// is witnessed constructively from the bound that set bestUpper. Requires
// g connected, 3 <= n <= 8, 2 <= k <= n.
PxCertificate solve_px(const Graph& g, int k, const SolveOptions& opts = {});

// Same machinery with the rainbow predicate and the n-1 upper bound.
PxCertificate solve_rx(const Graph& g, int k, const SolveOptions& opts = {});

} // namespace pxkit
