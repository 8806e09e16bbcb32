#pragma once

#include "pxkit/graph.hpp"
#include "pxkit/graph6.hpp"
#include "pxkit/solver.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pxkit {

enum class Verdict {
    star,          // index n-1, exactly the stars
    starPlus,      // index n-2, star plus one edge
    broom,         // index n-2, the unique tree with max degree n-2
    smallNSpecial, // n = 3 or n = 4 closed forms
    generic,       // everything else: index at most n-3
};

std::string_view verdict_name(Verdict verdict);

struct Classification {
    Verdict verdict{};
    int value = 0;     // exact index, or the upper bound for generic verdicts
    bool exact = false;
    std::string basis; // the rule that decided
};

// Closed-form classification by structure alone (no solving). Requires g
// connected, n >= 3, 3 <= k <= n.
Classification classify(const Graph& g, int k);

struct CheckOutcome {
    std::string name;
    bool pass = false;
    std::string detail; // filled on failure (expected vs got)
};

struct SurveyPerK {
    int k = 0;
    int px = 0;
    std::optional<int> rx; // solved on trees
    std::string verdict;
    std::vector<CheckOutcome> checks;
};

struct SurveyRecord {
    int line = 0;
    std::string text;
    std::string error; // nonempty: record skipped (parse failure or cap)
    int n = 0, m = 0;
    std::vector<SurveyPerK> per_k;
    std::vector<CheckOutcome> cross_k;
    bool ok = true; // every check passed (skipped records stay true)
};

struct SurveySummary {
    int records = 0;
    int skipped = 0;
    int graphs = 0;
    int checks = 0;
    int failures = 0;
};

struct SurveyReport {
    std::vector<SurveyRecord> records;
    SurveySummary summary;
    bool all_ok = true; // no check failed anywhere
};

struct SurveyOptions {
    std::vector<int> ks{3};
    int workers = 1;
    bool rx_on_trees = true; // also solve the rainbow index on trees
};

// Solves every record at every applicable k and checks each claim the library
// encodes: bound sandwich, bridge floor, traceability, Dirac condition, tree
// and unicyclic closed forms, classification agreement, certificate re-checks,
// monotonicity in k, and the spanning-path threshold at k = n. Records are
// processed independently (optionally across threads) and reported in input
// order. Caps each record at n <= 7.
SurveyReport survey(const std::vector<Graph6Record>& records, const SurveyOptions& opts);

} // namespace pxkit
