#pragma once

#include "pxkit/coloring.hpp"
#include "pxkit/graph.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace pxkit {

enum class Family {
    path,
    cycle,
    star,
    wheel,
    complete,
    starPlus,          // star plus one edge between leaves
    starPlusPlus,      // star plus two edges between leaves (two shapes)
    broom,             // star on n-1 vertices with one pendant attached to a leaf
    unicyclicBroomVariant, // broom plus one edge keeping max degree n-2
    independenceTree,  // spider with a legs and b edges in total
};

enum class SnppVariant { disjoint, sharing };

struct FamilySpec {
    Family family{};
    int n = 0;
    SnppVariant variant = SnppVariant::disjoint; // starPlusPlus only
    int broom_variant = 1;                       // unicyclicBroomVariant: 1..3
    int a = 0, b = 0;                            // independenceTree only
};

std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

// Deterministic labeled representative of the family; hub at vertex 0 for the
// star-derived families. Throws InvalidInput naming the violated constraint.
Graph build(const FamilySpec& spec);

// The isomorphism classes of broom-plus-one-edge graphs that stay unicyclic
// with max degree n-2 and fall into the favorable unicyclic case. There are
// exactly three; anything else throws Error. Requires 5 <= n <= 10.
std::vector<Graph> broom_unicyclic_variants(int n);

// True iff the unicyclic graph's index drops to Delta-1: at most two vertices
// of maximum degree, all on the unique cycle, and adjacent when there are two.
bool unicyclic_favorable_case(const Graph& g);

// Hamilton path edges alternate colors 1,2 in path order; off-path edges get 1.
EdgeColoring color_traceable(const Graph& g);

// Proper coloring of the given spanning tree with exactly its max degree in
// colors; each non-tree edge takes the smallest palette color distinct from
// the tree colors at its endpoints, or 1 when every color is blocked.
EdgeColoring color_via_spanning_tree(const Graph& g, const std::vector<int>& tree_edges);

// Spanning tree edges take distinct colors 1..n-1 (ascending edge id); each
// non-tree edge takes the smallest color distinct from the tree colors at its
// endpoints, or 1.
EdgeColoring color_rainbow_spanning_tree(const Graph& g, const std::vector<int>& tree_edges);

struct UnicyclicColoring {
    EdgeColoring coloring;
    int claimed_value = 0; // Delta-1 in the favorable case, Delta otherwise
};

// Constructive coloring realizing the unicyclic index: delete the right cycle
// edge, properly color the remaining spanning tree, color the deleted edge
// distinct from its endpoints' tree colors when possible. Cycles themselves
// take the alternating Hamilton-path coloring with value 2.
UnicyclicColoring color_unicyclic(const Graph& g);

// For a star plus two extra edges (n >= 5): delete the two hub edges named by
// the matching shape (disjoint shapes drop one endpoint of each extra edge,
// sharing shapes drop the shared endpoint and one other), then properly color
// the remaining spanning tree with n-3 colors.
EdgeColoring color_snpp(const Graph& g);

} // namespace pxkit
