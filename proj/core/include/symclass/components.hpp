#pragma once

#include <vector>

#include "symclass/normal_form.hpp"

namespace symclass {

/// Sheet-adjacency graph of one quotient with the bifurcation locus removed:
/// nodes are the sheets over the seven regions and the three parabola
/// branches, edges follow continuity of the B-form signature through the
/// parabola walls. Connected components are the reachability classes of
/// orbit cylinders.
struct ComponentGraph {
    struct Node {
        SheetLabel label;
        /// True when every sheet in this node's connected component carries
        /// only stable matrices, i.e. families inside the component can
        /// never drift to instability.
        bool strongly_stable_component = false;
    };

    Quotient quotient;
    std::vector<Node> nodes;
    std::vector<std::pair<int, int>> edges;  // node index pairs, i < j
    std::vector<int> component_of;           // node index -> component id
    int component_count = 0;

    int node_index(StratumLabel s, const std::string& decoration) const;
    bool adjacent(int a, int b) const;
    std::vector<int> component_members(int component) const;
};

/// Deterministic static construction; components computed by traversal.
ComponentGraph build_component_graph(Quotient q);

/// Cached graphs (construction is pure).
const ComponentGraph& component_graph(Quotient q);

/// Component of the triple's sheet. Throws OnBifurcationLocus over the
/// eigenvalue +-1 walls and the singular points.
int component_id(const WonenburgerTriple& t, Quotient q, double tol = 1e-9);

struct ObstructionVerdict {
    bool obstructed = false;
    int component_a = -1;
    int component_b = -1;
    std::string reason;  // "different-component" when obstructed
};

/// One-directional test: distinct components obstruct an orbit cylinder
/// between the two classes; equal components certify nothing.
ObstructionVerdict cylinder_obstruction(const WonenburgerTriple& t1,
                                        const WonenburgerTriple& t2, Quotient q,
                                        double tol = 1e-9);

}  // namespace symclass
