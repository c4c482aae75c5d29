#pragma once

#include <cstdint>
#include <vector>

#include "ildt/digraph.hpp"

namespace ildt {

// Default cap on the arc count of any generated graph. Arc counts grow like
// 3^t, so generation fails fast (by closed-form prediction) rather than
// attempting to materialize an oversized step.
inline constexpr int64_t kDefaultMaxArcs = int64_t{1} << 31;

// Parent/clone genealogy. Node ids are assigned so that the clone of node i
// in an n-node graph is i + n; initial nodes are their own parents.
struct Lineage {
    NodeId n0 = 0;
    std::vector<uint32_t> birth;  // birth[x] = step at which x was created
    std::vector<NodeId> parent;   // parent[x] = x for initial nodes

    bool operator==(const Lineage&) const = default;
};

// Root ancestor of x in [0, n0): follows parent links. Under the id scheme
// this always equals x mod n0.
NodeId block_of(const Lineage& lin, NodeId x);

// All nodes born exactly at step t (the initial nodes for t = 0).
std::vector<NodeId> clones_at(const Lineage& lin, uint32_t t);

// A graph at time-step t together with its genealogy.
struct Generation {
    Digraph graph;
    Lineage lineage;
    uint32_t t = 0;
};

Generation initial_generation(const Digraph& g0);

// One cloning step: every node i gains a clone i + n joined to i by a
// bidirectional arc; for every arc (x, z) the clone x' inherits (x', z), and
// for every arc (y, x) it inherits (y, x'). Clones are pairwise non-adjacent.
// Fails (before materializing) if the resulting arc count would exceed
// max_arcs.
Generation ildt_step(const Generation& gen, int64_t max_arcs = kDefaultMaxArcs);

// t-fold cloning from a fresh lineage; t = 0 wraps the input unchanged. The
// final arc count is predicted by closed form up front so oversized requests
// fail immediately.
Generation ildt_iterate(const Digraph& g0, uint32_t t, int64_t max_arcs = kDefaultMaxArcs);

// Replaces each undirected edge {v, w} with the arc pair (v, w), (w, v).
// Cloning a fully bidirected graph keeps it fully bidirected, so this is the
// entire undirected-model support.
Digraph embed_undirected(const std::vector<Arc>& edges, NodeId n);

}  // namespace ildt
