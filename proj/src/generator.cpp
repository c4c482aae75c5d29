#include "ildt/generator.hpp"

#include <numeric>
#include <string>

#include "ildt/census.hpp"
#include "ildt/checked.hpp"
#include "ildt/error.hpp"

namespace ildt {

NodeId block_of(const Lineage& lin, NodeId x) {
    if (x >= lin.parent.size())
        throw Error("node " + std::to_string(x) + " out of range for lineage of " +
                    std::to_string(lin.parent.size()) + " nodes");
    while (x >= lin.n0) x = lin.parent[x];
    return x;
}

std::vector<NodeId> clones_at(const Lineage& lin, uint32_t t) {
    if (lin.birth.empty() || t > lin.birth.back())
        throw Error("lineage has no step " + std::to_string(t));
    // Births are assigned in id order, so each step's nodes are contiguous.
    auto lo = std::lower_bound(lin.birth.begin(), lin.birth.end(), t);
    auto hi = std::upper_bound(lin.birth.begin(), lin.birth.end(), t);
    std::vector<NodeId> ids(static_cast<size_t>(hi - lo));
    std::iota(ids.begin(), ids.end(), static_cast<NodeId>(lo - lin.birth.begin()));
    return ids;
}

Generation initial_generation(const Digraph& g0) {
    Lineage lin;
    lin.n0 = g0.node_count();
    lin.birth.assign(g0.node_count(), 0);
    lin.parent.resize(g0.node_count());
    std::iota(lin.parent.begin(), lin.parent.end(), NodeId{0});
    return Generation{g0, std::move(lin), 0};
}

Generation ildt_step(const Generation& gen, int64_t max_arcs) {
    const Digraph& g = gen.graph;
    const NodeId n = g.node_count();
    const int64_t next_e =
        checked_add(checked_mul(3, g.arc_count()), checked_mul(2, int64_t{n}));
    if (next_e > max_arcs)
        throw Error("arc growth cap exceeded: step " + std::to_string(gen.t + 1) +
                    " would have " + std::to_string(next_e) + " arcs (cap " +
                    std::to_string(max_arcs) + ")");

    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(next_e));
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : g.out_neighbors(u)) {
            arcs.emplace_back(u, v);
            arcs.emplace_back(u + n, v);  // clone of u keeps u's out-arcs
            arcs.emplace_back(u, v + n);  // clone of v keeps v's in-arcs
        }
    }
    for (NodeId i = 0; i < n; ++i) {
        arcs.emplace_back(i, i + n);
        arcs.emplace_back(i + n, i);
    }

    Generation next;
    next.graph = Digraph(2 * n, arcs);
    next.lineage = gen.lineage;
    next.lineage.birth.resize(2 * n, gen.t + 1);
    next.lineage.parent.resize(2 * n);
    for (NodeId i = 0; i < n; ++i) next.lineage.parent[i + n] = i;
    next.t = gen.t + 1;
    return next;
}

Generation ildt_iterate(const Digraph& g0, uint32_t t, int64_t max_arcs) {
    // Predict the final size first so oversized requests fail without work.
    BasicCounts target = closed_form_basic(count_basic(g0), t);
    if (target.e > max_arcs)
        throw Error("arc growth cap exceeded: step " + std::to_string(t) + " would have " +
                    std::to_string(target.e) + " arcs (cap " + std::to_string(max_arcs) + ")");
    Generation gen = initial_generation(g0);
    for (uint32_t s = 0; s < t; ++s) gen = ildt_step(gen, max_arcs);
    return gen;
}

Digraph embed_undirected(const std::vector<Arc>& edges, NodeId n) {
    std::vector<Arc> arcs;
    arcs.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph(n, arcs);
}

}  // namespace ildt
