#include "ildt/hamilton.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "ildt/checked.hpp"
#include "ildt/error.hpp"

namespace ildt {

namespace {

void set_why(std::string* why, const std::string& msg) {
    if (why) *why = msg;
}

constexpr uint32_t kMaxBlockStep = 26;  // block paths hold 2^t ids

}  // namespace

int64_t max_frequency(const std::vector<NodeId>& walk) {
    std::unordered_map<NodeId, int64_t> mult;
    int64_t best = 0;
    for (NodeId x : walk) best = std::max(best, ++mult[x]);
    return best;
}

bool is_nice(const std::vector<NodeId>& walk, const Digraph& d, std::string* why) {
    const size_t L = walk.size();
    const NodeId n = d.node_count();
    if (L == 0) {
        set_why(why, "empty walk");
        return false;
    }
    for (NodeId x : walk)
        if (x >= n) {
            set_why(why, "walk node " + std::to_string(x) + " out of range");
            return false;
        }
    if (L == 1) {
        // A trivial closed walk with no edges spans only the one-node graph.
        if (n == 1) return true;
        set_why(why, "single-node walk does not span " + std::to_string(n) + " nodes");
        return false;
    }
    for (size_t k = 0; k < L; ++k) {
        NodeId u = walk[k], v = walk[(k + 1) % L];
        if (!d.has_arc(u, v)) {
            set_why(why, "walk step " + std::to_string(k) + " uses missing arc (" +
                             std::to_string(u) + ", " + std::to_string(v) + ")");
            return false;
        }
    }
    std::vector<bool> covered(n, false);
    for (NodeId x : walk) covered[x] = true;
    for (NodeId x = 0; x < n; ++x)
        if (!covered[x]) {
            set_why(why, "walk does not visit node " + std::to_string(x));
            return false;
        }

    std::vector<size_t> last_dep(n, 0);
    for (size_t k = 0; k < L; ++k) last_dep[walk[k]] = k;

    std::vector<bool> visited(n, false);
    visited[walk[0]] = true;
    for (size_t k = 0; k < L; ++k) {
        NodeId u = walk[k], v = walk[(k + 1) % L];
        if (k == last_dep[u]) {
            visited[v] = true;
            continue;
        }
        if (visited[v]) {
            set_why(why, "walk step " + std::to_string(k) + ": edge (" + std::to_string(u) +
                             ", " + std::to_string(v) + ") is neither the last departure from " +
                             std::to_string(u) + " nor a first arrival at " + std::to_string(v));
            return false;
        }
        visited[v] = true;
    }
    return true;
}

NiceWalk make_nice_walk(const std::vector<NodeId>& walk, const Digraph& d) {
    std::string why;
    if (!is_nice(walk, d, &why)) throw Error("walk is not nice: " + why);
    return NiceWalk{walk, max_frequency(walk)};
}

NiceWalk dfs_nice_walk(const Digraph& d) {
    const NodeId n = d.node_count();
    if (n == 0) throw Error("depth-first walk needs a non-empty graph");
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v : d.out_neighbors(u))
            if (!d.has_arc(v, u))
                throw Error("depth-first walk requires a bidirected graph: arc (" +
                            std::to_string(u) + ", " + std::to_string(v) + ") has no reverse");

    std::vector<bool> visited(n, false);
    visited[0] = true;
    std::vector<NodeId> walk{0};
    struct Frame {
        NodeId node;
        size_t next;
    };
    std::vector<Frame> stack{{0, 0}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nbr = d.out_neighbors(f.node);
        while (f.next < nbr.size() && visited[nbr[f.next]]) ++f.next;
        if (f.next == nbr.size()) {
            stack.pop_back();
            if (!stack.empty()) walk.push_back(stack.back().node);  // backtrack edge
        } else {
            NodeId child = nbr[f.next++];
            visited[child] = true;
            walk.push_back(child);
            stack.push_back({child, 0});
        }
    }
    for (NodeId x = 0; x < n; ++x)
        if (!visited[x])
            throw Error("graph is disconnected: node " + std::to_string(x) +
                        " is not reachable from node 0");
    if (walk.size() > 1) walk.pop_back();  // drop the final return; the walk is cyclic

    std::string why;
    if (!is_nice(walk, d, &why))
        throw Error("internal walk construction error: " + why);
    const int64_t freq = max_frequency(walk);
    return NiceWalk{std::move(walk), freq};
}

std::vector<NodeId> clone_block_path(uint32_t t, NodeId v) {
    if (t < 1 || t > kMaxBlockStep)
        throw Error("block path step must be in 1.." + std::to_string(kMaxBlockStep) + ", got " +
                    std::to_string(t));
    const NodeId top = NodeId{1} << (t - 1);
    if (v < top || v >= (NodeId{1} << t))
        throw Error("node " + std::to_string(v) + " is not a newest clone at step " +
                    std::to_string(t) + " (need local id in [" + std::to_string(top) + ", " +
                    std::to_string(NodeId{1} << t) + "))");
    if (t == 1) return {1, 0};

    const NodeId prev_top = NodeId{1} << (t - 2);
    std::vector<NodeId> path;
    path.reserve(size_t{1} << t);
    if (v % 2 == 1) {
        // v descends from node 1: walk its half first, cross 1 -> (a newest
        // clone of the 0-half), then walk the 0-half down to 0.
        for (NodeId x : clone_block_path(t - 1, (v - 1) / 2)) path.push_back(2 * x + 1);
        for (NodeId x : clone_block_path(t - 1, prev_top)) path.push_back(2 * x);
    } else {
        // v descends from node 0: walk its half but stop before 0, detour
        // through the whole 1-half, and re-enter 0 last.
        std::vector<NodeId> own = clone_block_path(t - 1, v / 2);
        own.pop_back();
        for (NodeId x : own) path.push_back(2 * x);
        std::vector<NodeId> other = clone_block_path(t - 1, prev_top);
        for (auto it = other.rbegin(); it != other.rend(); ++it) path.push_back(2 * *it + 1);
        path.push_back(0);
    }
    return path;
}

uint32_t min_time_for(const NiceWalk& walk) {
    if (walk.max_freq < 1) throw Error("walk has no nodes");
    uint32_t t = 1;
    while ((int64_t{1} << (t - 1)) < walk.max_freq) ++t;
    return t;
}

HamCycle build_ham_cycle(const Digraph& d0, const NiceWalk& walk, uint32_t t,
                         std::vector<BuildEvent>* trace, int64_t max_arcs) {
    std::string why;
    if (!is_nice(walk.nodes, d0, &why)) throw Error("walk is not nice: " + why);
    if (walk.max_freq != max_frequency(walk.nodes))
        throw Error("walk frequency field is inconsistent with the node sequence");
    if (t < 1 || t > kMaxBlockStep)
        throw Error("time-step must be in 1.." + std::to_string(kMaxBlockStep) + ", got " +
                    std::to_string(t));
    if ((int64_t{1} << (t - 1)) < walk.max_freq)
        throw Error("time-step " + std::to_string(t) + " too small: need 2^(t-1) >= " +
                    std::to_string(walk.max_freq) + " (the walk's max frequency)");
    const NodeId n0 = d0.node_count();
    if (checked_mul(int64_t{n0}, int64_t{1} << t) < 3)
        throw Error("graph at step " + std::to_string(t) +
                    " has fewer than 3 nodes; directed cycles need length >= 3");

    const Generation gen = ildt_iterate(d0, t, max_arcs);
    const Digraph& g = gen.graph;
    const NodeId size = NodeId{1} << t;
    const NodeId half = NodeId{1} << (t - 1);
    const auto& w = walk.nodes;
    const size_t L = w.size();

    auto global_id = [&](NodeId blk, NodeId local) { return blk + n0 * local; };
    auto record = [&](bool entering, NodeId blk, NodeId node) {
        if (trace) trace->push_back(BuildEvent{entering, blk, node, node / n0 >= half});
    };

    std::vector<size_t> last_dep(n0, 0);
    for (size_t k = 0; k < L; ++k) last_dep[w[k]] = k;

    std::vector<std::vector<NodeId>> paths(n0);  // per-block path; empty = not entered
    std::vector<NodeId> cursor(n0, 0);
    std::vector<NodeId> cyc;
    cyc.reserve(static_cast<size_t>(size) * n0);

    auto require_arc = [&](NodeId from, NodeId to, NodeId blk_i, NodeId blk_j) {
        if (!g.has_arc(from, to))
            throw Error("construction failure: missing arc (" + std::to_string(from) + ", " +
                        std::to_string(to) + ") between blocks " + std::to_string(blk_i) +
                        " (cursor " + std::to_string(cursor[blk_i]) + ") and " +
                        std::to_string(blk_j) + " (cursor " + std::to_string(cursor[blk_j]) +
                        ")");
    };

    const NodeId start_block = w[0];
    paths[start_block] = clone_block_path(t, half);
    cyc.push_back(global_id(start_block, half));
    record(true, start_block, cyc.back());

    for (size_t k = 0; k < L; ++k) {
        const NodeId i = w[k], j = w[(k + 1) % L];
        if (k == last_dep[i]) {
            // Final departure: consume the rest of the block's path, ending
            // at the block's own seed node (local 0).
            for (NodeId q = cursor[i] + 1; q < size; ++q) {
                NodeId next = global_id(i, paths[i][q]);
                require_arc(cyc.back(), next, i, i);
                cyc.push_back(next);
            }
            cursor[i] = size - 1;
        } else {
            NodeId q = cursor[i] + 1;
            NodeId next = global_id(i, paths[i][q]);
            require_arc(cyc.back(), next, i, i);
            cyc.push_back(next);
            cursor[i] = q;
        }
        record(false, i, cyc.back());

        if (k + 1 == L) {
            require_arc(cyc.back(), cyc.front(), i, start_block);
            break;
        }
        if (paths[j].empty()) {
            // First entry: land on the block's lowest-id newest clone.
            NodeId entry = global_id(j, half);
            require_arc(cyc.back(), entry, i, j);
            paths[j] = clone_block_path(t, half);
            cursor[j] = 0;
            cyc.push_back(entry);
        } else {
            NodeId q = cursor[j] + 1;
            NodeId next = global_id(j, paths[j][q]);
            require_arc(cyc.back(), next, i, j);
            cyc.push_back(next);
            cursor[j] = q;
        }
        record(true, j, cyc.back());
    }

    if (!verify_ham_cycle(g, cyc))
        throw Error("internal construction error: output failed cycle verification");
    return HamCycle{std::move(cyc)};
}

bool cycle_preservation_check(const Digraph& g0, uint32_t t, std::vector<bool>* per_step,
                              int64_t max_arcs) {
    std::vector<bool> present;
    present.reserve(t + 1);
    Generation gen = initial_generation(g0);
    present.push_back(find_oriented_cycle(gen.graph).has_value());
    for (uint32_t s = 1; s <= t; ++s) {
        gen = ildt_step(gen, max_arcs);
        present.push_back(find_oriented_cycle(gen.graph).has_value());
    }
    bool ok = true;
    for (uint32_t s = 0; s + 1 <= t && s + 1 < present.size(); ++s)
        if (present[s] != present[s + 1]) ok = false;
    if (per_step) *per_step = std::move(present);
    return ok;
}

}  // namespace ildt
