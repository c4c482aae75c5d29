#include "ildt/digraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "ildt/error.hpp"

namespace ildt {

Digraph::Digraph(NodeId n, const std::vector<Arc>& arcs) : n_(n), out_(n), in_(n) {
    for (const auto& [u, v] : arcs) {
        if (u >= n || v >= n)
            throw Error("arc (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") has an endpoint out of range for n = " + std::to_string(n));
        if (u == v)
            throw Error("self-loop (" + std::to_string(u) + ", " + std::to_string(u) +
                        ") rejected");
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    auto dedup = [](std::vector<NodeId>& adj) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    };
    for (NodeId u = 0; u < n_; ++u) {
        dedup(out_[u]);
        dedup(in_[u]);
        e_ += static_cast<int64_t>(out_[u].size());
    }
    for (NodeId u = 0; u < n_; ++u)
        for (NodeId v : out_[u])
            if (v > u && has_arc(v, u)) ++b_;
}

bool Digraph::has_arc(NodeId u, NodeId v) const {
    if (u >= n_ || v >= n_) return false;
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

ArcKind Digraph::arc_kind(NodeId u, NodeId v) const {
    if (!has_arc(u, v))
        throw Error("arc (" + std::to_string(u) + ", " + std::to_string(v) + ") not present");
    return has_arc(v, u) ? ArcKind::Bidirectional : ArcKind::OneWay;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> all;
    all.reserve(static_cast<size_t>(e_));
    for (NodeId u = 0; u < n_; ++u)
        for (NodeId v : out_[u]) all.emplace_back(u, v);
    return all;
}

Digraph make_digraph(NodeId n, const std::vector<Arc>& arcs) { return Digraph(n, arcs); }

BasicCounts count_basic(const Digraph& g) {
    return BasicCounts{g.node_count(), g.arc_count(), g.bidirectional_count()};
}

namespace {

// Shortest path src -> dst by BFS with ascending-id neighbor exploration;
// returns the node sequence src..dst, or empty if unreachable.
std::vector<NodeId> bfs_path(const Digraph& g, NodeId src, NodeId dst) {
    const NodeId kUnset = g.node_count();
    std::vector<NodeId> pred(g.node_count(), kUnset);
    std::queue<NodeId> q;
    pred[src] = src;
    q.push(src);
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        if (u == dst) break;
        for (NodeId w : g.out_neighbors(u)) {
            if (pred[w] != kUnset) continue;
            pred[w] = u;
            q.push(w);
        }
    }
    if (pred[dst] == kUnset) return {};
    std::vector<NodeId> path{dst};
    while (path.back() != src) path.push_back(pred[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::optional<CycleWitness> find_oriented_cycle(const Digraph& g) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.out_neighbors(u)) {
            if (g.has_arc(v, u)) continue;  // reciprocated; need a one-way arc
            std::vector<NodeId> back = bfs_path(g, v, u);
            if (back.empty()) continue;
            // back = v..u with length >= 2, so u -> v -> ... -> u has >= 3 nodes.
            std::vector<NodeId> cyc{u};
            cyc.insert(cyc.end(), back.begin(), back.end() - 1);
            auto lo = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), lo, cyc.end());
            return CycleWitness{std::move(cyc)};
        }
    }
    return std::nullopt;
}

bool verify_ham_cycle(const Digraph& g, const std::vector<NodeId>& seq) {
    const NodeId n = g.node_count();
    if (n < 3 || seq.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (NodeId x : seq) {
        if (x >= n || seen[x]) return false;
        seen[x] = true;
    }
    for (size_t k = 0; k < seq.size(); ++k)
        if (!g.has_arc(seq[k], seq[(k + 1) % seq.size()])) return false;
    return true;
}

}  // namespace ildt
