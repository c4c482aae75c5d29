#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ildt {

using NodeId = uint32_t;
using Arc = std::pair<NodeId, NodeId>;

enum class ArcKind { OneWay, Bidirectional };

// Exact (node, arc, bidirectional-pair) counts. e counts ordered arcs, so a
// reciprocated pair contributes 2 to e and 1 to b.
struct BasicCounts {
    int64_t n = 0;
    int64_t e = 0;
    int64_t b = 0;
    bool operator==(const BasicCounts&) const = default;
};

// Immutable simple digraph on dense node ids [0, n). No self-loops, no
// duplicate arcs. Both out- and in-adjacency are kept sorted so that census
// and cloning can walk either direction in O(deg).
class Digraph {
  public:
    Digraph() = default;
    Digraph(NodeId n, const std::vector<Arc>& arcs);

    NodeId node_count() const { return n_; }
    int64_t arc_count() const { return e_; }
    int64_t bidirectional_count() const { return b_; }

    bool has_arc(NodeId u, NodeId v) const;
    ArcKind arc_kind(NodeId u, NodeId v) const;  // requires has_arc(u, v)

    const std::vector<NodeId>& out_neighbors(NodeId u) const { return out_[u]; }
    const std::vector<NodeId>& in_neighbors(NodeId u) const { return in_[u]; }

    // All arcs in (u, v) lexicographic order.
    std::vector<Arc> arcs() const;

    bool operator==(const Digraph& o) const { return n_ == o.n_ && out_ == o.out_; }

  private:
    NodeId n_ = 0;
    int64_t e_ = 0;
    int64_t b_ = 0;
    std::vector<std::vector<NodeId>> out_;
    std::vector<std::vector<NodeId>> in_;
};

// Validating constructor wrapper; rejects out-of-range endpoints and
// self-loops with a diagnostic, and deduplicates repeated arcs.
Digraph make_digraph(NodeId n, const std::vector<Arc>& arcs);

BasicCounts count_basic(const Digraph& g);

// A simple directed cycle of length >= 3 that uses at least one
// non-reciprocated arc. Directed 2-cycles are excluded by the length bound,
// and cycles all of whose arcs are halves of bidirectional pairs do not
// count as witnesses; reciprocated arcs may still appear (traversed in one
// direction) as long as one arc of the cycle is one-way.
struct CycleWitness {
    std::vector<NodeId> nodes;
};

// Deterministic search for a CycleWitness: for each one-way arc (u, v) in
// lexicographic order, BFS from v back to u. Any path found has length >= 2
// (length 1 would make (u, v) reciprocated), so the closed cycle has length
// >= 3 and contains the one-way arc. Returns the first witness, rotated so
// its smallest node comes first; empty optional if none exists.
std::optional<CycleWitness> find_oriented_cycle(const Digraph& g);

// True iff seq visits every node exactly once, n >= 3, and every consecutive
// pair (including the wrap-around) is an arc of g.
bool verify_ham_cycle(const Digraph& g, const std::vector<NodeId>& seq);

}  // namespace ildt
