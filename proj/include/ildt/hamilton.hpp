#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ildt/digraph.hpp"
#include "ildt/generator.hpp"

namespace ildt {

// A closed spanning walk on a seed digraph in which every edge occurrence
// (v_i, v_j) is the last departure from v_i on the walk, or arrives at a v_j
// not visited earlier (the walk's start counts as visited from position 0).
// s is the maximum node multiplicity of the cyclic sequence, the start
// counted once; it drives the minimum usable time-step via 2^(t-1) >= s.
struct NiceWalk {
    std::vector<NodeId> nodes;
    int64_t max_freq = 0;
};

// Checks the walk property above. On failure, *why (if given) receives the
// first violated condition. A single-node walk is accepted exactly for the
// one-node graph (a trivial closed walk with no edges).
bool is_nice(const std::vector<NodeId>& walk, const Digraph& d, std::string* why = nullptr);

// Maximum multiplicity of a node in the cyclic sequence (start counted once).
int64_t max_frequency(const std::vector<NodeId>& walk);

// Validates the walk with is_nice (throwing the diagnostic on failure) and
// records its max frequency.
NiceWalk make_nice_walk(const std::vector<NodeId>& walk, const Digraph& d);

// Depth-first traversal of a connected, fully bidirected digraph from node
// 0, neighbors in ascending id order, recording every edge followed
// (descents and backtracks). The resulting closed walk spans and is nice.
NiceWalk dfs_nice_walk(const Digraph& d);

// Hamiltonian path of the 2^t-node one-seed block from newest clone v (local
// id in [2^(t-1), 2^t)) down to node 0. Consecutive nodes are joined by
// bidirectional arcs and alternate newest-clone / older. The recursion
// splits the block into the descendants of 0 and of 1, each inducing a copy
// of the (t-1)-step block.
std::vector<NodeId> clone_block_path(uint32_t t, NodeId v);

// Smallest t >= 1 with 2^(t-1) >= walk.max_freq.
uint32_t min_time_for(const NiceWalk& walk);

struct HamCycle {
    std::vector<NodeId> nodes;
};

// One block-boundary event of the cycle construction: arriving in or leaving
// the block of some seed node. new_clone marks nodes born at the final step.
struct BuildEvent {
    bool entering = false;
    NodeId block = 0;
    NodeId node = 0;
    bool new_clone = false;
};

// Builds a directed Hamiltonian cycle of the t-step graph over seed d0 by
// walking the nice walk once: each block follows its clone_block_path via a
// cursor, advancing one node per revisit and draining to its block's node 0
// on the walk's last departure from that block. Requires 2^(t-1) >=
// walk.max_freq. The output is self-verified; an arc missing during
// construction raises a diagnostic naming the blocks and cursor positions.
HamCycle build_ham_cycle(const Digraph& d0, const NiceWalk& walk, uint32_t t,
                         std::vector<BuildEvent>* trace = nullptr,
                         int64_t max_arcs = kDefaultMaxArcs);

// Generates steps 0..t and checks that consecutive generations agree on
// whether an oriented cycle (length >= 3, at least one one-way arc) exists.
// per_step (if given) receives the t+1 presence flags.
bool cycle_preservation_check(const Digraph& g0, uint32_t t, std::vector<bool>* per_step = nullptr,
                              int64_t max_arcs = kDefaultMaxArcs);

}  // namespace ildt
