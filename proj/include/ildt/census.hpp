#pragma once

#include <cstdint>

#include "ildt/digraph.hpp"
#include "ildt/rational.hpp"

namespace ildt {

inline constexpr int64_t kDefaultCensusBudgetMs = 30000;
inline constexpr NodeId kCensusNodeBound = 500;

// Exact triangle census. A triple of nodes may host several countable
// patterns at once when some of its edges are bidirectional:
//   directed      — cyclic orientations x->y->z->x, two nodes' rotations
//                   identified, requiring at least one non-reciprocated arc;
//   transitive    — arc assignments (x,y),(y,z),(x,z) over ordered triples,
//                   each distinct assignment counted, requiring at least one
//                   non-reciprocated arc;
//   bidirectional — triples all three of whose edges are reciprocated pairs.
struct TriadCounts {
    int64_t directed = 0;
    int64_t transitive = 0;
    int64_t bidirectional = 0;
    bool operator==(const TriadCounts&) const = default;
};

// (n, e, b) after t cloning steps:
//   n_t = 2^t n0,
//   e_t = 3^t (e0 + 2 n0) - 2^(t+1) n0,
//   b_t = 3^t (b0 + n0) - 2^t n0.
// All arithmetic overflow-checked.
BasicCounts closed_form_basic(const BasicCounts& c0, uint32_t t);

// Edge-driven exact enumeration (common-neighborhood intersections rather
// than all node triples). Guarded by a node bound and a wall-clock budget;
// both failure modes advise the closed forms.
TriadCounts triad_census_bruteforce(const Digraph& g, int64_t budget_ms = kDefaultCensusBudgetMs);

// Closed forms after t steps:
//   D_t = 4^t D0,
//   T_t = 4^t T0 + 4 (4^t - 3^t)(e0 - 2 b0),
//   B_t = 4^t B0 + 2 b0 (4^t - 3^t) + n0 (4^t - 2*3^t + 2^t).
TriadCounts triad_closed_form(const BasicCounts& c0, const TriadCounts& t0, uint32_t t);

// One-step update: (4D, 4T + 4(e - 2b), 4B + 2b) where (e, b) describe the
// graph the census was taken on.
TriadCounts triad_recurrence_step(const BasicCounts& c, const TriadCounts& tr);

// Arc/node density after t steps compared against the asymptote
// (3/2)^t (e0 + 2 n0) / n0, with the error kept exact.
struct DensificationReport {
    uint32_t t = 0;
    Rational ratio;           // e_t / n_t
    Rational predicted;       // (3/2)^t (e0 + 2 n0) / n0
    Rational relative_error;  // |ratio / predicted - 1|
    double ratio_value = 0;
    double predicted_value = 0;
    double relative_error_value = 0;
};

DensificationReport densification(const BasicCounts& c0, uint32_t t);

// Limit of directed/transitive triangle counts: D0 / (T0 + 4 (e0 - 2 b0)).
// Throws when the denominator is zero (fully bidirected seeds with no
// transitive triangles have no defined limit).
Rational triad_ratio_limit(const BasicCounts& c0, const TriadCounts& t0);

}  // namespace ildt
