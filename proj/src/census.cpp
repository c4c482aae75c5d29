#include "ildt/census.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "ildt/checked.hpp"
#include "ildt/error.hpp"

namespace ildt {

namespace {

void validate_counts(const BasicCounts& c) {
    if (c.n < 1 || c.b < 0 || c.e < 2 * c.b)
        throw Error("invalid counts (n=" + std::to_string(c.n) + ", e=" + std::to_string(c.e) +
                    ", b=" + std::to_string(c.b) + "): need n >= 1 and e >= 2b >= 0");
}

// Number of elements common to two sorted ranges.
int64_t intersection_size(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    int64_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

}  // namespace

BasicCounts closed_form_basic(const BasicCounts& c0, uint32_t t) {
    validate_counts(c0);
    const int64_t p2 = checked_pow(2, t);
    const int64_t p3 = checked_pow(3, t);
    BasicCounts c;
    c.n = checked_mul(p2, c0.n);
    c.e = checked_sub(checked_mul(p3, checked_add(c0.e, checked_mul(2, c0.n))),
                      checked_mul(2, checked_mul(p2, c0.n)));
    c.b = checked_sub(checked_mul(p3, checked_add(c0.b, c0.n)), checked_mul(p2, c0.n));
    return c;
}

TriadCounts triad_census_bruteforce(const Digraph& g, int64_t budget_ms) {
    const NodeId n = g.node_count();
    if (n > kCensusNodeBound)
        throw Error("graph with " + std::to_string(n) + " nodes exceeds the " +
                    std::to_string(kCensusNodeBound) +
                    "-node census bound; use the closed forms");
    const auto deadline =
        std::chrono::steady_clock::now() + std::chrono::milliseconds(budget_ms);
    auto check_budget = [&] {
        if (std::chrono::steady_clock::now() > deadline)
            throw Error("triad census budget of " + std::to_string(budget_ms) +
                        " ms exceeded; use the closed forms");
    };

    // Sorted mutual-neighbor lists drive the all-bidirectional count.
    std::vector<std::vector<NodeId>> mutual(n);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v : g.out_neighbors(u))
            if (g.has_arc(v, u)) mutual[u].push_back(v);

    int64_t all_bid = 0;  // triples whose three edges are all reciprocated
    for (NodeId u = 0; u < n; ++u) {
        check_budget();
        for (NodeId v : mutual[u]) {
            if (v <= u) continue;
            // Count w > v adjacent (mutually) to both u and v.
            auto iu = std::upper_bound(mutual[u].begin(), mutual[u].end(), v);
            auto iv = std::upper_bound(mutual[v].begin(), mutual[v].end(), v);
            while (iu != mutual[u].end() && iv != mutual[v].end()) {
                if (*iu < *iv)
                    ++iu;
                else if (*iv < *iu)
                    ++iv;
                else {
                    ++all_bid;
                    ++iu;
                    ++iv;
                }
            }
        }
    }

    // Arc-assignment totals over ordered triples, via common neighborhoods.
    int64_t transitive_all = 0;  // assignments (x,y),(y,z),(x,z)
    int64_t cyclic_all = 0;      // assignments x->y->z->x, counted per arc
    for (NodeId x = 0; x < n; ++x) {
        check_budget();
        for (NodeId z : g.out_neighbors(x)) {
            // y with (x,y) and (y,z): middle nodes of transitive patterns.
            transitive_all +=
                intersection_size(g.out_neighbors(x), g.in_neighbors(z));
            // For the arc (x,z): w with (z,w) and (w,x) closes a 3-cycle.
            cyclic_all += intersection_size(g.out_neighbors(z), g.in_neighbors(x));
        }
    }
    // Endpoints can never appear as the middle node y (no self-loops), so
    // transitive_all needs no exclusion. Each all-bidirectional triple
    // realizes all 6 transitive assignments; those lack a one-way arc.
    // Each cyclic orientation is met 3 times (once per starting arc), and an
    // all-bidirectional triple carries 2 orientations.
    if (cyclic_all % 3 != 0) throw Error("internal census error: cyclic count not divisible by 3");
    TriadCounts tc;
    tc.bidirectional = all_bid;
    tc.transitive = transitive_all - 6 * all_bid;
    tc.directed = cyclic_all / 3 - 2 * all_bid;
    return tc;
}

TriadCounts triad_closed_form(const BasicCounts& c0, const TriadCounts& t0, uint32_t t) {
    validate_counts(c0);
    const int64_t p2 = checked_pow(2, t);
    const int64_t p3 = checked_pow(3, t);
    const int64_t p4 = checked_pow(4, t);
    const int64_t oneway = checked_sub(c0.e, checked_mul(2, c0.b));
    TriadCounts tc;
    tc.directed = checked_mul(p4, t0.directed);
    tc.transitive = checked_add(checked_mul(p4, t0.transitive),
                                checked_mul(4, checked_mul(checked_sub(p4, p3), oneway)));
    tc.bidirectional = checked_add(
        checked_add(checked_mul(p4, t0.bidirectional),
                    checked_mul(2, checked_mul(c0.b, checked_sub(p4, p3)))),
        checked_mul(c0.n, checked_add(checked_sub(p4, checked_mul(2, p3)), p2)));
    return tc;
}

TriadCounts triad_recurrence_step(const BasicCounts& c, const TriadCounts& tr) {
    validate_counts(c);
    const int64_t oneway = checked_sub(c.e, checked_mul(2, c.b));
    TriadCounts next;
    next.directed = checked_mul(4, tr.directed);
    next.transitive = checked_add(checked_mul(4, tr.transitive), checked_mul(4, oneway));
    next.bidirectional = checked_add(checked_mul(4, tr.bidirectional), checked_mul(2, c.b));
    return next;
}

DensificationReport densification(const BasicCounts& c0, uint32_t t) {
    const BasicCounts ct = closed_form_basic(c0, t);
    DensificationReport rep;
    rep.t = t;
    rep.ratio = Rational(ct.e, ct.n);
    rep.predicted =
        Rational(checked_mul(checked_pow(3, t), checked_add(c0.e, checked_mul(2, c0.n))),
                 checked_mul(checked_pow(2, t), c0.n));
    rep.relative_error = (rep.ratio / rep.predicted - Rational(1)).abs();
    rep.ratio_value = rep.ratio.value();
    rep.predicted_value = rep.predicted.value();
    rep.relative_error_value = rep.relative_error.value();
    return rep;
}

Rational triad_ratio_limit(const BasicCounts& c0, const TriadCounts& t0) {
    validate_counts(c0);
    const int64_t denom =
        checked_add(t0.transitive, checked_mul(4, checked_sub(c0.e, checked_mul(2, c0.b))));
    if (denom == 0)
        throw Error("triad ratio limit undefined: transitive count stays zero for this seed");
    return Rational(t0.directed, denom);
}

}  // namespace ildt
