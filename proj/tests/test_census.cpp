#include <doctest.h>

#include <vector>

#include "ildt/census.hpp"
#include "ildt/digraph.hpp"
#include "ildt/error.hpp"
#include "ildt/generator.hpp"

using namespace ildt;

namespace {

Digraph c3() { return make_digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
Digraph c4() { return make_digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
Digraph k1() { return make_digraph(1, {}); }
Digraph k2bi() { return make_digraph(2, {{0, 1}, {1, 0}}); }
Digraph dag2() { return make_digraph(2, {{0, 1}}); }

}  // namespace

TEST_SUITE("census") {
    TEST_CASE("closed-form basic counts, exact values") {
        const BasicCounts c0 = count_basic(c3());
        CHECK(closed_form_basic(c0, 0) == c0);
        CHECK(closed_form_basic(c0, 1) == BasicCounts{6, 15, 3});
        CHECK(closed_form_basic(c0, 2) == BasicCounts{12, 57, 15});
        CHECK(closed_form_basic(count_basic(c4()), 2) == BasicCounts{16, 76, 20});
        CHECK(closed_form_basic(count_basic(k1()), 2) == BasicCounts{4, 10, 5});
        CHECK(closed_form_basic(count_basic(k2bi()), 2) == BasicCounts{8, 38, 19});
        CHECK(closed_form_basic(count_basic(dag2()), 2) == BasicCounts{8, 29, 10});
    }

    TEST_CASE("closed-form counts satisfy the one-step recurrences") {
        // n' = 2n, e' = 3e + 2n, b' = 3b + n.
        const BasicCounts c0 = count_basic(dag2());
        for (uint32_t t = 0; t < 10; ++t) {
            BasicCounts a = closed_form_basic(c0, t);
            BasicCounts b = closed_form_basic(c0, t + 1);
            CHECK(b.n == 2 * a.n);
            CHECK(b.e == 3 * a.e + 2 * a.n);
            CHECK(b.b == 3 * a.b + a.n);
        }
    }

    TEST_CASE("count validation") {
        CHECK_THROWS_AS(closed_form_basic(BasicCounts{0, 0, 0}, 1), Error);
        CHECK_THROWS_AS(closed_form_basic(BasicCounts{2, -1, 0}, 1), Error);
        CHECK_THROWS_AS(closed_form_basic(BasicCounts{2, 1, 1}, 1), Error);  // e < 2b
        // Overflow surfaces as an error, not wraparound.
        CHECK_THROWS_AS(closed_form_basic(BasicCounts{3, 3, 0}, 62), Error);
    }

    TEST_CASE("triangle censuses, frozen values for the directed triangle") {
        CHECK(triad_census_bruteforce(c3()) == TriadCounts{1, 0, 0});
        Generation gen = initial_generation(c3());
        const std::vector<TriadCounts> expected = {
            {1, 0, 0}, {4, 12, 0}, {16, 84, 6}, {64, 444, 54}, {256, 2100, 330},
        };
        for (uint32_t t = 0; t < expected.size(); ++t) {
            CHECK(triad_census_bruteforce(gen.graph) == expected[t]);
            gen = ildt_step(gen);
        }
    }

    TEST_CASE("closed form, recurrence, and enumeration agree on every seed") {
        for (const Digraph& d0 : {c3(), c4(), k1(), k2bi(), dag2()}) {
            const BasicCounts c0 = count_basic(d0);
            const TriadCounts t0 = triad_census_bruteforce(d0);
            Generation gen = initial_generation(d0);
            TriadCounts rec = t0;
            for (uint32_t t = 0; t <= 4; ++t) {
                const TriadCounts closed = triad_closed_form(c0, t0, t);
                CHECK(closed == triad_census_bruteforce(gen.graph));
                CHECK(closed == rec);
                rec = triad_recurrence_step(closed_form_basic(c0, t), rec);
                gen = ildt_step(gen);
            }
        }
    }

    TEST_CASE("bidirectional triangles appear in fully bidirected graphs only as "
              "three reciprocated pairs") {
        // Bidirected 4-clique: C(4,3) = 4 triangles, all bidirectional; no
        // directed or transitive patterns (those need a one-way arc).
        std::vector<Arc> arcs;
        for (NodeId u = 0; u < 4; ++u)
            for (NodeId v = 0; v < 4; ++v)
                if (u != v) arcs.push_back({u, v});
        CHECK(triad_census_bruteforce(make_digraph(4, arcs)) == TriadCounts{0, 0, 4});

        // Mixed: bidirected triangle plus a one-way chord into a fourth node.
        arcs = {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2}, {0, 3}, {3, 1}};
        TriadCounts tc = triad_census_bruteforce(make_digraph(4, arcs));
        CHECK(tc.bidirectional == 1);
    }

    TEST_CASE("census guards: node bound and time budget") {
        std::vector<Arc> arcs;
        for (NodeId i = 0; i + 1 < 501; ++i) arcs.push_back({i, i + 1});
        CHECK_THROWS_WITH_AS(triad_census_bruteforce(make_digraph(501, arcs)),
                             doctest::Contains("closed"), Error);
        Generation gen = ildt_iterate(c3(), 5);
        CHECK_THROWS_WITH_AS(triad_census_bruteforce(gen.graph, 0),
                             doctest::Contains("budget"), Error);
    }

    TEST_CASE("densification ratio, exact arithmetic") {
        const BasicCounts c0 = count_basic(c3());
        DensificationReport r5 = densification(c0, 5);
        CHECK(r5.relative_error == Rational(64, 729));
        DensificationReport r10 = densification(c0, 10);
        CHECK(r10.relative_error == Rational(2048, 177147));
        CHECK(r10.ratio == Rational(closed_form_basic(c0, 10).e, closed_form_basic(c0, 10).n));
        // Both values are dyadic (denominator 1024), so the doubles are exact.
        CHECK(r10.ratio_value == 175099.0 / 1024.0);
        CHECK(r10.predicted_value == 177147.0 / 1024.0);

        // The error decreases strictly from t = 1 on.
        Rational prev = densification(c0, 1).relative_error;
        for (uint32_t t = 2; t <= 14; ++t) {
            Rational cur = densification(c0, t).relative_error;
            CHECK(cur < prev);
            prev = cur;
        }
    }

    TEST_CASE("triad ratio limit") {
        CHECK(triad_ratio_limit(count_basic(c3()), triad_census_bruteforce(c3())) ==
              Rational(1, 12));
        // Fully bidirected seeds have a zero denominator: no defined limit.
        CHECK_THROWS_AS(triad_ratio_limit(count_basic(k2bi()), triad_census_bruteforce(k2bi())),
                        Error);
        // The finite-t ratio approaches the limit: |D/T - 1/12| at t = 10.
        const BasicCounts c0 = count_basic(c3());
        const TriadCounts t10 = triad_closed_form(c0, TriadCounts{1, 0, 0}, 10);
        Rational diff = (Rational(t10.directed) / Rational(t10.transitive) - Rational(1, 12)).abs();
        CHECK(diff < Rational(1, 100));
        CHECK(Rational(4, 1000) < diff);  // ~0.004973
    }
}
