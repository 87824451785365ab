#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "pathdec/digraph.hpp"
#include "pathdec/euler_cycles.hpp"
#include "pathdec/rng.hpp"

using namespace pathdec;

namespace {

std::vector<Edge> sorted_edges(const Digraph& d) {
    return d.edges();  // already ascending
}

std::vector<Edge> cycle_union_edges(const std::vector<CycleSeq>& cycles) {
    std::vector<Edge> all;
    for (const CycleSeq& c : cycles) {
        auto es = c.edges();
        all.insert(all.end(), es.begin(), es.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

// union of k random cycles as a (possibly multi-) digraph
Digraph random_cycle_union(Rng& rng, int n, int k, std::vector<CycleSeq>* made = nullptr) {
    Digraph d(n, false);
    for (int i = 0; i < k; ++i) {
        int len = 2 + rng.next_int(std::max(1, n - 2));
        std::vector<int> verts(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) verts[static_cast<std::size_t>(v)] = v;
        rng.shuffle(verts);
        verts.resize(static_cast<std::size_t>(len));
        verts.push_back(verts.front());
        CycleSeq c{verts};
        for (const Edge& e : c.edges()) d.add_edge(e);
        if (made) made->push_back(c);
    }
    return d;
}

}  // namespace

TEST_CASE("peeling small balanced graphs") {
    Digraph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(2, 0);
    auto cycles = peel_cycles(tri);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].length() == 3);

    // two triangles sharing vertex 0
    Digraph two(5);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}})
        two.add_edge(u, v);
    auto pair = peel_cycles(two);
    CHECK(pair.size() == 2);
    CHECK(cycle_union_edges(pair) == sorted_edges(two));

    CHECK(peel_cycles(Digraph(4)).empty());
}

TEST_CASE("peeling rejects unbalanced input with a witness vertex") {
    Digraph d(3);
    d.add_edge(0, 1);
    try {
        peel_cycles(d);
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("0") != std::string::npos);
    }
}

TEST_CASE("peel returns edge-disjoint cycles covering the input exactly") {
    Rng rng(314);
    for (int it = 0; it < 40; ++it) {
        int n = 4 + rng.next_int(60);
        int k = 1 + rng.next_int(10);
        Digraph d = random_cycle_union(rng, n, k);
        auto cycles = peel_cycles(d);
        for (const CycleSeq& c : cycles) CHECK(c.valid());
        CHECK(cycle_union_edges(cycles) == sorted_edges(d));

        // any subset of the returned cycles is itself balanced and re-peelable
        if (!cycles.empty()) {
            Digraph sub(n, false);
            for (std::size_t i = 0; i < cycles.size(); i += 2)
                for (const Edge& e : cycles[i].edges()) sub.add_edge(e);
            auto again = peel_cycles(sub);
            CHECK(cycle_union_edges(again) == sorted_edges(sub));
        }
    }
}

TEST_CASE("peeling is deterministic") {
    Rng rng(11);
    Digraph d = random_cycle_union(rng, 30, 6);
    auto a = peel_cycles(d);
    auto b = peel_cycles(d);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].vertices == b[i].vertices);
}

TEST_CASE("cycle classification boundaries") {
    // A-dot = {0,1,2,3} via excess-4 multigraph, A0 = rest
    Digraph m(10, false);
    for (int v : {0, 1})
        for (int i = 0; i < 4; ++i) m.add_edge(v, v + 2, 1);
    VertexPartition part = partition_by_excess(m, 4);
    REQUIRE(part.a_dot() == std::vector<int>{0, 1, 2, 3});

    double kappa = 2.0, big_n = 8.0;  // long from ell >= 4
    CycleSeq ell2{{0, 1, 5, 0}};      // ell = 2 == kappa -> short
    CycleSeq ell3{{0, 1, 2, 0}};      // ell = 3 -> medium
    CycleSeq ell4{{0, 1, 2, 3, 0}};   // ell = 4 = N/kappa -> long
    CHECK(dot_vertex_count(ell2, part) == 2);
    CHECK(dot_vertex_count(ell3, part) == 3);
    CHECK(dot_vertex_count(ell4, part) == 4);

    CycleClasses cls = classify_cycles({ell2, ell3, ell4}, part, kappa, big_n);
    CHECK(cls.short_cycles.size() == 1);
    CHECK(cls.medium_cycles.size() == 1);
    CHECK(cls.long_cycles.size() == 1);

    // with an empty A-dot every cycle is short
    VertexPartition none = partition_by_excess(m, 100);
    CycleClasses all_short = classify_cycles({ell2, ell3, ell4}, none, kappa, big_n);
    CHECK(all_short.short_cycles.size() == 3);
}
