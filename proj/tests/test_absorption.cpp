#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>

#include "doctest.h"
#include "pathdec/absorption.hpp"
#include "pathdec/digraph.hpp"

using namespace pathdec;

namespace {

std::vector<Edge> sorted_edges(std::vector<Edge> es) {
    std::sort(es.begin(), es.end());
    return es;
}

std::vector<Edge> path_union(const std::vector<PathSeq>& paths) {
    std::vector<Edge> all;
    for (const PathSeq& p : paths) {
        auto es = p.edges();
        all.insert(all.end(), es.begin(), es.end());
    }
    return sorted_edges(std::move(all));
}

void check_kernel_shape(const KernelResult& k, const CycleSeq& c,
                        const std::vector<Edge>& consumed_pool) {
    CHECK(k.p1.valid());
    CHECK(k.p2.valid());
    CHECK(k.v1 != k.v2);
    std::vector<Edge> expect = c.edges();
    std::vector<Edge> spent = k.e1;
    spent.insert(spent.end(), k.e2.begin(), k.e2.end());
    CHECK(spent.size() == 2);
    for (const Edge& e : spent)
        CHECK(std::find(consumed_pool.begin(), consumed_pool.end(), e) != consumed_pool.end());
    expect.insert(expect.end(), spent.begin(), spent.end());
    CHECK(path_union({k.p1, k.p2}) == sorted_edges(std::move(expect)));
}

}  // namespace

TEST_CASE("hexagon with two reserved edges pointing off the cycle") {
    // cycle 0..5; vertex 1 owns an out-edge to 6, vertex 4 an in-edge from 7
    CycleSeq c{{0, 1, 2, 3, 4, 5, 0}};
    VertexPartition part(8, {1, 7}, {4, 6});
    std::map<int, std::vector<Edge>> f{{1, {{1, 6}}}, {4, {{7, 4}}}};
    KernelResult k = absorb_one_cycle(c, {1, 4}, f, part);
    check_kernel_shape(k, c, {{1, 6}, {7, 4}});

    // the classic shape: one path runs around the cycle between the owners,
    // the other enters at 4, wraps past 0, and leaves at 1
    std::vector<int> inner{1, 2, 3, 4};
    std::vector<int> outer{7, 4, 5, 0, 1, 6};
    bool match = (k.p1.vertices == inner && k.p2.vertices == outer) ||
                 (k.p1.vertices == outer && k.p2.vertices == inner);
    CHECK(match);
}

TEST_CASE("square with two crossing reserved edges on the cycle") {
    // cyclic order 0,1,2,3 with reserved edges 0->2 and 3->1
    CycleSeq c{{0, 1, 2, 3, 0}};
    VertexPartition part(4, {0, 3}, {1, 2});
    std::map<int, std::vector<Edge>> f{{0, {{0, 2}}}, {3, {{3, 1}}}};
    KernelResult k = absorb_one_cycle(c, {0, 3}, f, part);
    check_kernel_shape(k, c, {{0, 2}, {3, 1}});

    std::vector<int> p1{0, 2, 3, 1};  // chord, arc to the second owner, chord out
    std::vector<int> p2{3, 0, 1, 2};  // the complementary arc
    bool match = (k.p1.vertices == p1 && k.p2.vertices == p2) ||
                 (k.p1.vertices == p2 && k.p2.vertices == p1);
    CHECK(match);
}

TEST_CASE("kernel failure carries diagnostics") {
    CycleSeq c{{0, 1, 2, 0}};
    VertexPartition part(3, {0}, {1});
    std::map<int, std::vector<Edge>> f;  // nothing reserved anywhere
    try {
        absorb_one_cycle(c, {0}, f, part);
        FAIL("expected AbsorbError");
    } catch (const AbsorbError& e) {
        CHECK_FALSE(e.witness.empty());
    }
}

namespace {

struct PairFixture {
    Digraph dummy{1};
    AbsorbingStructure s;
    VertexPartition part;
    PathSeq p12, p21;
};

// v1 = 0, v2 = 1, paths 0->2->1 and 1->3->0; reserved edges at 0 and 1
// point to/from fresh vertices 10.. depending on each owner's side.
PairFixture make_pair_fixture(VertexPartition::Part side1, VertexPartition::Part side2) {
    PairFixture fx;
    std::vector<int> plus, minus;
    int next = 10;
    std::map<int, std::vector<Edge>> assign;
    auto place = [&](int v, VertexPartition::Part side) {
        std::vector<Edge> f;
        if (side != VertexPartition::Part::Minus) {  // out-edges to fresh sinks
            for (int j = 0; j < 2; ++j) {
                f.push_back({v, next});
                minus.push_back(next++);
            }
        }
        if (side != VertexPartition::Part::Plus) {  // in-edges from fresh sources
            for (int j = 0; j < 2; ++j) {
                f.push_back({next, v});
                plus.push_back(next++);
            }
        }
        if (side == VertexPartition::Part::Plus) plus.push_back(v);
        if (side == VertexPartition::Part::Minus) minus.push_back(v);
        assign[v] = f;
    };
    place(0, side1);
    place(1, side2);
    fx.s.t = 2;
    fx.s.domain = {0, 1};
    fx.s.assign = assign;
    fx.part = VertexPartition(next, plus, minus);
    fx.p12 = PathSeq{{0, 2, 1}};
    fx.p21 = PathSeq{{1, 3, 0}};
    return fx;
}

void check_pair_result(const PairFixture& fx, const KernelResult& k) {
    CHECK(k.p1.valid());
    CHECK(k.p2.valid());
    CHECK(fx.part.membership(k.p1.vertices.front()) == VertexPartition::Part::Plus);
    CHECK(fx.part.membership(k.p2.vertices.front()) == VertexPartition::Part::Plus);
    CHECK(fx.part.membership(k.p1.vertices.back()) == VertexPartition::Part::Minus);
    CHECK(fx.part.membership(k.p2.vertices.back()) == VertexPartition::Part::Minus);

    std::vector<Edge> expect = fx.p12.edges();
    for (const auto& more : {fx.p21.edges(), k.e1, k.e2})
        expect.insert(expect.end(), more.begin(), more.end());
    CHECK(path_union({k.p1, k.p2}) == sorted_edges(std::move(expect)));

    auto want = [&](int v) {
        return fx.part.in_dot(v) ? std::size_t{1} : std::size_t{2};
    };
    CHECK(k.e1.size() == want(k.v1));
    CHECK(k.e2.size() == want(k.v2));
}

}  // namespace

TEST_CASE("joining two opposite paths consumes reserved edges per side") {
    using P = VertexPartition::Part;
    for (P side1 : {P::Plus, P::Minus, P::Zero})
        for (P side2 : {P::Plus, P::Minus, P::Zero}) {
            CAPTURE(static_cast<int>(side1));
            CAPTURE(static_cast<int>(side2));
            PairFixture fx = make_pair_fixture(side1, side2);
            AvailabilityLedger ledger(fx.s, fx.part, 1);
            KernelResult k = absorb_pair(fx.p12, fx.p21, 0, 1, ledger, fx.part);
            check_pair_result(fx, k);
        }
}

TEST_CASE("joining the two arcs of a 2-cycle") {
    PairFixture fx = make_pair_fixture(VertexPartition::Part::Plus,
                                       VertexPartition::Part::Minus);
    fx.p12 = PathSeq{{0, 1}};
    fx.p21 = PathSeq{{1, 0}};
    AvailabilityLedger ledger(fx.s, fx.part, 1);
    KernelResult k = absorb_pair(fx.p12, fx.p21, 0, 1, ledger, fx.part);
    check_pair_result(fx, k);
}

namespace {

// Region checker shared by the three bulk-absorption tests: the outcome
// paths must exactly cover the given edge multiset, all run from A+ to
// A-, and their count must equal the region's excess.
void check_region(const AbsorptionOutcome& out, std::vector<Edge> region_edges,
                  const VertexPartition& part, int n) {
    for (const CycleSeq& c : out.leftover_cycles) {
        auto es = c.edges();
        for (const Edge& e : es) {
            auto it = std::find(region_edges.begin(), region_edges.end(), e);
            REQUIRE(it != region_edges.end());
            region_edges.erase(it);
        }
    }
    CHECK(path_union(out.paths) == sorted_edges(region_edges));
    Digraph region(n, false);
    for (const Edge& e : region_edges) region.add_edge(e);
    CHECK(static_cast<std::int64_t>(out.paths.size()) == total_excess(region));
    for (const PathSeq& p : out.paths) {
        CHECK(p.valid());
        CHECK(part.membership(p.vertices.front()) == VertexPartition::Part::Plus);
        CHECK(part.membership(p.vertices.back()) == VertexPartition::Part::Minus);
    }
}

// kappa = 2 fixture: an alternating 4-cycle [0,10,1,11] over A-dot with
// per-vertex reserved pools pointing at fresh vertices.
struct CycleFixture {
    AbsorbingStructure s;
    VertexPartition part;
    CycleSeq cycle{{0, 10, 1, 11, 0}};
    std::vector<Edge> all_edges;  // structure + cycle
    int n = 0;
};

CycleFixture make_cycle_fixture(int pool) {
    CycleFixture fx;
    std::vector<int> plus{0, 1}, minus{10, 11};
    int next = 20;
    for (int v : {0, 1}) {
        std::vector<Edge> f;
        for (int j = 0; j < pool; ++j) {
            f.push_back({v, next});
            minus.push_back(next++);
        }
        fx.s.assign[v] = f;
    }
    for (int v : {10, 11}) {
        std::vector<Edge> f;
        for (int j = 0; j < pool; ++j) {
            f.push_back({next, v});
            plus.push_back(next++);
        }
        fx.s.assign[v] = f;
    }
    fx.s.t = pool;
    fx.s.domain = {0, 1, 10, 11};
    fx.part = VertexPartition(next, plus, minus);
    fx.all_edges = fx.s.all_edges();
    auto ce = fx.cycle.edges();
    fx.all_edges.insert(fx.all_edges.end(), ce.begin(), ce.end());
    fx.n = next;
    return fx;
}

}  // namespace

TEST_CASE("bulk absorption of a high-coverage cycle") {
    CycleFixture fx = make_cycle_fixture(13);  // the 7*kappa-1 pool at kappa=2
    AbsorptionOutcome out = absorb_long({fx.cycle}, fx.s, fx.part, 2);
    CHECK(out.leftover_cycles.empty());
    check_region(out, fx.all_edges, fx.part, fx.n);

    // empty input: the pool drains into single-edge paths
    CycleFixture drained = make_cycle_fixture(13);
    AbsorptionOutcome none = absorb_long({}, drained.s, drained.part, 2);
    CHECK(none.paths.size() == drained.s.all_edges().size());
}

TEST_CASE("assignment-driven absorption of a mid-range cycle") {
    CycleFixture fx = make_cycle_fixture(5);  // the 2*kappa+1 pool at kappa=2
    AbsorptionOutcome out = absorb_medium({fx.cycle}, fx.s, fx.part, 2);
    CHECK(out.leftover_cycles.empty());
    check_region(out, fx.all_edges, fx.part, fx.n);

    AbsorptionOutcome empty = absorb_medium({}, make_cycle_fixture(5).s, fx.part, 2);
    CHECK(empty.paths.size() == fx.s.all_edges().size());
}

TEST_CASE("mid-range absorption fails loudly when the assignment cannot saturate") {
    // three cycles over the same three A-dot vertices: demand 3*3 = 9 unit
    // assignments against sink capacity 3 * kappa = 6
    std::vector<int> plus{0, 1}, minus{10};
    std::vector<CycleSeq> cycles;
    int next = 20;
    AbsorbingStructure s;
    for (int i = 0; i < 3; ++i) {
        int a = next++, b = next++, c = next++;
        cycles.push_back(CycleSeq{{0, a, 1, b, 10, c, 0}});
    }
    for (int v : {0, 1}) {
        std::vector<Edge> f;
        for (int j = 0; j < 5; ++j) {
            f.push_back({v, next});
            minus.push_back(next++);
        }
        s.assign[v] = f;
    }
    {
        std::vector<Edge> f;
        for (int j = 0; j < 5; ++j) {
            f.push_back({next, 10});
            plus.push_back(next++);
        }
        s.assign[10] = f;
    }
    s.t = 5;
    s.domain = {0, 1, 10};
    VertexPartition part(next, plus, minus);
    try {
        absorb_medium(cycles, s, part, 2);
        FAIL("expected AbsorbError");
    } catch (const AbsorbError& e) {
        CHECK(e.witness.find("flow") != std::string::npos);
    }
}

TEST_CASE("multi-round absorption of low-coverage cycles") {
    // A+ = 0..11, A- = 12..23, balanced middlemen 24..29; kappa = 2, t = 6
    const int kappa = 2, t = 6;
    AbsorbingStructure s;
    s.t = t;
    std::vector<Edge> region;
    for (int v = 0; v < 12; ++v) {
        std::vector<Edge> f;
        for (int j = 0; j < t; ++j) f.push_back({v, 12 + (v + j) % 12});
        s.assign[v] = f;
        s.domain.push_back(v);
    }
    for (int c = 0; c < 12; ++c) {
        std::vector<Edge> f;
        for (int r = 6; r < 12; ++r) f.push_back({(c - r % 12 + 12) % 12, 12 + c});
        s.assign[12 + c] = f;
        s.domain.push_back(12 + c);
    }
    for (int k = 0; k < 6; ++k) {
        std::vector<Edge> f;
        for (int j = 0; j < t; ++j) f.push_back({6 + j, 24 + k});
        for (int j = 0; j < t; ++j) f.push_back({24 + k, 18 + j});
        s.assign[24 + k] = f;
        s.domain.push_back(24 + k);
    }
    std::vector<int> plus, minus;
    for (int v = 0; v < 12; ++v) plus.push_back(v);
    for (int v = 12; v < 24; ++v) minus.push_back(v);
    VertexPartition part(30, plus, minus);

    // 2-cycles through the balanced vertices, edge-disjoint from the pools
    std::vector<CycleSeq> cycles;
    for (int k = 0; k < 6; ++k) cycles.push_back(CycleSeq{{k, 24 + k, k}});

    std::vector<Edge> all = s.all_edges();
    for (const CycleSeq& c : cycles) {
        auto es = c.edges();
        all.insert(all.end(), es.begin(), es.end());
    }

    std::vector<std::string> trace;
    AbsorptionOutcome out = absorb_short(cycles, s, part, kappa, 1.0, &trace);
    CHECK(out.leftover_cycles.empty());
    check_region(out, all, part, 30);
    CHECK_FALSE(trace.empty());

    // empty input: everything drains to paths
    AbsorptionOutcome none = absorb_short({}, s, part, kappa, 1.0);
    CHECK(none.paths.size() == 12 * 6 + 12 * 6 + 6 * 6);  // A0 pairs give length-2 paths
    CHECK(none.leftover_cycles.empty());
}
