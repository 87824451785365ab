#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "pathdec/decomposer.hpp"
#include "pathdec/digraph.hpp"
#include "pathdec/generator.hpp"
#include "pathdec/rng.hpp"

using namespace pathdec;

namespace {

std::vector<Edge> path_union(const std::vector<PathSeq>& paths) {
    std::vector<Edge> all;
    for (const PathSeq& p : paths) {
        auto es = p.edges();
        all.insert(all.end(), es.begin(), es.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

std::string to_text(const Decomposition& dec) {
    std::ostringstream ss;
    write_decomposition(ss, dec);
    return ss.str();
}

}  // namespace

TEST_CASE("greedy extraction on small graphs") {
    Digraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    auto [p1, r1] = greedy_excess_paths(path);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].vertices == std::vector<int>{0, 1, 2});
    CHECK(r1.edge_count() == 0);

    Digraph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(2, 0);
    auto [p2, r2] = greedy_excess_paths(tri);
    CHECK(p2.empty());
    CHECK(r2 == tri);

    Digraph mixed(4);
    mixed.add_edge(0, 1);
    mixed.add_edge(1, 2);
    mixed.add_edge(2, 3);
    mixed.add_edge(3, 1);
    auto [p3, r3] = greedy_excess_paths(mixed);
    CHECK(p3.size() == 1);
    CHECK(is_eulerian(r3));
}

TEST_CASE("greedy extraction properties on random graphs") {
    Rng rng(88);
    for (int it = 0; it < 40; ++it) {
        int n = 3 + rng.next_int(20);
        Digraph d(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && rng.next_double() < 0.3) d.add_edge(u, v);
        auto [paths, rem] = greedy_excess_paths(d);
        CHECK(static_cast<std::int64_t>(paths.size()) == total_excess(d));
        CHECK(is_eulerian(rem));
        for (const PathSeq& p : paths) CHECK(p.valid());
        std::vector<Edge> covered = path_union(paths);
        auto rest = rem.edges();
        covered.insert(covered.end(), rest.begin(), rest.end());
        std::sort(covered.begin(), covered.end());
        CHECK(covered == d.edges());
    }
}

TEST_CASE("verification checks paths, partition, and count") {
    Digraph single(2);
    single.add_edge(0, 1);
    Decomposition ok{{PathSeq{{0, 1}}}, 1};
    CHECK(verify_decomposition(single, ok).ok);

    // triangle split into two paths: count 2 vs excess 0
    Digraph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(2, 0);
    Decomposition split{{PathSeq{{0, 1, 2}}, PathSeq{{2, 0}}}, 0};
    VerifyReport r = verify_decomposition(tri, split);
    CHECK_FALSE(r.ok);
    bool count_mentioned = false;
    for (const auto& f : r.failures) count_mentioned |= f.find("count") != std::string::npos;
    CHECK(count_mentioned);

    // duplicate edge across two paths
    Digraph two(3);
    two.add_edge(0, 1);
    two.add_edge(1, 2);
    Decomposition dup{{PathSeq{{0, 1}}, PathSeq{{0, 1, 2}}}, 1};
    VerifyReport rd = verify_decomposition(two, dup);
    CHECK_FALSE(rd.ok);

    // path using an absent edge is named in the report
    Decomposition absent{{PathSeq{{2, 0}}}, 1};
    VerifyReport ra = verify_decomposition(two, absent);
    CHECK_FALSE(ra.ok);
    bool named = false;
    for (const auto& f : ra.failures) named |= f.find("2->0") != std::string::npos;
    CHECK(named);
}

TEST_CASE("full pipeline succeeds on the example class and verifies") {
    Digraph d = gen_example_class(400, 120, 3, 21);
    DecomposeOptions opt;
    opt.seed = 21;
    opt.mode = DecomposeMode::Permissive;
    DecomposeResult res = perfect_decompose(d, opt);
    REQUIRE(res.success);
    CHECK(static_cast<std::int64_t>(res.decomposition.paths.size()) == total_excess(d));
    CHECK(verify_decomposition(d, res.decomposition).ok);
    CHECK(res.failure() == nullptr);
}

TEST_CASE("pipeline is deterministic") {
    Digraph d = gen_example_class(400, 120, 3, 4);
    DecomposeOptions opt;
    opt.seed = 9;
    opt.mode = DecomposeMode::Permissive;
    DecomposeResult a = perfect_decompose(d, opt);
    DecomposeResult b = perfect_decompose(d, opt);
    REQUIRE(a.success);
    REQUIRE(b.success);
    CHECK(to_text(a.decomposition) == to_text(b.decomposition));
}

TEST_CASE("acyclic graphs take the greedy fast path") {
    Rng rng(3);
    Digraph d(30);
    for (int u = 0; u < 30; ++u)
        for (int v = u + 1; v < 30; ++v)
            if (rng.next_double() < 0.1) d.add_edge(u, v);
    DecomposeOptions opt;  // strict
    DecomposeResult res = perfect_decompose(d, opt);
    REQUIRE(res.success);
    CHECK(verify_decomposition(d, res.decomposition).ok);
    bool fast = false;
    for (const StageReport& s : res.stages) fast |= s.stage == "acyclic-fast-path";
    CHECK(fast);
}

TEST_CASE("degenerate and impossible inputs") {
    DecomposeOptions opt;
    DecomposeResult empty = perfect_decompose(Digraph(5), opt);
    CHECK(empty.success);
    CHECK(empty.decomposition.paths.empty());

    Digraph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(2, 0);
    DecomposeResult fail = perfect_decompose(tri, opt);
    CHECK_FALSE(fail.success);
    REQUIRE(fail.failure() != nullptr);
    CHECK_FALSE(fail.failure()->breaches.empty());
}

TEST_CASE("strict mode refuses class violations that permissive mode reports") {
    Digraph d = gen_example_class(400, 120, 3, 6);
    DecomposeOptions strict;
    strict.seed = 1;
    strict.kappa = 3;  // desk-scale threshold: the class cannot reach 155*kappa
    DecomposeResult res = perfect_decompose(d, strict);
    CHECK_FALSE(res.success);
    REQUIRE(res.failure() != nullptr);
    CHECK(res.failure()->stage == "classify");

    DecomposeOptions perm = strict;
    perm.mode = DecomposeMode::Permissive;
    DecomposeResult ok = perfect_decompose(d, perm);
    CHECK(ok.success);
    CHECK_FALSE(ok.warnings.empty());
}

TEST_CASE("decomposition text round trip") {
    Decomposition dec{{PathSeq{{0, 1, 2}}, PathSeq{{3, 4}}}, 2};
    std::stringstream ss;
    write_decomposition(ss, dec);
    Decomposition back = read_decomposition(ss);
    REQUIRE(back.paths.size() == 2);
    CHECK(back.paths[0].vertices == std::vector<int>{0, 1, 2});
    CHECK(back.paths[1].vertices == std::vector<int>{3, 4});

    std::stringstream bad("paths 3\n0 1\n");
    CHECK_THROWS(read_decomposition(bad));
    std::stringstream wrong("routes 1\n0 1\n");
    CHECK_THROWS(read_decomposition(wrong));
}
