#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "pathdec/digraph.hpp"
#include "pathdec/generator.hpp"

using namespace pathdec;

TEST_CASE("binomial model edge cases and determinism") {
    CHECK(gen_dnp(5, 0.0, 123).edge_count() == 0);
    CHECK(gen_dnp(5, 1.0, 123).edge_count() == 20);
    CHECK_THROWS_AS(gen_dnp(5, 1.5, 0), std::invalid_argument);

    Digraph a = gen_dnp(50, 0.3, 777);
    Digraph b = gen_dnp(50, 0.3, 777);
    CHECK(a == b);
    Digraph c = gen_dnp(50, 0.3, 778);
    CHECK_FALSE(a == c);
}

TEST_CASE("binomial model edge count concentrates") {
    const double p = 0.3;
    const double pairs = 1000.0 * 999.0;
    Digraph d = gen_dnp(1000, p, 42);
    double mean = p * pairs;
    double sigma = std::sqrt(pairs * p * (1 - p));
    CHECK(std::abs(static_cast<double>(d.edge_count()) - mean) < 5 * sigma);
}

TEST_CASE("example class: regular bipartite part plus balanced overlay") {
    // matching oriented one way
    Digraph m = gen_example_class(4, 1, 0, 0);
    CHECK(m.edge_count() == 2);
    CHECK(total_excess(m) == 2);

    // 3 left vertices, out-degree t=2 each: 6 edges, total excess 6
    Digraph six = gen_example_class(6, 2, 0, 3);
    CHECK(six.edge_count() == 6);
    CHECK(total_excess(six) == 6);
    for (int v = 0; v < 3; ++v) {
        CHECK(excess(six, v) == 2);
        CHECK(six.out_degree(v) == 2);
    }

    // the balanced overlay never changes the excess
    Digraph big = gen_example_class(200, 40, 30, 9);
    CHECK(total_excess(big) == 100 * 40);
    for (int v = 0; v < 100; ++v) {
        // exactly t edges into the right half from each left vertex
        int to_right = 0;
        for (const auto& [w, mult] : big.out_neighbors(v))
            if (w >= 100) to_right += mult;
        CHECK(to_right >= 40);
    }

    CHECK_THROWS_AS(gen_example_class(5, 1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_example_class(6, 4, 0, 0), std::invalid_argument);

    CHECK(gen_example_class(100, 20, 8, 5) == gen_example_class(100, 20, 8, 5));
}

TEST_CASE("parameter formulas") {
    Parameters plain = compute_parameters(1000, 0.5, ParamMode::Plain, 1.0);
    double big_n = 1000.0 * std::log(1000.0);
    CHECK(plain.big_n == doctest::Approx(big_n));
    CHECK(plain.kappa == doctest::Approx(3.0 * std::pow(big_n, 0.4)));
    CHECK(plain.lambda ==
          doctest::Approx(std::min(1000.0 * 0.5 / 3.0, plain.kappa * plain.kappa / 12.0)));
    CHECK(plain.lambda <= 1000.0 * 0.5 / 3.0);

    Parameters pseudo = compute_parameters(1000, 0.5, ParamMode::Pseudorandom, 1.0);
    CHECK(pseudo.kappa == doctest::Approx(6.0 * std::pow(big_n * big_n * 0.5, 0.2)));

    RandomModelThresholds rt = random_model_thresholds(1000000, 0.01);
    double ln_n = std::log(1e6);
    CHECK(rt.kappa == doctest::Approx(std::sqrt(1e6 * 0.01 * 0.99) / (155.0 * std::pow(ln_n, 0.75))));
    CHECK(rt.lambda == doctest::Approx(5.0 * std::sqrt(1e6 / 0.99) * ln_n * ln_n));

    // the degree condition is reported, not thrown
    CHECK(compute_parameters(10, 0.1, ParamMode::Plain).degree_condition_ok == false);
}

TEST_CASE("class membership report on the example class") {
    Digraph d = gen_example_class(6, 2, 0, 3);
    VertexPartition part = partition_by_excess(d, 1);
    CHECK(part.a_zero().empty());

    Parameters params;
    params.n = 6;
    params.p = 2.0 / 6.0;  // np maps to the regularity t
    params.kappa = 2.0 / 155.0;
    params.lambda = 100.0;
    params.big_n = 6.0 * std::log(6.0);
    ClassReport rep = classify(d, part, params, 1);
    CHECK(rep.p1.holds);
    CHECK(rep.p2.holds);
    CHECK(rep.p3.holds);
    CHECK(rep.p4.holds);
    CHECK(rep.to_text().find("P1 PASS") != std::string::npos);
}

TEST_CASE("class report failures carry re-checkable witnesses") {
    // a weak A+ vertex: ex = 1 but the threshold asks for much more
    Digraph d(4);
    d.add_edge(0, 1);
    d.add_edge(0, 2);
    d.add_edge(3, 2);
    VertexPartition part = partition_by_excess(d, 1);
    Parameters params;
    params.n = 4;
    params.p = 0.5;
    params.kappa = 1.0;
    params.lambda = 1.0;
    params.big_n = 4.0;
    Digraph before = d;
    ClassReport rep = classify(d, part, params, 0);
    CHECK_FALSE(rep.p1.holds);
    CHECK_FALSE(rep.p1.witness.empty());
    CHECK(d == before);  // classify is pure

    // re-check the witness: it names a vertex whose excess misses 155*kappa
    CHECK(rep.to_text().find("P1 FAIL") != std::string::npos);
}

TEST_CASE("empty digraph classifies vacuously under an all-zero partition") {
    Digraph d(5);
    VertexPartition part = partition_by_excess(d, 1);
    CHECK(part.a_dot().empty());
    Parameters params;
    params.n = 5;
    params.p = 0.1;
    params.kappa = 1.0;
    params.lambda = 0.0;
    params.big_n = 5.0;
    ClassReport rep = classify(d, part, params, 0);
    CHECK(rep.p1.holds);  // no A+ vertex to violate it
    CHECK(rep.p2.holds);
    CHECK(rep.p3.holds);
}
