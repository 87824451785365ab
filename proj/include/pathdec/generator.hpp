#ifndef PATHDEC_GENERATOR_HPP
#define PATHDEC_GENERATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathdec/digraph.hpp"

namespace pathdec {

enum class ParamMode { Plain, Pseudorandom };

// Pipeline parameters: kappa/lambda thresholds and the cycle-count budget
// N = c_prime * n * ln n.
struct Parameters {
    std::int64_t n = 0;
    double p = 0.0;
    double kappa = 0.0;
    double lambda = 0.0;
    double big_n = 0.0;
    double c_prime = 1.0;
    ParamMode mode = ParamMode::Plain;
    // Whether np >= 365 N^{2/5} (plain) resp. p >= n^{-1/3} log^4 n
    // (pseudorandom) holds at these (n, p). Reported, never thrown.
    bool degree_condition_ok = false;
    bool user_override = false;
};

// Per-property verdicts for the digraph class membership check; a failed
// property carries one re-checkable witness.
struct ClassReport {
    struct Verdict {
        bool holds = true;
        std::string witness;  // empty when holds
    };
    Verdict p1, p2, p3, p4, p5;
    bool p5_sampled = true;

    bool all_deterministic_hold() const {
        return p1.holds && p2.holds && p3.holds && p4.holds;
    }
    std::string to_text() const;
};

// D_{n,p}: each of the n(n-1) ordered pairs present independently with
// probability p. Deterministic in (n, p, seed).
Digraph gen_dnp(int n, double p, std::uint64_t seed);

// Edge-disjoint union of a t-regular bipartite digraph oriented left to
// right on an n/2 + n/2 split, and a union of random cycles (excess 0)
// with max in/out degree at most eulerian_degree avoiding the bipartite
// edges. Requires n even, t <= n/2, eulerian_degree <= 3t.
Digraph gen_example_class(int n, int t, int eulerian_degree, std::uint64_t seed);

// Derived working parameters and the degree conditions they require.
Parameters compute_parameters(std::int64_t n, double p, ParamMode mode,
                              double c_prime = 1.0);

// Classification thresholds for the random model: kappa =
// sqrt(np(1-p))/(155 log^{3/4} n), lambda = 5 sqrt(n/(1-p)) log^2 n.
struct RandomModelThresholds {
    double kappa = 0.0;
    double lambda = 0.0;
};
RandomModelThresholds random_model_thresholds(std::int64_t n, double p);

// Evaluates properties P1-P4 exactly per vertex; P5 by subset sampling
// plus a greedy densest-subset witness (exact evaluation is over all
// subsets). Pure: never mutates D.
ClassReport classify(const Digraph& d, const VertexPartition& part, const Parameters& params,
                     std::uint64_t seed = 0, int p5_samples_per_bucket = 200);

}  // namespace pathdec

#endif
