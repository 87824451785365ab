#ifndef PATHDEC_DECOMPOSER_HPP
#define PATHDEC_DECOMPOSER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pathdec/digraph.hpp"

namespace pathdec {

struct Decomposition {
    std::vector<PathSeq> paths;
    std::int64_t source_excess = 0;
};

// One pipeline stage's outcome; a failed stage carries at least one
// breach naming the violated precondition with a witness.
struct StageReport {
    std::string stage;
    bool success = true;
    std::vector<std::string> breaches;
    double seconds = 0.0;
};

enum class DecomposeMode { Strict, Permissive };

struct DecomposeOptions {
    std::uint64_t seed = 0;
    DecomposeMode mode = DecomposeMode::Strict;
    // <= 0 means "derive from the graph" (formula value in strict mode, a
    // small desk-scale value in permissive mode).
    double kappa = 0.0;
    double lambda = 0.0;
    double c_prime = 1.0;
    bool trace = false;
};

struct DecomposeResult {
    bool success = false;
    Decomposition decomposition;       // meaningful when success
    std::vector<StageReport> stages;   // in execution order
    std::vector<std::string> warnings;
    std::vector<std::string> trace_log;

    // The first failed stage, or nullptr.
    const StageReport* failure() const;
};

// Repeatedly walks from a maximal-excess vertex along unused out-edges
// until stuck, trims the walk to a simple path (returning cut-off loops
// to the remainder), and extracts it. Ends with a balanced remainder and
// exactly total_excess(d) paths.
std::pair<std::vector<PathSeq>, Digraph> greedy_excess_paths(const Digraph& d);

// Full pipeline: reserve absorbing structures, strip them, extract
// excess paths, peel the balanced remainder into cycles, absorb
// short/long/medium pools, and verify. Never returns an unverified
// success.
DecomposeResult perfect_decompose(const Digraph& d, const DecomposeOptions& options);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Checks that every path is a valid simple path over d's edges, that the
// path edges partition E(d) exactly, and that the path count equals
// total_excess(d).
VerifyReport verify_decomposition(const Digraph& d, const Decomposition& dec);

// Text round-trip for decompositions: "paths k" then k lines of
// space-separated vertex sequences.
Decomposition read_decomposition(std::istream& in);
void write_decomposition(std::ostream& out, const Decomposition& dec);

}  // namespace pathdec

#endif
