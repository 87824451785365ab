#ifndef PATHDEC_ABSORBER_HPP
#define PATHDEC_ABSORBER_HPP

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pathdec/digraph.hpp"

namespace pathdec {

// A reserved edge set with t short (A+,A-)-paths assigned to each domain
// vertex: t out-edges into A- for an A+ vertex, t in-edges from A+ for an
// A- vertex, and t of each for an A0 vertex (its in/out edges pair up
// into length-2 paths). The per-vertex edge sets partition the edge set.
struct AbsorbingStructure {
    int t = 0;
    std::vector<int> domain;                  // ascending
    std::map<int, std::vector<Edge>> assign;  // f: domain vertex -> its edges

    std::vector<Edge> all_edges() const;
    std::int64_t edge_count() const;
    // Structure edges incident to v (over all assignment sets).
    std::int64_t incidence(int v) const;
};

// Construction ran out of candidate edges at some vertex even after the
// retry budget.
struct StructureBuildError : std::runtime_error {
    int vertex;
    std::int64_t candidates;
    std::int64_t needed;
    StructureBuildError(int vertex, std::int64_t candidates, std::int64_t needed);
};

// Structure over A-dot with t = 12*kappa and at most 150*kappa structure
// edges incident to every A-dot vertex. Randomized greedy with repair;
// retries up to 20 derived seeds before throwing StructureBuildError.
AbsorbingStructure build_dotA_structure(const Digraph& d, const VertexPartition& part,
                                        int kappa, std::uint64_t seed);

// Structure over A0 with t = 3*kappa, at most 5*kappa of its edges
// incident to every A-dot vertex, and avoiding `forbidden` (the edges
// already reserved by the A-dot structure).
AbsorbingStructure build_A0_structure(const Digraph& d, const VertexPartition& part, int kappa,
                                      std::uint64_t seed, const std::set<Edge>& forbidden);

// Splits a t=12*kappa structure per vertex into parts of sizes
// 7*kappa-1, 2*kappa+1 and 3*kappa (edges in ascending order).
std::array<AbsorbingStructure, 3> split_structure(const AbsorbingStructure& s, int kappa);

// Union of two structures with equal t, disjoint domains and disjoint
// edge sets; throws std::invalid_argument on overlap.
AbsorbingStructure merge_structures(const AbsorbingStructure& a, const AbsorbingStructure& b);

struct ValidationReport {
    bool ok = true;
    std::string detail;  // first violation, empty when ok
};

// Checks the four defining properties (orientation/count per domain
// vertex, disjoint assignment sets) plus membership of every structure
// edge in D.
ValidationReport validate_structure(const AbsorbingStructure& s, const Digraph& d,
                                    const VertexPartition& part);

// Tracks which structure paths are still unused per vertex. a(v) counts
// remaining paths (edges for A-dot vertices, in/out pairs for A0);
// ready(v) = a(v) - 2*kappa is what the current round may spend.
class AvailabilityLedger {
public:
    AvailabilityLedger(const AbsorbingStructure& s, const VertexPartition& part, int kappa);

    int kappa() const { return kappa_; }
    bool tracks(int v) const { return in_.count(v) > 0; }
    int available(int v) const;
    int ready(int v) const { return available(v) - 2 * kappa_; }
    const std::vector<Edge>& in_edges(int v) const { return in_.at(v); }
    const std::vector<Edge>& out_edges(int v) const { return out_.at(v); }

    // Removes the given edges from v's pools; throws std::logic_error if
    // one is absent or the removal unbalances an A0 vertex.
    void consume(int v, const std::vector<Edge>& edges);

    // Emits everything still unused as (A+,A-)-paths of length 1 or 2
    // and empties the ledger.
    std::vector<PathSeq> drain_to_paths();

private:
    const VertexPartition* part_;
    int kappa_;
    std::map<int, std::vector<Edge>> in_, out_;
};

}  // namespace pathdec

#endif
