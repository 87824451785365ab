#ifndef PATHDEC_ABSORPTION_HPP
#define PATHDEC_ABSORPTION_HPP

#include <map>
#include <string>
#include <vector>

#include "pathdec/absorber.hpp"
#include "pathdec/digraph.hpp"

namespace pathdec {

// A precondition of one of the absorption procedures failed at runtime.
// `stage` names the procedure, `witness` the violated requirement.
struct AbsorbError : std::runtime_error {
    std::string stage;
    std::string witness;
    AbsorbError(std::string stage, std::string witness);
};

// Result of one kernel application: two edge-disjoint paths starting in
// A+ and ending in A-, the two owning vertices, and the structure edges
// consumed at each of them.
struct KernelResult {
    PathSeq p1, p2;
    int v1 = -1, v2 = -1;
    std::vector<Edge> e1, e2;
};

// Merges one cycle with two reserved edges into two (A+,A-)-paths.
// `s` is the set of usable vertices on the cycle; `f` lists the reserved
// edges currently available at each of them (each edge incident to its
// vertex, oriented per the vertex's side). Handles both shapes: a pair of
// edges with endpoints off the cycle, and a crossing pair on the cycle.
KernelResult absorb_one_cycle(const CycleSeq& c, const std::vector<int>& s,
                              const std::map<int, std::vector<Edge>>& f,
                              const VertexPartition& part);

// Merges a (v1,v2)-path and a (v2,v1)-path with reserved edges at v1 and
// v2 into two (A+,A-)-paths. Consumes one reserved edge at an A-dot
// vertex and an in/out pair at an A0 vertex, chosen from the ledger
// pools; the ledger itself is not modified (the caller consumes).
KernelResult absorb_pair(const PathSeq& p12, const PathSeq& p21, int v1, int v2,
                         const AvailabilityLedger& ledger, const VertexPartition& part);

struct AbsorptionOutcome {
    std::vector<PathSeq> paths;
    std::vector<CycleSeq> leftover_cycles;  // promoted cycles (short stage only)
    std::vector<std::string> warnings;      // tracked-invariant breaches, non-fatal
};

// Absorbs cycles that meet many high-excess vertices, two reserved edges
// per cycle, then emits unused structure edges as paths. Expects the
// 7*kappa-1 split of the high-excess structure.
AbsorptionOutcome absorb_long(const std::vector<CycleSeq>& cycles, const AbsorbingStructure& s,
                              const VertexPartition& part, int kappa,
                              std::vector<std::string>* trace = nullptr);

// Absorbs mid-range cycles by first solving the cycle-to-vertex
// assignment flow (source capacity ceil(ell/kappa)+1 per cycle, sink
// capacity kappa per vertex) on the cycles projected onto the
// high-excess set, then absorbing each cycle at its assigned vertices.
// Expects the 2*kappa+1 split. Fails structurally if the flow does not
// saturate the source.
AbsorptionOutcome absorb_medium(const std::vector<CycleSeq>& cycles,
                                const AbsorbingStructure& s, const VertexPartition& part,
                                int kappa, std::vector<std::string>* trace = nullptr);

// Multi-round absorption of cycles meeting at most kappa high-excess
// vertices, using the merged 3*kappa structure over all vertices. Each
// round solves the assignment flow with source capacity 2 and sink
// capacity kappa, splits cycles by how many of their assigned vertices
// are unreachable in the residual network, absorbs those with two such
// vertices directly and unreachable-intersecting pairs jointly, re-peels
// the Eulerian remainder, and promotes any resulting cycle with more
// than kappa high-excess vertices into leftover_cycles. `c_prime` feeds
// the tracked per-round cycle-count bound (breaches are warnings).
AbsorptionOutcome absorb_short(const std::vector<CycleSeq>& cycles, const AbsorbingStructure& s,
                               const VertexPartition& part, int kappa, double c_prime,
                               std::vector<std::string>* trace = nullptr);

}  // namespace pathdec

#endif
