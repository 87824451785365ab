#ifndef PATHDEC_EULER_CYCLES_HPP
#define PATHDEC_EULER_CYCLES_HPP

#include <vector>

#include "pathdec/digraph.hpp"

namespace pathdec {

// Partitions the edges of a balanced (every vertex has equal in- and
// out-degree) digraph into directed cycles. Deterministic: the walk
// always follows the unused out-edge with the smallest head, starting
// from the smallest vertex with edges left. Throws std::invalid_argument
// naming an unbalanced vertex if D is not balanced.
std::vector<CycleSeq> peel_cycles(const Digraph& d);

// Cycles bucketed by ell(C) = |V(C) intersect A-dot|:
//   short:  ell <= kappa
//   long:   ell >= big_n / kappa
//   medium: in between
struct CycleClasses {
    std::vector<CycleSeq> short_cycles;
    std::vector<CycleSeq> medium_cycles;
    std::vector<CycleSeq> long_cycles;
};

CycleClasses classify_cycles(const std::vector<CycleSeq>& cycles, const VertexPartition& part,
                             double kappa, double big_n);

// ell(C): number of distinct vertices of C lying in A-dot.
int dot_vertex_count(const CycleSeq& c, const VertexPartition& part);

}  // namespace pathdec

#endif
