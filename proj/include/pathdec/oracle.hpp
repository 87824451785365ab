#ifndef PATHDEC_ORACLE_HPP
#define PATHDEC_ORACLE_HPP

#include <cstdint>

#include "pathdec/digraph.hpp"

namespace pathdec {

inline constexpr int kDefaultOracleEdgeCap = 14;

// Absolute cap: the search tracks path vertex sets in 64-bit masks, which
// bounds the number of edges it can handle.
inline constexpr int kHardEdgeLimit = 31;

// Exact minimum number of paths partitioning E(D), by exhaustive search.
// Refuses (throws) when e(D) exceeds the cap; no silent approximation.
std::int64_t brute_force_pn(const Digraph& d, int edge_cap = kDefaultOracleEdgeCap);

// pn(D) == ex(D)?  Cheaper than brute_force_pn: only the zero-slack level
// of the search is needed.
bool is_consistent(const Digraph& d, int edge_cap = kDefaultOracleEdgeCap);

}  // namespace pathdec

#endif
