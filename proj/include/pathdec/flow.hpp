#ifndef PATHDEC_FLOW_HPP
#define PATHDEC_FLOW_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "pathdec/digraph.hpp"

namespace pathdec {

// Integer-capacity flow network with a fixed source and sink. Arcs are
// stored in residual pairs (arc i and i^1 are each other's reverse), so
// `cap` is the remaining residual capacity; flow_on() recovers the flow
// on a forward arc. All operations are deterministic: arcs are scanned
// in insertion order.
class FlowNetwork {
public:
    struct Arc {
        int to = 0;
        std::int64_t cap = 0;   // remaining residual capacity
        std::int64_t orig = 0;  // capacity at creation (0 for reverse arcs)
    };

    FlowNetwork(int node_count, int source, int sink);

    int node_count() const { return static_cast<int>(adj_.size()); }
    int source() const { return source_; }
    int sink() const { return sink_; }

    // Returns the forward arc id (even; its reverse is id+1).
    int add_arc(int from, int to, std::int64_t cap);

    std::int64_t flow_on(int arc_id) const;
    const Arc& arc(int arc_id) const { return arcs_[static_cast<std::size_t>(arc_id)]; }
    const std::vector<int>& arcs_at(int node) const {
        return adj_[static_cast<std::size_t>(node)];
    }

    // Maximum s-t flow (Dinic). Callable once per network state; further
    // calls return 0 since the network keeps its residual capacities.
    std::int64_t max_flow();

    // Nodes reachable from the source in the residual network.
    std::vector<bool> residual_reachable() const;

    // Splits the current flow into unit s-t paths, each a node sequence
    // starting at source and ending at sink. Does not change the network.
    std::vector<std::vector<int>> decompose_unit_flows() const;

private:
    bool bfs_levels(std::vector<int>& level) const;
    std::int64_t dfs_augment(int v, std::int64_t limit, const std::vector<int>& level,
                             std::vector<std::size_t>& next);

    int source_, sink_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adj_;
};

// The assignment network over a cycle family: source -> cycle i with
// capacity g[i], cycle i -> vertex v (unit) for each v in
// cycle_vertices[i], vertex v -> sink with capacity h.at(v). Vertices
// absent from h get no sink arc.
struct FpNetwork {
    FlowNetwork net;
    std::vector<int> cycle_node;   // per cycle index
    std::map<int, int> vertex_node;
    std::vector<int> node_cycle;   // node -> cycle index, -1 otherwise
    std::vector<int> node_vertex;  // node -> graph vertex, -1 otherwise

    // Per cycle, the vertices its unit flows were routed through.
    // Meaningful after net.max_flow().
    std::vector<std::vector<int>> assigned_vertices() const;
};

FpNetwork build_fp(const std::vector<std::vector<int>>& cycle_vertices,
                   const std::vector<std::int64_t>& g, const std::map<int, std::int64_t>& h);

}  // namespace pathdec

#endif
