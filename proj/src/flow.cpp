#include "pathdec/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace pathdec {

FlowNetwork::FlowNetwork(int node_count, int source, int sink)
    : source_(source), sink_(sink), adj_(static_cast<std::size_t>(node_count)) {
    if (node_count < 2 || source < 0 || source >= node_count || sink < 0 ||
        sink >= node_count || source == sink)
        throw std::invalid_argument("FlowNetwork: bad node/source/sink arguments");
}

int FlowNetwork::add_arc(int from, int to, std::int64_t cap) {
    if (from < 0 || from >= node_count() || to < 0 || to >= node_count() || from == to)
        throw std::invalid_argument("FlowNetwork::add_arc: bad endpoints");
    if (cap < 0) throw std::invalid_argument("FlowNetwork::add_arc: negative capacity");
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, cap, cap});
    arcs_.push_back({from, 0, 0});
    adj_[static_cast<std::size_t>(from)].push_back(id);
    adj_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
}

std::int64_t FlowNetwork::flow_on(int arc_id) const {
    const Arc& a = arcs_[static_cast<std::size_t>(arc_id)];
    return a.orig - a.cap;
}

bool FlowNetwork::bfs_levels(std::vector<int>& level) const {
    level.assign(adj_.size(), -1);
    std::queue<int> q;
    level[static_cast<std::size_t>(source_)] = 0;
    q.push(source_);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int id : adj_[static_cast<std::size_t>(v)]) {
            const Arc& a = arcs_[static_cast<std::size_t>(id)];
            if (a.cap > 0 && level[static_cast<std::size_t>(a.to)] < 0) {
                level[static_cast<std::size_t>(a.to)] = level[static_cast<std::size_t>(v)] + 1;
                q.push(a.to);
            }
        }
    }
    return level[static_cast<std::size_t>(sink_)] >= 0;
}

std::int64_t FlowNetwork::dfs_augment(int v, std::int64_t limit, const std::vector<int>& level,
                                      std::vector<std::size_t>& next) {
    if (v == sink_) return limit;
    std::int64_t pushed = 0;
    auto& ids = adj_[static_cast<std::size_t>(v)];
    for (std::size_t& i = next[static_cast<std::size_t>(v)]; i < ids.size(); ++i) {
        int id = ids[i];
        Arc& a = arcs_[static_cast<std::size_t>(id)];
        if (a.cap <= 0 || level[static_cast<std::size_t>(a.to)] !=
                              level[static_cast<std::size_t>(v)] + 1)
            continue;
        std::int64_t got = dfs_augment(a.to, std::min(limit - pushed, a.cap), level, next);
        if (got > 0) {
            a.cap -= got;
            arcs_[static_cast<std::size_t>(id ^ 1)].cap += got;
            pushed += got;
            if (pushed == limit) return pushed;
        }
    }
    return pushed;
}

std::int64_t FlowNetwork::max_flow() {
    std::int64_t total = 0;
    std::vector<int> level;
    std::vector<std::size_t> next;
    while (bfs_levels(level)) {
        next.assign(adj_.size(), 0);
        total += dfs_augment(source_, std::numeric_limits<std::int64_t>::max(), level, next);
    }
    return total;
}

std::vector<bool> FlowNetwork::residual_reachable() const {
    std::vector<bool> seen(adj_.size(), false);
    std::queue<int> q;
    seen[static_cast<std::size_t>(source_)] = true;
    q.push(source_);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int id : adj_[static_cast<std::size_t>(v)]) {
            const Arc& a = arcs_[static_cast<std::size_t>(id)];
            if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
                seen[static_cast<std::size_t>(a.to)] = true;
                q.push(a.to);
            }
        }
    }
    return seen;
}

std::vector<std::vector<int>> FlowNetwork::decompose_unit_flows() const {
    // Remaining per-arc flow to trace through, forward arcs only.
    std::vector<std::int64_t> left(arcs_.size(), 0);
    for (std::size_t id = 0; id < arcs_.size(); id += 2)
        left[id] = arcs_[id].orig - arcs_[id].cap;
    std::vector<std::size_t> cursor(adj_.size(), 0);
    std::vector<std::vector<int>> paths;
    for (;;) {
        std::vector<int> path{source_};
        int v = source_;
        while (v != sink_) {
            auto& i = cursor[static_cast<std::size_t>(v)];
            const auto& ids = adj_[static_cast<std::size_t>(v)];
            while (i < ids.size() &&
                   (ids[i] % 2 != 0 || left[static_cast<std::size_t>(ids[i])] <= 0))
                ++i;
            if (i == ids.size()) break;
            int id = ids[i];
            --left[static_cast<std::size_t>(id)];
            v = arcs_[static_cast<std::size_t>(id)].to;
            path.push_back(v);
        }
        if (v != sink_) {
            if (path.size() > 1)
                throw std::logic_error("decompose_unit_flows: flow is not conserved");
            break;
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

FpNetwork build_fp(const std::vector<std::vector<int>>& cycle_vertices,
                   const std::vector<std::int64_t>& g, const std::map<int, std::int64_t>& h) {
    if (g.size() != cycle_vertices.size())
        throw std::invalid_argument("build_fp: one g value per cycle required");
    // Nodes: 0 source, 1 sink, then cycles, then vertices.
    int c = static_cast<int>(cycle_vertices.size());
    std::map<int, int> vertex_node;
    for (const auto& vs : cycle_vertices)
        for (int v : vs) vertex_node.try_emplace(v, 0);
    int next_node = 2 + c;
    for (auto& [v, node] : vertex_node) node = next_node++;

    FpNetwork fp{FlowNetwork(next_node, 0, 1),
                 {},
                 std::move(vertex_node),
                 std::vector<int>(static_cast<std::size_t>(next_node), -1),
                 std::vector<int>(static_cast<std::size_t>(next_node), -1)};
    fp.cycle_node.resize(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) {
        fp.cycle_node[static_cast<std::size_t>(i)] = 2 + i;
        fp.node_cycle[static_cast<std::size_t>(2 + i)] = i;
        fp.net.add_arc(0, 2 + i, g[static_cast<std::size_t>(i)]);
    }
    for (const auto& [v, node] : fp.vertex_node) fp.node_vertex[static_cast<std::size_t>(node)] = v;
    for (int i = 0; i < c; ++i) {
        std::vector<int> sorted = cycle_vertices[static_cast<std::size_t>(i)];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("build_fp: duplicate vertex within a cycle");
        for (int v : sorted) fp.net.add_arc(2 + i, fp.vertex_node.at(v), 1);
    }
    for (const auto& [v, node] : fp.vertex_node) {
        auto it = h.find(v);
        if (it != h.end() && it->second > 0) fp.net.add_arc(node, 1, it->second);
    }
    return fp;
}

std::vector<std::vector<int>> FpNetwork::assigned_vertices() const {
    std::vector<std::vector<int>> out(cycle_node.size());
    for (const auto& path : net.decompose_unit_flows()) {
        if (path.size() != 4)
            throw std::logic_error("FpNetwork: unit flow is not source-cycle-vertex-sink");
        int ci = node_cycle[static_cast<std::size_t>(path[1])];
        int v = node_vertex[static_cast<std::size_t>(path[2])];
        if (ci < 0 || v < 0) throw std::logic_error("FpNetwork: malformed unit flow");
        out[static_cast<std::size_t>(ci)].push_back(v);
    }
    return out;
}

}  // namespace pathdec
