#include "pathdec/oracle.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace pathdec {
namespace {

// A path decomposition is equivalent to "linking" in-edges to out-edges at
// each vertex: linked edges are consecutive on the same path. Each link
// reduces the part count by one, so pn = m - max links, subject to every
// linked chain staying a simple path. min(d+,d-) summed over vertices
// equals m - ex(D), hence pn = ex(D) + (minimum total link shortfall).
// We search for that minimum shortfall by iterative deepening.
struct LinkSearch {
    int m = 0;
    std::vector<int> edge_tail, edge_head;       // remapped vertex ids
    std::vector<std::vector<int>> ins, outs;     // per-vertex edge ids
    std::vector<int> link_cap;                   // min(d+,d-) per vertex

    // Chains as a union-find forest over edges; roots carry endpoints and
    // the vertex bitmask of the chain.
    std::vector<int> parent;
    std::vector<int> chain_start, chain_end;
    std::vector<std::uint64_t> chain_mask;
    std::vector<bool> out_taken;

    struct MergeRecord {
        int root_a, root_b, old_end;
        std::uint64_t old_mask;
    };
    std::vector<MergeRecord> trail;

    explicit LinkSearch(const Digraph& d) {
        std::map<int, int> remap;
        for (const Edge& e : d.edges()) {
            auto id = [&](int v) {
                auto [it, fresh] = remap.try_emplace(v, static_cast<int>(remap.size()));
                (void)fresh;
                return it->second;
            };
            edge_tail.push_back(id(e.tail));
            edge_head.push_back(id(e.head));
        }
        m = static_cast<int>(edge_tail.size());
        int k = static_cast<int>(remap.size());
        ins.resize(k);
        outs.resize(k);
        link_cap.resize(k);
        for (int e = 0; e < m; ++e) {
            outs[edge_tail[e]].push_back(e);
            ins[edge_head[e]].push_back(e);
        }
        for (int v = 0; v < k; ++v)
            link_cap[v] = static_cast<int>(std::min(ins[v].size(), outs[v].size()));
        parent.resize(m);
        chain_start.resize(m);
        chain_end.resize(m);
        chain_mask.resize(m);
        out_taken.assign(m, false);
        for (int e = 0; e < m; ++e) {
            parent[e] = e;
            chain_start[e] = edge_tail[e];
            chain_end[e] = edge_head[e];
            chain_mask[e] = (1ULL << edge_tail[e]) | (1ULL << edge_head[e]);
        }
    }

    int find(int e) const {
        while (parent[e] != e) e = parent[e];
        return e;
    }

    // Link in-edge a to out-edge b at vertex v; false if the merged chain
    // would revisit a vertex.
    bool try_link(int a, int b, int v) {
        int ra = find(a), rb = find(b);
        if ((chain_mask[ra] & chain_mask[rb]) != (1ULL << v)) return false;
        trail.push_back({ra, rb, chain_end[ra], chain_mask[ra]});
        parent[rb] = ra;
        chain_end[ra] = chain_end[rb];
        chain_mask[ra] |= chain_mask[rb];
        return true;
    }

    void undo_link() {
        MergeRecord r = trail.back();
        trail.pop_back();
        parent[r.root_b] = r.root_b;
        chain_end[r.root_a] = r.old_end;
        chain_mask[r.root_a] = r.old_mask;
    }

    bool search_vertex(int v, int slack_left) {
        if (v == static_cast<int>(ins.size())) return true;
        return match_in_edge(v, 0, 0, slack_left);
    }

    // Assign a partner (or none) to ins[v][i]; `linked` counts links made
    // at v so far.
    bool match_in_edge(int v, std::size_t i, int linked, int slack_left) {
        const auto& in_edges = ins[v];
        const auto& out_edges = outs[v];
        if (i == in_edges.size()) {
            int shortfall = link_cap[v] - linked;
            if (shortfall > slack_left) return false;
            return search_vertex(v + 1, slack_left - shortfall);
        }
        // Even matching every remaining in-edge cannot beat this bound.
        int outs_free = 0;
        for (int b : out_edges)
            if (!out_taken[b]) ++outs_free;
        int best_links = linked + std::min(static_cast<int>(in_edges.size() - i), outs_free);
        if (link_cap[v] - best_links > slack_left) return false;

        int a = in_edges[i];
        for (int b : out_edges) {
            if (out_taken[b]) continue;
            if (!try_link(a, b, v)) continue;
            out_taken[b] = true;
            if (match_in_edge(v, i + 1, linked + 1, slack_left)) return true;
            out_taken[b] = false;
            undo_link();
        }
        // Leave ins[v][i] unmatched.
        return match_in_edge(v, i + 1, linked, slack_left);
    }
};

}  // namespace

std::int64_t brute_force_pn(const Digraph& d, int edge_cap) {
    if (edge_cap > kHardEdgeLimit)
        throw std::invalid_argument("brute_force_pn: cap above hard limit of 31 edges");
    if (d.edge_count() > edge_cap)
        throw std::invalid_argument("brute_force_pn: edge count " +
                                    std::to_string(d.edge_count()) + " exceeds cap " +
                                    std::to_string(edge_cap));
    if (d.edge_count() == 0) return 0;
    LinkSearch ls(d);
    std::int64_t ex = total_excess(d);
    int max_slack = 0;
    for (int cap : ls.link_cap) max_slack += cap;
    for (int slack = 0; slack <= max_slack; ++slack)
        if (ls.search_vertex(0, slack)) return ex + slack;
    return ex + max_slack;  // unreachable: full slack always succeeds
}

bool is_consistent(const Digraph& d, int edge_cap) {
    if (edge_cap > kHardEdgeLimit)
        throw std::invalid_argument("is_consistent: cap above hard limit of 31 edges");
    if (d.edge_count() > edge_cap)
        throw std::invalid_argument("is_consistent: edge count exceeds cap");
    if (d.edge_count() == 0) return true;
    LinkSearch ls(d);
    return ls.search_vertex(0, 0);
}

}  // namespace pathdec
