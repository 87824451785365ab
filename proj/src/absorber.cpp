#include "pathdec/absorber.hpp"

#include <algorithm>

#include "pathdec/flow.hpp"
#include "pathdec/rng.hpp"

namespace pathdec {

std::vector<Edge> AbsorbingStructure::all_edges() const {
    std::vector<Edge> out;
    for (const auto& [v, edges] : assign) out.insert(out.end(), edges.begin(), edges.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t AbsorbingStructure::edge_count() const {
    std::int64_t total = 0;
    for (const auto& [v, edges] : assign) total += static_cast<std::int64_t>(edges.size());
    return total;
}

std::int64_t AbsorbingStructure::incidence(int v) const {
    std::int64_t count = 0;
    for (const auto& [z, edges] : assign)
        for (const Edge& e : edges)
            if (e.tail == v || e.head == v) ++count;
    return count;
}

StructureBuildError::StructureBuildError(int vertex, std::int64_t candidates,
                                         std::int64_t needed)
    : std::runtime_error("structure build starved at vertex " + std::to_string(vertex) + ": " +
                         std::to_string(candidates) + " usable candidate edges, " +
                         std::to_string(needed) + " needed"),
      vertex(vertex),
      candidates(candidates),
      needed(needed) {}

namespace {

// Greedy quota filler shared by both builders: for each domain vertex (in
// the given order) pick `quota` unclaimed candidate edges, preferring the
// least-loaded other endpoint, without pushing any capped vertex past
// `cap`. Returns the starving vertex on failure, -1 on success.
struct GreedyFill {
    std::vector<std::int64_t> incidence;
    std::set<Edge> claimed;
    std::int64_t failed_candidates = 0;

    int run(const std::vector<int>& order,
            const std::map<int, std::vector<Edge>>& candidates, int quota,
            std::int64_t cap, const std::vector<bool>& capped,
            std::map<int, std::vector<Edge>>& out) {
        for (int v : order) {
            std::vector<Edge> pool = candidates.at(v);
            std::stable_sort(pool.begin(), pool.end(), [&](const Edge& a, const Edge& b) {
                int oa = a.tail == v ? a.head : a.tail;
                int ob = b.tail == v ? b.head : b.tail;
                if (incidence[static_cast<std::size_t>(oa)] !=
                    incidence[static_cast<std::size_t>(ob)])
                    return incidence[static_cast<std::size_t>(oa)] <
                           incidence[static_cast<std::size_t>(ob)];
                return std::pair(a.head, a.tail) < std::pair(b.head, b.tail);
            });
            std::vector<Edge>& chosen = out[v];
            for (const Edge& e : pool) {
                if (static_cast<int>(chosen.size()) == quota) break;
                if (claimed.count(e)) continue;
                bool tail_full = capped[static_cast<std::size_t>(e.tail)] &&
                                 incidence[static_cast<std::size_t>(e.tail)] + 1 > cap;
                bool head_full = capped[static_cast<std::size_t>(e.head)] &&
                                 incidence[static_cast<std::size_t>(e.head)] + 1 > cap;
                if (tail_full || head_full) continue;
                chosen.push_back(e);
                claimed.insert(e);
                ++incidence[static_cast<std::size_t>(e.tail)];
                ++incidence[static_cast<std::size_t>(e.head)];
            }
            if (static_cast<int>(chosen.size()) < quota) {
                failed_candidates = static_cast<std::int64_t>(chosen.size());
                return v;
            }
        }
        return -1;
    }
};

}  // namespace

AbsorbingStructure build_dotA_structure(const Digraph& d, const VertexPartition& part,
                                        int kappa, std::uint64_t seed) {
    if (kappa < 1) throw std::invalid_argument("build_dotA_structure: kappa must be >= 1");
    int n = d.vertex_count();
    int t = 12 * kappa;
    std::int64_t cap = 150LL * kappa;

    std::map<int, std::vector<Edge>> candidates;
    for (int v : part.a_plus()) {
        auto& pool = candidates[v];
        for (const auto& [w, mult] : d.out_neighbors(v))
            if (part.membership(w) == VertexPartition::Part::Minus)
                for (int i = 0; i < mult; ++i) pool.push_back({v, w});
    }
    for (int v : part.a_minus()) {
        auto& pool = candidates[v];
        for (const auto& [u, mult] : d.in_neighbors(v))
            if (part.membership(u) == VertexPartition::Part::Plus)
                for (int i = 0; i < mult; ++i) pool.push_back({u, v});
    }

    std::vector<bool> capped(static_cast<std::size_t>(n), false);
    for (int v : part.a_dot()) capped[static_cast<std::size_t>(v)] = true;

    // Scarce vertices claim first; later attempts reshuffle the order.
    std::vector<int> order = part.a_dot();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return candidates.at(a).size() < candidates.at(b).size();
    });

    int worst_vertex = -1;
    std::int64_t worst_count = 0;
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<int> this_order = order;
        if (attempt > 0) {
            Rng rng(Rng::split(seed, 0x646f7400ULL + static_cast<std::uint64_t>(attempt)));
            rng.shuffle(this_order);
        }
        GreedyFill fill;
        fill.incidence.assign(static_cast<std::size_t>(n), 0);
        std::map<int, std::vector<Edge>> assign;
        int starving = fill.run(this_order, candidates, t, cap, capped, assign);
        if (starving < 0) {
            AbsorbingStructure s;
            s.t = t;
            s.domain = part.a_dot();
            s.assign = std::move(assign);
            return s;
        }
        worst_vertex = starving;
        worst_count = fill.failed_candidates;
    }

    // Exact fallback when the greedy passes all starve: every copy of a
    // candidate edge becomes a unit slot claimable by either endpoint, and
    // a max-flow assignment fills the quotas whenever that is feasible at
    // all. The incidence cap is re-checked afterwards.
    {
        std::vector<int> dot = part.a_dot();
        std::sort(dot.begin(), dot.end());
        std::map<int, int> vnode;
        int next = 2;
        for (int v : dot) vnode[v] = next++;
        std::int64_t slot_count = 0;
        for (int v : part.a_plus())
            slot_count += static_cast<std::int64_t>(candidates.at(v).size());
        FlowNetwork net(next + static_cast<int>(slot_count), 0, 1);
        for (int v : dot) net.add_arc(0, vnode.at(v), t);
        int slot = next;
        // arc id -> (owner candidate, edge) for both endpoints of each slot
        std::vector<std::tuple<int, int, Edge>> claims;  // (arc, owner, edge)
        std::vector<int> plus_sorted = part.a_plus();
        std::sort(plus_sorted.begin(), plus_sorted.end());
        for (int u : plus_sorted) {
            std::vector<Edge> pool = candidates.at(u);
            std::sort(pool.begin(), pool.end());
            for (const Edge& e : pool) {
                claims.emplace_back(net.add_arc(vnode.at(e.tail), slot, 1), e.tail, e);
                claims.emplace_back(net.add_arc(vnode.at(e.head), slot, 1), e.head, e);
                net.add_arc(slot, 1, 1);
                ++slot;
            }
        }
        std::int64_t demand = static_cast<std::int64_t>(dot.size()) * t;
        if (net.max_flow() == demand) {
            std::map<int, std::vector<Edge>> assign;
            for (int v : dot) assign[v];
            for (const auto& [arc, owner, e] : claims)
                if (net.flow_on(arc) == 1) assign[owner].push_back(e);
            std::vector<std::int64_t> incidence(static_cast<std::size_t>(n), 0);
            for (const auto& [v, edges] : assign)
                for (const Edge& e : edges) {
                    ++incidence[static_cast<std::size_t>(e.tail)];
                    ++incidence[static_cast<std::size_t>(e.head)];
                }
            bool within_cap = true;
            for (int v : dot)
                if (incidence[static_cast<std::size_t>(v)] > cap) within_cap = false;
            if (within_cap) {
                AbsorbingStructure s;
                s.t = t;
                s.domain = dot;
                s.assign = std::move(assign);
                return s;
            }
        }
    }
    throw StructureBuildError(worst_vertex, worst_count, t);
}

AbsorbingStructure build_A0_structure(const Digraph& d, const VertexPartition& part, int kappa,
                                      std::uint64_t seed, const std::set<Edge>& forbidden) {
    if (kappa < 1) throw std::invalid_argument("build_A0_structure: kappa must be >= 1");
    int n = d.vertex_count();
    int t = 3 * kappa;
    std::int64_t cap = 5LL * kappa;

    AbsorbingStructure s;
    s.t = t;
    s.domain = part.a_zero();
    if (s.domain.empty()) return s;

    // In- and out-quotas are filled as two passes over the same incidence
    // budget; a synthetic ordering interleaves them (vertex v appears as
    // v for the in-quota and as v+n for the out-quota).
    std::map<int, std::vector<Edge>> candidates;
    for (int v : part.a_zero()) {
        auto& in_pool = candidates[v];
        for (const auto& [u, mult] : d.in_neighbors(v))
            if (part.membership(u) == VertexPartition::Part::Plus && !forbidden.count({u, v}))
                for (int i = 0; i < mult; ++i) in_pool.push_back({u, v});
        auto& out_pool = candidates[v + n];
        for (const auto& [w, mult] : d.out_neighbors(v))
            if (part.membership(w) == VertexPartition::Part::Minus && !forbidden.count({v, w}))
                for (int i = 0; i < mult; ++i) out_pool.push_back({v, w});
    }

    std::vector<bool> capped(static_cast<std::size_t>(n), false);
    for (int v : part.a_dot()) capped[static_cast<std::size_t>(v)] = true;

    std::vector<int> order;
    for (int v : part.a_zero()) {
        order.push_back(v);
        order.push_back(v + n);
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return candidates.at(a).size() < candidates.at(b).size();
    });

    int worst_vertex = -1;
    std::int64_t worst_count = 0;
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<int> this_order = order;
        if (attempt > 0) {
            Rng rng(Rng::split(seed, 0x7a30ULL + static_cast<std::uint64_t>(attempt)));
            rng.shuffle(this_order);
        }
        GreedyFill fill;
        fill.incidence.assign(static_cast<std::size_t>(n), 0);
        std::map<int, std::vector<Edge>> raw;
        int starving = -1;
        for (int key : this_order) {
            std::map<int, std::vector<Edge>> one;
            // GreedyFill keys pools by the synthetic id; adapt per key.
            starving = fill.run({key}, candidates, t, cap, capped, one);
            if (starving >= 0) break;
            auto& dest = raw[key >= n ? key - n : key];
            auto& got = one[key];
            dest.insert(dest.end(), got.begin(), got.end());
        }
        if (starving < 0) {
            s.assign = std::move(raw);
            for (int v : s.domain) s.assign.try_emplace(v);  // empty ok only if t==0
            return s;
        }
        worst_vertex = starving >= n ? starving - n : starving;
        worst_count = fill.failed_candidates;
    }
    throw StructureBuildError(worst_vertex, worst_count, t);
}

std::array<AbsorbingStructure, 3> split_structure(const AbsorbingStructure& s, int kappa) {
    int t = 12 * kappa;
    if (s.t != t)
        throw std::invalid_argument("split_structure: structure multiplicity " +
                                    std::to_string(s.t) + " is not 12*kappa");
    std::array<int, 3> sizes{7 * kappa - 1, 2 * kappa + 1, 3 * kappa};
    std::array<AbsorbingStructure, 3> out;
    for (int i = 0; i < 3; ++i) {
        out[static_cast<std::size_t>(i)].t = sizes[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)].domain = s.domain;
    }
    for (const auto& [v, edges] : s.assign) {
        if (static_cast<int>(edges.size()) != t)
            throw std::invalid_argument("split_structure: vertex " + std::to_string(v) +
                                        " has " + std::to_string(edges.size()) +
                                        " edges, expected " + std::to_string(t));
        std::vector<Edge> sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        auto it = sorted.begin();
        for (int i = 0; i < 3; ++i) {
            auto& dest = out[static_cast<std::size_t>(i)].assign[v];
            dest.assign(it, it + sizes[static_cast<std::size_t>(i)]);
            it += sizes[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

AbsorbingStructure merge_structures(const AbsorbingStructure& a, const AbsorbingStructure& b) {
    if (a.assign.empty()) {
        AbsorbingStructure out = b;
        return out;
    }
    if (b.assign.empty()) return a;
    if (a.t != b.t)
        throw std::invalid_argument("merge_structures: multiplicities differ (" +
                                    std::to_string(a.t) + " vs " + std::to_string(b.t) + ")");
    AbsorbingStructure out;
    out.t = a.t;
    out.assign = a.assign;
    for (const auto& [v, edges] : b.assign)
        if (!out.assign.emplace(v, edges).second)
            throw std::invalid_argument("merge_structures: domains overlap at vertex " +
                                        std::to_string(v));
    std::set<Edge> seen;
    for (const auto& [v, edges] : out.assign)
        for (const Edge& e : edges)
            if (!seen.insert(e).second)
                throw std::invalid_argument("merge_structures: edge " + std::to_string(e.tail) +
                                            "->" + std::to_string(e.head) + " appears twice");
    out.domain.reserve(a.domain.size() + b.domain.size());
    std::merge(a.domain.begin(), a.domain.end(), b.domain.begin(), b.domain.end(),
               std::back_inserter(out.domain));
    return out;
}

ValidationReport validate_structure(const AbsorbingStructure& s, const Digraph& d,
                                    const VertexPartition& part) {
    auto fail = [](const std::string& msg) { return ValidationReport{false, msg}; };
    std::set<int> dom(s.domain.begin(), s.domain.end());
    if (dom.size() != s.domain.size()) return fail("domain has duplicate vertices");
    for (const auto& [v, edges] : s.assign)
        if (!dom.count(v))
            return fail("assignment at non-domain vertex " + std::to_string(v));
    std::set<Edge> seen;
    for (int z : s.domain) {
        auto it = s.assign.find(z);
        const std::vector<Edge> empty;
        const std::vector<Edge>& edges = it == s.assign.end() ? empty : it->second;
        int in_from_plus = 0, out_to_minus = 0;
        for (const Edge& e : edges) {
            if (!d.has_edge(e.tail, e.head))
                return fail("edge " + std::to_string(e.tail) + "->" + std::to_string(e.head) +
                            " at vertex " + std::to_string(z) + " is not in the digraph");
            if (!seen.insert(e).second)
                return fail("edge " + std::to_string(e.tail) + "->" + std::to_string(e.head) +
                            " assigned twice");
            if (e.head == z && part.membership(e.tail) == VertexPartition::Part::Plus)
                ++in_from_plus;
            else if (e.tail == z && part.membership(e.head) == VertexPartition::Part::Minus)
                ++out_to_minus;
            else
                return fail("edge " + std::to_string(e.tail) + "->" + std::to_string(e.head) +
                            " has the wrong shape for vertex " + std::to_string(z));
        }
        switch (part.membership(z)) {
            case VertexPartition::Part::Plus:
                if (out_to_minus != s.t || in_from_plus != 0)
                    return fail("vertex " + std::to_string(z) + " needs exactly " +
                                std::to_string(s.t) + " out-edges into the deficit side, has " +
                                std::to_string(out_to_minus));
                break;
            case VertexPartition::Part::Minus:
                if (in_from_plus != s.t || out_to_minus != 0)
                    return fail("vertex " + std::to_string(z) + " needs exactly " +
                                std::to_string(s.t) + " in-edges from the surplus side, has " +
                                std::to_string(in_from_plus));
                break;
            case VertexPartition::Part::Zero:
                if (in_from_plus != s.t || out_to_minus != s.t)
                    return fail("vertex " + std::to_string(z) + " needs " + std::to_string(s.t) +
                                " in- and out-edges, has " + std::to_string(in_from_plus) +
                                "/" + std::to_string(out_to_minus));
                break;
        }
    }
    return {};
}

AvailabilityLedger::AvailabilityLedger(const AbsorbingStructure& s, const VertexPartition& part,
                                       int kappa)
    : part_(&part), kappa_(kappa) {
    for (int v : s.domain) {
        in_[v];
        out_[v];
    }
    for (const auto& [v, edges] : s.assign)
        for (const Edge& e : edges) {
            if (e.head == v)
                in_[v].push_back(e);
            else
                out_[v].push_back(e);
        }
    for (auto& [v, edges] : in_) std::sort(edges.begin(), edges.end());
    for (auto& [v, edges] : out_) std::sort(edges.begin(), edges.end());
}

int AvailabilityLedger::available(int v) const {
    switch (part_->membership(v)) {
        case VertexPartition::Part::Plus:
            return static_cast<int>(out_.at(v).size());
        case VertexPartition::Part::Minus:
            return static_cast<int>(in_.at(v).size());
        case VertexPartition::Part::Zero:
            return static_cast<int>(std::min(in_.at(v).size(), out_.at(v).size()));
    }
    return 0;
}

void AvailabilityLedger::consume(int v, const std::vector<Edge>& edges) {
    for (const Edge& e : edges) {
        std::vector<Edge>& pool = e.head == v ? in_.at(v) : out_.at(v);
        if (e.head != v && e.tail != v)
            throw std::logic_error("ledger consume: edge not incident to its vertex");
        auto it = std::find(pool.begin(), pool.end(), e);
        if (it == pool.end())
            throw std::logic_error("ledger consume: edge " + std::to_string(e.tail) + "->" +
                                   std::to_string(e.head) + " not available at vertex " +
                                   std::to_string(v));
        pool.erase(it);
    }
    if (part_->membership(v) == VertexPartition::Part::Zero &&
        in_.at(v).size() != out_.at(v).size())
        throw std::logic_error("ledger consume: unbalanced through-vertex " + std::to_string(v));
}

std::vector<PathSeq> AvailabilityLedger::drain_to_paths() {
    std::vector<PathSeq> paths;
    for (auto& [v, ins] : in_) {
        std::vector<Edge>& outs = out_.at(v);
        switch (part_->membership(v)) {
            case VertexPartition::Part::Plus:
                for (const Edge& e : outs) paths.push_back({{e.tail, e.head}});
                break;
            case VertexPartition::Part::Minus:
                for (const Edge& e : ins) paths.push_back({{e.tail, e.head}});
                break;
            case VertexPartition::Part::Zero:
                if (ins.size() != outs.size())
                    throw std::logic_error("ledger drain: unbalanced through-vertex " +
                                           std::to_string(v));
                for (std::size_t i = 0; i < ins.size(); ++i)
                    paths.push_back({{ins[i].tail, v, outs[i].head}});
                break;
        }
        ins.clear();
        outs.clear();
    }
    return paths;
}

}  // namespace pathdec
