#include "pathdec/absorption.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pathdec/euler_cycles.hpp"
#include "pathdec/flow.hpp"

namespace pathdec {

AbsorbError::AbsorbError(std::string stage_, std::string witness_)
    : std::runtime_error(stage_ + ": " + witness_),
      stage(std::move(stage_)),
      witness(std::move(witness_)) {}

namespace {

// Interior vertices of c as position map; positions follow orientation.
std::map<int, int> cycle_positions(const CycleSeq& c) {
    std::map<int, int> pos;
    for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i)
        pos.emplace(c.vertices[i], static_cast<int>(i));
    return pos;
}

// Vertex sequence along c from a to b inclusive (a != b, both on c).
std::vector<int> cycle_arc(const CycleSeq& c, const std::map<int, int>& pos, int a, int b) {
    int len = static_cast<int>(c.vertices.size()) - 1;
    int i = pos.at(a);
    std::vector<int> out{a};
    while (out.back() != b) {
        i = (i + 1) % len;
        out.push_back(c.vertices[static_cast<std::size_t>(i)]);
        if (static_cast<int>(out.size()) > len + 1)
            throw std::logic_error("cycle_arc: endpoint not on cycle");
    }
    return out;
}

int other_endpoint(const Edge& e, int v) { return e.tail == v ? e.head : e.tail; }

std::string candidate_diagnostics(const std::vector<int>& s,
                                  const std::map<int, std::vector<Edge>>& f) {
    std::string d = "per-vertex candidates:";
    int shown = 0;
    for (int v : s) {
        auto it = f.find(v);
        d += " " + std::to_string(v) + "=" +
             std::to_string(it == f.end() ? 0 : it->second.size());
        if (++shown == 20) {
            d += " ...";
            break;
        }
    }
    return d;
}

}  // namespace

KernelResult absorb_one_cycle(const CycleSeq& c, const std::vector<int>& s,
                              const std::map<int, std::vector<Edge>>& f,
                              const VertexPartition& part) {
    if (!c.valid()) throw std::invalid_argument("absorb_one_cycle: malformed cycle");
    std::map<int, int> pos = cycle_positions(c);
    for (int v : s)
        if (!pos.count(v))
            throw std::invalid_argument("absorb_one_cycle: vertex " + std::to_string(v) +
                                        " not on the cycle");

    // First shape: two usable vertices each owning an edge whose other
    // endpoint is off the cycle.
    struct OffEdge {
        int v;
        Edge e;
    };
    std::vector<OffEdge> off;
    for (int v : s) {
        auto it = f.find(v);
        if (it == f.end()) continue;
        std::vector<Edge> sorted = it->second;
        std::sort(sorted.begin(), sorted.end());
        for (const Edge& e : sorted)
            if (!pos.count(other_endpoint(e, v))) {
                off.push_back({v, e});
                break;
            }
    }
    if (off.size() >= 2) {
        const OffEdge &a = off[0], &b = off[1];
        bool a_out = a.e.tail == a.v;  // edge leaves the owner (owner on surplus side)
        bool b_out = b.e.tail == b.v;
        KernelResult res;
        res.v1 = a.v;
        res.v2 = b.v;
        res.e1 = {a.e};
        res.e2 = {b.e};
        if (!a_out) res.p1.vertices.push_back(a.e.tail);
        auto arc1 = cycle_arc(c, pos, a.v, b.v);
        res.p1.vertices.insert(res.p1.vertices.end(), arc1.begin(), arc1.end());
        if (b_out) res.p1.vertices.push_back(b.e.head);
        if (!b_out) res.p2.vertices.push_back(b.e.tail);
        auto arc2 = cycle_arc(c, pos, b.v, a.v);
        res.p2.vertices.insert(res.p2.vertices.end(), arc2.begin(), arc2.end());
        if (a_out) res.p2.vertices.push_back(a.e.head);
        return res;
    }

    // Crossing shape: two reserved edges fully on the cycle whose four
    // endpoints alternate around it.
    std::vector<int> s_on;
    for (int v : s) {
        auto it = f.find(v);
        if (it == f.end() || it->second.empty()) continue;
        bool all_on = true;
        for (const Edge& e : it->second)
            if (!pos.count(other_endpoint(e, v))) all_on = false;
        if (all_on) s_on.push_back(v);
    }
    for (std::size_t i = 0; i < s_on.size(); ++i)
        for (std::size_t j = i + 1; j < s_on.size(); ++j) {
            int va = s_on[i], vb = s_on[j];
            for (const Edge& ea : f.at(va))
                for (const Edge& eb : f.at(vb)) {
                    std::set<int> ends{ea.tail, ea.head, eb.tail, eb.head};
                    if (ends.size() != 4) continue;
                    // Alternation: exactly one endpoint of eb lies strictly
                    // inside the forward arc from ea.tail to ea.head.
                    auto inside = [&](int from, int to, int x) {
                        int len = static_cast<int>(c.vertices.size()) - 1;
                        int rel_to = (pos.at(to) - pos.at(from) + len) % len;
                        int rel_x = (pos.at(x) - pos.at(from) + len) % len;
                        return rel_x > 0 && rel_x < rel_to;
                    };
                    bool t_in = inside(ea.tail, ea.head, eb.tail);
                    bool h_in = inside(ea.tail, ea.head, eb.head);
                    if (t_in == h_in) continue;
                    // Label the four endpoints w,x,y,z in cyclic order so
                    // that the edges run w->y and z->x.
                    std::vector<int> cyc(ends.begin(), ends.end());
                    std::sort(cyc.begin(), cyc.end(),
                              [&](int u, int v) { return pos.at(u) < pos.at(v); });
                    for (int r = 0; r < 4; ++r) {
                        int w = cyc[static_cast<std::size_t>(r)];
                        int x = cyc[static_cast<std::size_t>((r + 1) % 4)];
                        int y = cyc[static_cast<std::size_t>((r + 2) % 4)];
                        int z = cyc[static_cast<std::size_t>((r + 3) % 4)];
                        Edge wy{w, y}, zx{z, x};
                        if (!((wy == ea && zx == eb) || (wy == eb && zx == ea))) continue;
                        KernelResult res;
                        res.v1 = va;
                        res.v2 = vb;
                        res.e1 = {ea};
                        res.e2 = {eb};
                        res.p1.vertices.push_back(w);
                        auto mid = cycle_arc(c, pos, y, z);
                        res.p1.vertices.insert(res.p1.vertices.end(), mid.begin(), mid.end());
                        res.p1.vertices.push_back(x);
                        res.p2.vertices = cycle_arc(c, pos, z, y);
                        return res;
                    }
                }
        }
    throw AbsorbError("absorb_one_cycle",
                      "no usable vertex pair on a cycle with " +
                          std::to_string(pos.size()) + " vertices (|S|=" +
                          std::to_string(s.size()) + "); " + candidate_diagnostics(s, f));
}

KernelResult absorb_pair(const PathSeq& p12, const PathSeq& p21, int v1, int v2,
                         const AvailabilityLedger& ledger, const VertexPartition& part) {
    if (p12.vertices.empty() || p21.vertices.empty() || p12.vertices.front() != v1 ||
        p12.vertices.back() != v2 || p21.vertices.front() != v2 || p21.vertices.back() != v1)
        throw std::invalid_argument("absorb_pair: paths do not connect v1 and v2");
    std::set<int> on1(p12.vertices.begin(), p12.vertices.end());
    std::set<int> on2(p21.vertices.begin(), p21.vertices.end());

    KernelResult res;
    res.v1 = v1;
    res.v2 = v2;
    // Per owner: the incoming reserved edge (its tail prepends the path
    // the owner starts) and/or the outgoing one (its head extends the
    // path the owner ends).
    int x1 = -1, y1 = -1, x2 = -1, y2 = -1;
    for (int i = 1; i <= 2; ++i) {
        int v = i == 1 ? v1 : v2;
        const std::set<int>& own = i == 1 ? on1 : on2;      // P_i
        const std::set<int>& other = i == 1 ? on2 : on1;    // P_{3-i}
        std::vector<Edge>& consumed = i == 1 ? res.e1 : res.e2;
        auto side = part.membership(v);
        auto pick = [&](const std::vector<Edge>& pool, bool outgoing,
                        const std::set<int>& avoid) -> Edge {
            for (const Edge& e : pool) {
                int o = outgoing ? e.head : e.tail;
                if (!avoid.count(o)) return e;
            }
            throw AbsorbError("absorb_pair",
                              "vertex " + std::to_string(v) + " has no reserved " +
                                  (outgoing ? "out" : "in") + "-edge clear of the paths (" +
                                  std::to_string(pool.size()) + " in pool)");
        };
        if (side != VertexPartition::Part::Minus) {
            Edge e = pick(ledger.out_edges(v), true, other);
            consumed.push_back(e);
            (i == 1 ? y1 : y2) = e.head;
        }
        if (side != VertexPartition::Part::Plus) {
            Edge e = pick(ledger.in_edges(v), false, own);
            consumed.push_back(e);
            (i == 1 ? x1 : x2) = e.tail;
        }
    }

    if (x1 >= 0) res.p1.vertices.push_back(x1);
    res.p1.vertices.insert(res.p1.vertices.end(), p12.vertices.begin(), p12.vertices.end());
    if (y2 >= 0) res.p1.vertices.push_back(y2);
    if (x2 >= 0) res.p2.vertices.push_back(x2);
    res.p2.vertices.insert(res.p2.vertices.end(), p21.vertices.begin(), p21.vertices.end());
    if (y1 >= 0) res.p2.vertices.push_back(y1);
    return res;
}

namespace {

void trace_event(std::vector<std::string>* trace, const std::string& line) {
    if (trace) trace->push_back(line);
}

// Builds the kernel's per-vertex candidate map from the ledger: the
// reserved edges still available at each vertex of `s`.
std::map<int, std::vector<Edge>> sub_structure(const AvailabilityLedger& ledger,
                                               const std::vector<int>& s,
                                               const VertexPartition& part, int want) {
    std::map<int, std::vector<Edge>> f;
    for (int v : s) {
        const std::vector<Edge>& pool = part.membership(v) == VertexPartition::Part::Plus
                                            ? ledger.out_edges(v)
                                            : ledger.in_edges(v);
        auto& dest = f[v];
        for (const Edge& e : pool) {
            if (static_cast<int>(dest.size()) == want) break;
            dest.push_back(e);
        }
    }
    return f;
}

AbsorptionOutcome absorb_with_selection(
    const std::vector<CycleSeq>& cycles, const AbsorbingStructure& s,
    const VertexPartition& part, int kappa, const char* stage,
    const std::vector<std::vector<int>>* assigned, std::vector<std::string>* trace) {
    AvailabilityLedger ledger(s, part, kappa);
    AbsorptionOutcome out;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const CycleSeq& c = cycles[i];
        int ell = dot_vertex_count(c, part);
        if (ell <= kappa)
            throw AbsorbError(stage, "cycle " + std::to_string(i) + " meets only " +
                                         std::to_string(ell) +
                                         " high-excess vertices (needs more than " +
                                         std::to_string(kappa) + ")");
        std::vector<int> s_c;
        if (assigned) {
            s_c = (*assigned)[i];
            std::sort(s_c.begin(), s_c.end());
            for (int v : s_c)
                if (ledger.available(v) < kappa + 2)
                    throw AbsorbError(stage, "assigned vertex " + std::to_string(v) +
                                                 " of cycle " + std::to_string(i) + " has " +
                                                 std::to_string(ledger.available(v)) +
                                                 " reserved edges left, needs " +
                                                 std::to_string(kappa + 2));
        } else {
            for (std::size_t k = 0; k + 1 < c.vertices.size(); ++k) {
                int v = c.vertices[k];
                if (part.in_dot(v) && ledger.available(v) >= kappa + 2) s_c.push_back(v);
            }
            std::sort(s_c.begin(), s_c.end());
        }
        double need = static_cast<double>(ell) / kappa + 1.0;
        if (static_cast<double>(s_c.size()) < need)
            throw AbsorbError(stage, "cycle " + std::to_string(i) + " has " +
                                         std::to_string(s_c.size()) +
                                         " usable vertices, needs at least " +
                                         std::to_string(need));
        auto f = sub_structure(ledger, s_c, part, kappa + 2);
        KernelResult res = absorb_one_cycle(c, s_c, f, part);
        ledger.consume(res.v1, res.e1);
        ledger.consume(res.v2, res.e2);
        trace_event(trace, std::string(stage) + " cycle=" + std::to_string(i) +
                               " v1=" + std::to_string(res.v1) +
                               " v2=" + std::to_string(res.v2) + " edges=2");
        out.paths.push_back(std::move(res.p1));
        out.paths.push_back(std::move(res.p2));
    }
    auto leftovers = ledger.drain_to_paths();
    out.paths.insert(out.paths.end(), leftovers.begin(), leftovers.end());
    return out;
}

}  // namespace

AbsorptionOutcome absorb_long(const std::vector<CycleSeq>& cycles, const AbsorbingStructure& s,
                              const VertexPartition& part, int kappa,
                              std::vector<std::string>* trace) {
    if (kappa < 1) throw std::invalid_argument("absorb_long: kappa must be >= 1");
    return absorb_with_selection(cycles, s, part, kappa, "absorb_long", nullptr, trace);
}

AbsorptionOutcome absorb_medium(const std::vector<CycleSeq>& cycles,
                                const AbsorbingStructure& s, const VertexPartition& part,
                                int kappa, std::vector<std::string>* trace) {
    if (!cycles.empty() && kappa < 2)
        throw std::invalid_argument("absorb_medium: kappa must be >= 2");
    if (cycles.empty()) {
        AvailabilityLedger ledger(s, part, std::max(kappa, 1));
        AbsorptionOutcome out;
        out.paths = ledger.drain_to_paths();
        return out;
    }

    // Project each cycle onto the high-excess set, then assign
    // ceil(ell/kappa)+1 of those vertices to it by max flow, with no
    // vertex serving more than kappa cycles.
    std::vector<std::vector<int>> projections(cycles.size());
    std::vector<std::int64_t> g(cycles.size());
    std::int64_t g_total = 0;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t k = 0; k + 1 < cycles[i].vertices.size(); ++k)
            if (part.in_dot(cycles[i].vertices[k]))
                projections[i].push_back(cycles[i].vertices[k]);
        std::int64_t ell = static_cast<std::int64_t>(projections[i].size());
        g[i] = (ell + kappa - 1) / kappa + 1;
        g_total += g[i];
    }
    std::map<int, std::int64_t> h;
    for (const auto& proj : projections)
        for (int v : proj) h[v] = kappa;
    FpNetwork fp = build_fp(projections, g, h);
    std::int64_t val = fp.net.max_flow();
    if (val < g_total) {
        auto reach = fp.net.residual_reachable();
        std::int64_t cut_vertices = 0;
        for (const auto& [v, node] : fp.vertex_node)
            if (reach[static_cast<std::size_t>(node)]) ++cut_vertices;
        throw AbsorbError("absorb_medium",
                          "assignment flow saturates " + std::to_string(val) + " of " +
                              std::to_string(g_total) + " units; blocking cut keeps " +
                              std::to_string(cut_vertices) + " vertices on the source side");
    }
    auto assigned = fp.assigned_vertices();
    return absorb_with_selection(cycles, s, part, kappa, "absorb_medium", &assigned, trace);
}

AbsorptionOutcome absorb_short(const std::vector<CycleSeq>& cycles, const AbsorbingStructure& s,
                               const VertexPartition& part, int kappa, double c_prime,
                               std::vector<std::string>* trace) {
    if (kappa < 1) throw std::invalid_argument("absorb_short: kappa must be >= 1");
    int n = part.vertex_count();
    AvailabilityLedger ledger(s, part, kappa);
    AbsorptionOutcome out;
    std::vector<CycleSeq> pool = cycles;

    std::int64_t edges_total = s.edge_count();
    for (const CycleSeq& c : pool) edges_total += static_cast<std::int64_t>(c.length());

    int round = 0;
    while (!pool.empty()) {
        if (++round > 200)
            throw AbsorbError("absorb_short", "round limit reached with " +
                                                  std::to_string(pool.size()) +
                                                  " cycles outstanding");
        // Round bookkeeping: distinct support and per-vertex cycle count.
        std::set<int> support;
        std::map<int, int> through;
        for (const CycleSeq& c : pool)
            for (std::size_t k = 0; k + 1 < c.vertices.size(); ++k) {
                support.insert(c.vertices[k]);
                ++through[c.vertices[k]];
            }
        std::int64_t n_prime = static_cast<std::int64_t>(support.size());
        double cycle_cap = c_prime * static_cast<double>(n_prime) *
                           std::log(static_cast<double>(std::max<std::int64_t>(n_prime, 2)));
        if (static_cast<double>(pool.size()) > cycle_cap)
            out.warnings.push_back("round " + std::to_string(round) + ": " +
                                   std::to_string(pool.size()) +
                                   " cycles exceed the tracked bound " +
                                   std::to_string(cycle_cap));
        for (const auto& [v, d_out] : through)
            if (!(d_out <= ledger.ready(v) || ledger.ready(v) == kappa))
                out.warnings.push_back("round " + std::to_string(round) + ": vertex " +
                                       std::to_string(v) + " carries " + std::to_string(d_out) +
                                       " cycles with only " + std::to_string(ledger.ready(v)) +
                                       " ready paths");

        // Assignment flow: 2 vertices per cycle, at most kappa per vertex.
        std::vector<std::vector<int>> vertex_sets(pool.size());
        for (std::size_t i = 0; i < pool.size(); ++i)
            vertex_sets[i].assign(pool[i].vertices.begin(), pool[i].vertices.end() - 1);
        std::vector<std::int64_t> g(pool.size(), 2);
        std::map<int, std::int64_t> h;
        for (int v : support) h[v] = kappa;
        FpNetwork fp = build_fp(vertex_sets, g, h);
        fp.net.max_flow();
        auto reach = fp.net.residual_reachable();
        auto in_t = [&](int v) {
            return reach[static_cast<std::size_t>(fp.vertex_node.at(v))];
        };
        auto assigned = fp.assigned_vertices();

        // Bucket cycles by how many assigned vertices are residual-unreachable.
        struct PendingOne {
            std::size_t idx;
            int t_prime_vertex;
        };
        std::vector<std::size_t> bucket0;
        std::vector<PendingOne> bucket1;
        Digraph residual(n, /*simple=*/false);
        auto spill_cycle = [&](const CycleSeq& c) {
            for (const Edge& e : c.edges()) residual.add_edge(e);
        };

        for (std::size_t i = 0; i < pool.size(); ++i) {
            std::vector<int> t_prime;
            for (int v : assigned[i])
                if (!in_t(v)) t_prime.push_back(v);
            if (t_prime.size() >= 2) {
                std::sort(t_prime.begin(), t_prime.end());
                int v1 = t_prime[0], v2 = t_prime[1];
                auto pos = cycle_positions(pool[i]);
                PathSeq p12{cycle_arc(pool[i], pos, v1, v2)};
                PathSeq p21{cycle_arc(pool[i], pos, v2, v1)};
                KernelResult res = absorb_pair(p12, p21, v1, v2, ledger, part);
                ledger.consume(res.v1, res.e1);
                ledger.consume(res.v2, res.e2);
                trace_event(trace, "absorb_short two-anchored cycle=" + std::to_string(i) +
                                       " v1=" + std::to_string(v1) +
                                       " v2=" + std::to_string(v2));
                out.paths.push_back(std::move(res.p1));
                out.paths.push_back(std::move(res.p2));
            } else if (t_prime.size() == 1) {
                bucket1.push_back({i, t_prime[0]});
            } else {
                bucket0.push_back(i);
            }
        }

        // Jointly absorb pairs of one-anchored cycles whose intersection
        // lies entirely among reachable vertices.
        std::vector<bool> done(bucket1.size(), false);
        bool merged = true;
        while (merged) {
            merged = false;
            for (std::size_t a = 0; a < bucket1.size() && !merged; ++a) {
                if (done[a]) continue;
                for (std::size_t b = a + 1; b < bucket1.size() && !merged; ++b) {
                    if (done[b]) continue;
                    const CycleSeq& c1 = pool[bucket1[a].idx];
                    const CycleSeq& c2 = pool[bucket1[b].idx];
                    std::set<int> verts2(c2.vertices.begin(), c2.vertices.end() - 1);
                    bool any = false, all_t = true;
                    for (std::size_t k = 0; k + 1 < c1.vertices.size(); ++k)
                        if (verts2.count(c1.vertices[k])) {
                            any = true;
                            if (!in_t(c1.vertices[k])) all_t = false;
                        }
                    if (!any || !all_t) continue;
                    int v1 = bucket1[a].t_prime_vertex;
                    int v2 = bucket1[b].t_prime_vertex;
                    auto pos1 = cycle_positions(c1);
                    auto pos2 = cycle_positions(c2);
                    // First shared vertex along each cycle from its anchor.
                    auto first_shared = [&](const CycleSeq& c, const std::map<int, int>& pos,
                                            int from, const std::set<int>& inter) {
                        int len = static_cast<int>(c.vertices.size()) - 1;
                        int i = pos.at(from);
                        for (int step = 1; step <= len; ++step) {
                            int v = c.vertices[static_cast<std::size_t>((i + step) % len)];
                            if (inter.count(v)) return v;
                        }
                        throw std::logic_error("absorb_short: lost cycle intersection");
                    };
                    std::set<int> inter;
                    for (std::size_t k = 0; k + 1 < c1.vertices.size(); ++k)
                        if (verts2.count(c1.vertices[k])) inter.insert(c1.vertices[k]);
                    int v1p = first_shared(c1, pos1, v1, inter);
                    int v2p = first_shared(c2, pos2, v2, inter);
                    std::vector<int> walk12 = cycle_arc(c1, pos1, v1, v1p);
                    std::vector<int> tail12 = cycle_arc(c2, pos2, v1p, v2);
                    walk12.insert(walk12.end(), tail12.begin() + 1, tail12.end());
                    std::vector<int> walk21 = cycle_arc(c2, pos2, v2, v2p);
                    std::vector<int> tail21 = cycle_arc(c1, pos1, v2p, v1);
                    walk21.insert(walk21.end(), tail21.begin() + 1, tail21.end());
                    PathSeq p12{walk12}, p21{walk21};
                    KernelResult res = absorb_pair(p12, p21, v1, v2, ledger, part);
                    ledger.consume(res.v1, res.e1);
                    ledger.consume(res.v2, res.e2);
                    trace_event(trace, "absorb_short joined cycles=" +
                                           std::to_string(bucket1[a].idx) + "," +
                                           std::to_string(bucket1[b].idx) +
                                           " v1=" + std::to_string(v1) +
                                           " v2=" + std::to_string(v2));
                    out.paths.push_back(std::move(res.p1));
                    out.paths.push_back(std::move(res.p2));
                    // Unused arcs of the two cycles drop into the residual.
                    std::map<Edge, int> remnant;
                    for (const Edge& e : c1.edges()) ++remnant[e];
                    for (const Edge& e : c2.edges()) ++remnant[e];
                    for (const Edge& e : p12.edges()) --remnant[e];
                    for (const Edge& e : p21.edges()) --remnant[e];
                    for (const auto& [e, count] : remnant) {
                        if (count < 0)
                            throw std::logic_error("absorb_short: joined walks reused an edge");
                        if (count > 0) residual.add_edge(e.tail, e.head, count);
                    }
                    done[a] = done[b] = true;
                    merged = true;
                }
            }
        }
        for (std::size_t a = 0; a < bucket1.size(); ++a)
            if (!done[a]) spill_cycle(pool[bucket1[a].idx]);
        for (std::size_t i : bucket0) spill_cycle(pool[i]);

        // Re-peel the Eulerian residual; promote anything no longer short.
        pool.clear();
        for (CycleSeq& c : peel_cycles(residual)) {
            if (dot_vertex_count(c, part) > kappa) {
                out.leftover_cycles.push_back(std::move(c));
            } else {
                pool.push_back(std::move(c));
            }
        }
        if (!pool.empty()) {
            std::set<int> new_support;
            for (const CycleSeq& c : pool)
                for (std::size_t k = 0; k + 1 < c.vertices.size(); ++k)
                    new_support.insert(c.vertices[k]);
            if (static_cast<std::int64_t>(new_support.size()) >= n_prime)
                throw AbsorbError("absorb_short",
                                  "round " + std::to_string(round) +
                                      " did not shrink the cycle support (" +
                                      std::to_string(new_support.size()) + " vs " +
                                      std::to_string(n_prime) + " vertices)");
        }
    }

    auto leftovers = ledger.drain_to_paths();
    out.paths.insert(out.paths.end(), leftovers.begin(), leftovers.end());
    // Conservation: every input edge must now live in a path or a
    // promoted cycle.
    std::int64_t emitted = 0;
    for (const PathSeq& p : out.paths) emitted += static_cast<std::int64_t>(p.length());
    for (const CycleSeq& c : out.leftover_cycles)
        emitted += static_cast<std::int64_t>(c.length());
    if (emitted != edges_total)
        throw std::logic_error("absorb_short: edge conservation failed (" +
                               std::to_string(emitted) + " of " + std::to_string(edges_total) +
                               " edges accounted for)");
    return out;
}

}  // namespace pathdec
