#include "pathdec/decomposer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

#include "pathdec/absorber.hpp"
#include "pathdec/absorption.hpp"
#include "pathdec/euler_cycles.hpp"
#include "pathdec/generator.hpp"

namespace pathdec {

const StageReport* DecomposeResult::failure() const {
    for (const StageReport& s : stages)
        if (!s.success) return &s;
    return nullptr;
}

std::pair<std::vector<PathSeq>, Digraph> greedy_excess_paths(const Digraph& d) {
    Digraph rem = d;
    int n = rem.vertex_count();
    std::vector<PathSeq> paths;
    for (;;) {
        int start = -1, best = 0;
        for (int v = 0; v < n; ++v) {
            int ex = excess(rem, v);
            if (ex > best) {
                best = ex;
                start = v;
            }
        }
        if (start < 0) break;

        // Maximal walk along lowest-head unused out-edges; in a graph
        // whose start vertex has positive excess this can only run dry at
        // a negative-excess vertex.
        std::vector<int> walk{start};
        int cur = start;
        while (rem.out_degree(cur) > 0) {
            int w = rem.out_neighbors(cur).begin()->first;
            rem.remove_edge(cur, w);
            walk.push_back(w);
            cur = w;
        }

        // Trim to a simple path; cut-off loops are balanced and go back
        // into the remainder.
        std::vector<int> stack{walk.front()};
        std::vector<int> pos(static_cast<std::size_t>(n), -1);
        pos[static_cast<std::size_t>(walk.front())] = 0;
        for (std::size_t i = 1; i < walk.size(); ++i) {
            int b = walk[i];
            int at = pos[static_cast<std::size_t>(b)];
            if (at < 0) {
                pos[static_cast<std::size_t>(b)] = static_cast<int>(stack.size());
                stack.push_back(b);
                continue;
            }
            for (std::size_t k = static_cast<std::size_t>(at); k + 1 < stack.size(); ++k)
                rem.add_edge(stack[k], stack[k + 1]);
            rem.add_edge(stack.back(), b);
            for (std::size_t k = static_cast<std::size_t>(at) + 1; k < stack.size(); ++k)
                pos[static_cast<std::size_t>(stack[k])] = -1;
            stack.resize(static_cast<std::size_t>(at) + 1);
        }
        if (stack.size() < 2)
            throw std::logic_error("greedy_excess_paths: degenerate extraction");
        paths.push_back({std::move(stack)});
    }
    return {std::move(paths), std::move(rem)};
}

VerifyReport verify_decomposition(const Digraph& d, const Decomposition& dec) {
    VerifyReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };

    std::map<Edge, std::int64_t> remaining;
    for (const Edge& e : d.edges()) ++remaining[e];

    for (std::size_t i = 0; i < dec.paths.size(); ++i) {
        const PathSeq& p = dec.paths[i];
        if (!p.valid() || p.length() == 0) {
            fail("path " + std::to_string(i) + " is not a valid nonempty simple path");
            continue;
        }
        for (const Edge& e : p.edges()) {
            auto it = remaining.find(e);
            if (it == remaining.end() || it->second == 0) {
                fail("path " + std::to_string(i) + " uses edge " + std::to_string(e.tail) +
                     "->" + std::to_string(e.head) + " beyond its multiplicity in the graph");
            } else {
                --it->second;
            }
        }
    }
    for (const auto& [e, count] : remaining)
        if (count > 0) {
            fail("edge " + std::to_string(e.tail) + "->" + std::to_string(e.head) +
                 " is not covered by any path");
            break;
        }
    std::int64_t ex = total_excess(d);
    if (static_cast<std::int64_t>(dec.paths.size()) != ex)
        fail("path count " + std::to_string(dec.paths.size()) +
             " differs from the excess bound " + std::to_string(ex));
    return rep;
}

namespace {

bool is_acyclic(const Digraph& d) {
    int n = d.vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) indeg[static_cast<std::size_t>(v)] = d.in_degree(v);
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) q.push(v);
    int seen = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++seen;
        for (const auto& [w, mult] : d.out_neighbors(v))
            if ((indeg[static_cast<std::size_t>(w)] -= mult) == 0) q.push(w);
    }
    return seen == n;
}

struct StageTimer {
    DecomposeResult& result;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    StageReport& finish(const std::string& stage, bool success,
                        std::vector<std::string> breaches = {}) {
        StageReport rep;
        rep.stage = stage;
        rep.success = success;
        rep.breaches = std::move(breaches);
        rep.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        result.stages.push_back(std::move(rep));
        t0 = std::chrono::steady_clock::now();
        return result.stages.back();
    }
};

DecomposeResult run_pipeline(const Digraph& d, const DecomposeOptions& options, int kappa) {
    DecomposeResult result;
    StageTimer timer{result};
    std::vector<std::string>* trace = options.trace ? &result.trace_log : nullptr;
    std::int64_t n = d.vertex_count();
    std::int64_t m = d.edge_count();
    bool permissive = options.mode == DecomposeMode::Permissive;

    // Degenerate and impossible inputs.
    if (m == 0) {
        timer.finish("precheck", true);
        result.success = true;
        result.decomposition.source_excess = 0;
        return result;
    }
    if (is_eulerian(d)) {
        timer.finish("precheck", false,
                     {"every vertex is balanced but edges remain: the excess bound is 0 while "
                      "at least one path is required"});
        return result;
    }
    timer.finish("precheck", true);

    // Acyclic graphs decompose greedily with no remainder.
    if (is_acyclic(d)) {
        auto [paths, rem] = greedy_excess_paths(d);
        if (rem.edge_count() != 0)
            throw std::logic_error("acyclic graph left a balanced remainder");
        result.decomposition.paths = std::move(paths);
        result.decomposition.source_excess = total_excess(d);
        timer.finish("acyclic-fast-path", true);
        result.success = true;
        return result;
    }
    timer.finish("acyclic-fast-path", true);

    double p_hat = n > 1 ? static_cast<double>(m) / (static_cast<double>(n) * (n - 1)) : 0.5;
    double lambda = options.lambda > 0.0
                        ? options.lambda
                        : std::min(static_cast<double>(n) * p_hat / 3.0,
                                   static_cast<double>(kappa) * kappa / 12.0);
    int threshold =
        permissive ? 1 : static_cast<int>(std::ceil(155.0 * static_cast<double>(kappa)));
    VertexPartition part = partition_by_excess(d, std::max(1, threshold));
    timer.finish("partition", true);

    Parameters params;
    params.n = n;
    params.p = p_hat;
    params.kappa = kappa;
    params.lambda = lambda;
    params.c_prime = options.c_prime;
    params.big_n = options.c_prime * static_cast<double>(n) *
                   std::log(static_cast<double>(std::max<std::int64_t>(n, 2)));
    ClassReport cls = classify(d, part, params, options.seed);
    if (!cls.all_deterministic_hold()) {
        std::vector<std::string> breaches;
        std::istringstream lines(cls.to_text());
        for (std::string line; std::getline(lines, line);)
            if (line.find("FAIL") != std::string::npos)
                breaches.push_back("class property violated: " + line);
        if (!permissive) {
            timer.finish("classify", false, std::move(breaches));
            return result;
        }
        for (std::string& b : breaches) result.warnings.push_back("classify (ignored): " + b);
    }
    timer.finish("classify", true);

    AbsorbingStructure dot_structure, zero_structure;
    try {
        dot_structure = build_dotA_structure(d, part, kappa, options.seed);
        std::set<Edge> forbidden;
        for (const Edge& e : dot_structure.all_edges()) forbidden.insert(e);
        zero_structure = build_A0_structure(d, part, kappa, options.seed, forbidden);
    } catch (const StructureBuildError& err) {
        timer.finish("build-structures", false,
                     {std::string("reserved-edge quota unsatisfiable: ") + err.what()});
        return result;
    }
    auto splits = split_structure(dot_structure, kappa);
    AbsorbingStructure merged = merge_structures(splits[2], zero_structure);
    timer.finish("build-structures", true);

    // Strip every reserved edge; the high-excess vertices must keep
    // their excess sign for the final count to add up.
    Digraph stripped = d;
    for (const Edge& e : dot_structure.all_edges()) stripped.remove_edge(e);
    for (const Edge& e : zero_structure.all_edges()) stripped.remove_edge(e);
    {
        std::vector<std::string> breaches;
        for (int v : part.a_dot()) {
            int before = excess(d, v), after = excess(stripped, v);
            if ((before > 0 && after < 0) || (before < 0 && after > 0)) {
                breaches.push_back("stripping reserved edges flipped the excess sign at vertex " +
                                   std::to_string(v) + " (" + std::to_string(before) + " -> " +
                                   std::to_string(after) + ")");
                if (breaches.size() >= 5) break;
            }
        }
        if (!breaches.empty()) {
            timer.finish("strip-structures", false, std::move(breaches));
            return result;
        }
    }
    timer.finish("strip-structures", true);

    auto [excess_paths, remainder] = greedy_excess_paths(stripped);
    timer.finish("excess-paths", true);

    std::vector<CycleSeq> cycles = peel_cycles(remainder);
    double n_work = std::max(params.big_n, static_cast<double>(cycles.size()));
    CycleClasses classes = classify_cycles(cycles, part, kappa, n_work);
    timer.finish("peel-and-classify", true);

    AbsorptionOutcome short_out, long_out, medium_out;
    try {
        short_out =
            absorb_short(classes.short_cycles, merged, part, kappa, options.c_prime, trace);
    } catch (const AbsorbError& err) {
        timer.finish("absorb-short", false, {err.witness});
        return result;
    }
    for (const std::string& w : short_out.warnings)
        result.warnings.push_back("absorb-short: " + w);
    // Promoted cycles re-enter the long/medium pools.
    CycleClasses promoted = classify_cycles(short_out.leftover_cycles, part, kappa, n_work);
    if (!promoted.short_cycles.empty()) {
        timer.finish("absorb-short", false,
                     {"a promoted cycle still meets at most kappa high-excess vertices"});
        return result;
    }
    timer.finish("absorb-short", true);

    std::vector<CycleSeq> long_pool = classes.long_cycles;
    long_pool.insert(long_pool.end(), promoted.long_cycles.begin(),
                     promoted.long_cycles.end());
    try {
        long_out = absorb_long(long_pool, splits[0], part, kappa, trace);
    } catch (const AbsorbError& err) {
        timer.finish("absorb-long", false, {err.witness});
        return result;
    }
    timer.finish("absorb-long", true);

    std::vector<CycleSeq> medium_pool = classes.medium_cycles;
    medium_pool.insert(medium_pool.end(), promoted.medium_cycles.begin(),
                       promoted.medium_cycles.end());
    try {
        medium_out = absorb_medium(medium_pool, splits[1], part, kappa, trace);
    } catch (const AbsorbError& err) {
        timer.finish("absorb-medium", false, {err.witness});
        return result;
    }
    timer.finish("absorb-medium", true);

    Decomposition dec;
    dec.source_excess = total_excess(d);
    dec.paths = std::move(excess_paths);
    for (auto* part_paths : {&short_out.paths, &long_out.paths, &medium_out.paths})
        for (PathSeq& p : *part_paths) dec.paths.push_back(std::move(p));

    VerifyReport verify = verify_decomposition(d, dec);
    if (!verify.ok) {
        timer.finish("verify", false, verify.failures);
        return result;
    }
    timer.finish("verify", true);
    result.decomposition = std::move(dec);
    result.success = true;
    return result;
}

}  // namespace

DecomposeResult perfect_decompose(const Digraph& d, const DecomposeOptions& options) {
    std::int64_t n = d.vertex_count();
    std::int64_t m = d.edge_count();
    double p_hat =
        n > 1 ? static_cast<double>(m) / (static_cast<double>(n) * (n - 1)) : 0.5;

    int kappa0;
    if (options.kappa > 0.0) {
        kappa0 = std::max(2, static_cast<int>(std::llround(options.kappa)));
    } else if (options.mode == DecomposeMode::Strict) {
        double formula = n >= 3 && p_hat > 0.0 && p_hat < 1.0
                             ? compute_parameters(n, p_hat, ParamMode::Plain,
                                                  options.c_prime)
                                   .kappa
                             : 2.0;
        kappa0 = std::max(2, static_cast<int>(std::llround(formula)));
    } else {
        kappa0 = 3;  // desk-scale default; the formula value exceeds real degrees here
    }

    // Permissive mode may retry with enlarged per-vertex reservations.
    int attempts = options.mode == DecomposeMode::Permissive ? 3 : 1;
    DecomposeResult last;
    for (int i = 0; i < attempts; ++i) {
        last = run_pipeline(d, options, kappa0 + i);
        if (last.success) return last;
        const StageReport* f = last.failure();
        if (f && (f->stage == "precheck" || f->stage == "classify" || f->stage == "verify"))
            return last;  // enlarging reservations cannot fix these
        if (i + 1 < attempts)
            last.warnings.push_back("retrying with enlarged reservations (kappa " +
                                    std::to_string(kappa0 + i + 1) + ")");
    }
    return last;
}

Decomposition read_decomposition(std::istream& in) {
    std::string tag;
    std::size_t k = 0;
    if (!(in >> tag >> k) || tag != "paths")
        throw std::runtime_error("decomposition file must start with 'paths <count>'");
    Decomposition dec;
    std::string line;
    std::getline(in, line);
    while (dec.paths.size() < k && std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        PathSeq p;
        for (int v; row >> v;) p.vertices.push_back(v);
        if (p.vertices.empty()) throw std::runtime_error("empty path line");
        dec.paths.push_back(std::move(p));
    }
    if (dec.paths.size() != k)
        throw std::runtime_error("decomposition file ended before " + std::to_string(k) +
                                 " paths were read");
    return dec;
}

void write_decomposition(std::ostream& out, const Decomposition& dec) {
    out << "paths " << dec.paths.size() << "\n";
    for (const PathSeq& p : dec.paths) {
        for (std::size_t i = 0; i < p.vertices.size(); ++i)
            out << (i ? " " : "") << p.vertices[i];
        out << "\n";
    }
}

}  // namespace pathdec
