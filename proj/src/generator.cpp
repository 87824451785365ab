#include "pathdec/generator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pathdec/rng.hpp"

namespace pathdec {

std::string ClassReport::to_text() const {
    auto line = [](int k, const Verdict& v, const char* suffix = "") {
        std::ostringstream os;
        os << 'P' << k << ' ' << (v.holds ? "PASS" : "FAIL");
        if (!v.holds) os << ' ' << v.witness;
        os << suffix << '\n';
        return os.str();
    };
    return line(1, p1) + line(2, p2) + line(3, p3) + line(4, p4) +
           line(5, p5, p5_sampled ? " (sampled)" : "");
}

Digraph gen_dnp(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_dnp: p must be in [0,1]");
    if (n < 0) throw std::invalid_argument("gen_dnp: negative n");
    Digraph d(n);
    Rng rng(Rng::split(seed, 0x646e70));  // "dnp"
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rng.next_double() < p) d.add_edge(u, v);
        }
    return d;
}

Digraph gen_example_class(int n, int t, int eulerian_degree, std::uint64_t seed) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("gen_example_class: n must be even and >= 2");
    int half = n / 2;
    if (t < 0 || t > half)
        throw std::invalid_argument("gen_example_class: need 0 <= t <= n/2");
    if (eulerian_degree < 0 || eulerian_degree > 3 * t)
        throw std::invalid_argument("gen_example_class: need 0 <= eulerian_degree <= 3t");

    Digraph d(n);
    Rng rng(Rng::split(seed, 0x6578636c));  // "excl"

    // t-regular bipartite part, left 0..half-1 to right half..n-1: a
    // circulant through a seeded permutation of the right side, so every
    // left out-degree and right in-degree is exactly t.
    std::vector<int> right(half);
    for (int i = 0; i < half; ++i) right[i] = half + i;
    rng.shuffle(right);
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < t; ++j) d.add_edge(i, right[(i + j) % half]);

    if (eulerian_degree == 0) return d;

    // Eulerian part: overlay random cycles, rejection-sampling to stay
    // edge-disjoint from everything added so far and within the degree cap.
    std::vector<int> euler_out(n, 0), euler_in(n, 0);
    int consecutive_rejects = 0;
    while (consecutive_rejects < 200) {
        std::vector<int> eligible;
        for (int v = 0; v < n; ++v)
            if (euler_out[v] < eulerian_degree && euler_in[v] < eulerian_degree)
                eligible.push_back(v);
        if (eligible.size() < 2) break;
        int max_len = static_cast<int>(eligible.size());
        int len = 2 + rng.next_int(max_len - 1);
        rng.shuffle(eligible);
        std::vector<int> cycle(eligible.begin(), eligible.begin() + len);
        bool ok = true;
        for (int i = 0; i < len && ok; ++i)
            if (d.has_edge(cycle[i], cycle[(i + 1) % len])) ok = false;
        if (!ok) {
            ++consecutive_rejects;
            continue;
        }
        consecutive_rejects = 0;
        for (int i = 0; i < len; ++i) {
            d.add_edge(cycle[i], cycle[(i + 1) % len]);
            ++euler_out[cycle[i]];
            ++euler_in[cycle[(i + 1) % len]];
        }
    }
    return d;
}

Parameters compute_parameters(std::int64_t n, double p, ParamMode mode, double c_prime) {
    if (n < 3) throw std::invalid_argument("compute_parameters: n must be >= 3");
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("compute_parameters: p must be in (0,1)");
    Parameters out;
    out.n = n;
    out.p = p;
    out.c_prime = c_prime;
    out.mode = mode;
    double nn = static_cast<double>(n);
    out.big_n = c_prime * nn * std::log(nn);
    if (mode == ParamMode::Plain) {
        out.kappa = 3.0 * std::pow(out.big_n, 0.4);
        out.degree_condition_ok = nn * p >= 365.0 * std::pow(out.big_n, 0.4);
    } else {
        out.kappa = 6.0 * std::pow(out.big_n * out.big_n * p, 0.2);
        out.degree_condition_ok =
            p >= std::pow(nn, -1.0 / 3.0) * std::pow(std::log(nn), 4.0);
    }
    out.lambda = std::min(nn * p / 3.0, out.kappa * out.kappa / 12.0);
    return out;
}

RandomModelThresholds random_model_thresholds(std::int64_t n, double p) {
    if (n < 3) throw std::invalid_argument("random_model_thresholds: n must be >= 3");
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("random_model_thresholds: p must be in (0,1)");
    double nn = static_cast<double>(n);
    double ln = std::log(nn);
    RandomModelThresholds out;
    out.kappa = std::sqrt(nn * p * (1.0 - p)) / (155.0 * std::pow(ln, 0.75));
    out.lambda = 5.0 * std::sqrt(nn / (1.0 - p)) * ln * ln;
    return out;
}

namespace {

// e_D(U) via a stamp array; linear in the degrees of U.
std::int64_t induced_edges(const Digraph& d, const std::vector<int>& u,
                           std::vector<int>& stamp, int tag) {
    for (int v : u) stamp[static_cast<std::size_t>(v)] = tag;
    std::int64_t count = 0;
    for (int v : u)
        for (const auto& [w, mult] : d.out_neighbors(v))
            if (stamp[static_cast<std::size_t>(w)] == tag) count += mult;
    return count;
}

}  // namespace

ClassReport classify(const Digraph& d, const VertexPartition& part, const Parameters& params,
                     std::uint64_t seed, int p5_samples_per_bucket) {
    if (part.vertex_count() != d.vertex_count())
        throw std::invalid_argument("classify: partition does not cover V(D)");
    ClassReport rep;
    double np = static_cast<double>(params.n) * params.p;
    std::int64_t ex_threshold =
        static_cast<std::int64_t>(std::ceil(155.0 * params.kappa));

    auto fail = [](ClassReport::Verdict& v, const std::string& witness) {
        if (v.holds) {
            v.holds = false;
            v.witness = witness;
        }
    };

    for (int v : part.a_plus()) {
        std::int64_t ex = excess(d, v);
        std::int64_t out_to_minus = edge_count_between(d, {v}, part.a_minus());
        if (ex < ex_threshold)
            fail(rep.p1, "v=" + std::to_string(v) + " ex=" + std::to_string(ex) +
                             " need>=" + std::to_string(ex_threshold));
        else if (out_to_minus < np / 4.0 || out_to_minus > np)
            fail(rep.p1, "v=" + std::to_string(v) +
                             " e(v,A-)=" + std::to_string(out_to_minus) + " outside [np/4,np]");
    }
    for (int v : part.a_minus()) {
        std::int64_t ex = excess(d, v);
        std::int64_t in_from_plus = edge_count_between(d, part.a_plus(), {v});
        if (ex > -ex_threshold)
            fail(rep.p2, "v=" + std::to_string(v) + " ex=" + std::to_string(ex) +
                             " need<=-" + std::to_string(ex_threshold));
        else if (in_from_plus < np / 4.0 || in_from_plus > np)
            fail(rep.p2, "v=" + std::to_string(v) +
                             " e(A+,v)=" + std::to_string(in_from_plus) + " outside [np/4,np]");
    }
    for (int v : part.a_dot()) {
        std::int64_t to_zero = edge_count_between(d, {v}, part.a_zero());
        std::int64_t from_zero = edge_count_between(d, part.a_zero(), {v});
        if (to_zero > params.lambda || from_zero > params.lambda)
            fail(rep.p3, "v=" + std::to_string(v) + " e(v,A0)=" + std::to_string(to_zero) +
                             " e(A0,v)=" + std::to_string(from_zero) + " lambda=" +
                             std::to_string(params.lambda));
    }
    for (int v : part.a_zero()) {
        std::int64_t in_from_plus = edge_count_between(d, part.a_plus(), {v});
        std::int64_t out_to_minus = edge_count_between(d, {v}, part.a_minus());
        if (in_from_plus < np / 3.0 || out_to_minus < np / 3.0)
            fail(rep.p4, "v=" + std::to_string(v) + " e(A+,v)=" + std::to_string(in_from_plus) +
                             " e(v,A-)=" + std::to_string(out_to_minus) + " need>=np/3");
    }

    // P5, sampled: random subsets per doubling size bucket plus a greedy
    // dense-subset witness.
    int n = d.vertex_count();
    if (params.p > 0.0 && n > 0) {
        double min_size_d = std::log(static_cast<double>(std::max<std::int64_t>(params.n, 2))) /
                            (50.0 * params.p);
        int min_size = static_cast<int>(std::ceil(std::max(1.0, min_size_d)));
        std::vector<int> stamp(static_cast<std::size_t>(n), -1);
        int tag = 0;
        auto check_subset = [&](const std::vector<int>& u) {
            std::int64_t e = induced_edges(d, u, stamp, ++tag);
            double bound = 100.0 * static_cast<double>(u.size()) *
                           static_cast<double>(u.size()) * params.p;
            if (static_cast<double>(e) > bound)
                fail(rep.p5, "|U|=" + std::to_string(u.size()) + " e(U)=" + std::to_string(e) +
                                 " bound=" + std::to_string(bound) + " U0=" +
                                 std::to_string(u.empty() ? -1 : u.front()));
        };
        if (min_size <= n) {
            Rng rng(Rng::split(seed, 0x7035));  // "p5"
            std::vector<int> all(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
            double avg_deg = static_cast<double>(d.edge_count()) / std::max(1, n);
            std::vector<long long> sizes;
            for (long long size = min_size; size < n; size *= 2) sizes.push_back(size);
            sizes.push_back(n);  // the final bucket is always the full set
            for (long long size : sizes) {
                // Scale the sample count down for expensive buckets.
                double cost = static_cast<double>(size) * (avg_deg + 1.0);
                int samples = static_cast<int>(
                    std::min<double>(p5_samples_per_bucket, std::max(4.0, 2e7 / cost)));
                for (int s = 0; s < samples; ++s) {
                    rng.shuffle(all);
                    std::vector<int> u(all.begin(), all.begin() + size);
                    check_subset(u);
                }
            }
            // Greedy witness: repeatedly drop the vertex of least induced
            // degree, checking each prefix size down to min_size.
            std::vector<bool> live(static_cast<std::size_t>(n), true);
            std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
            for (int v = 0; v < n; ++v)
                deg[static_cast<std::size_t>(v)] = d.out_degree(v) + d.in_degree(v);
            std::vector<int> current = all;
            std::sort(current.begin(), current.end());
            for (int size = n; size >= min_size; --size) {
                check_subset(current);
                int worst = current.front();
                for (int v : current)
                    if (deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(worst)])
                        worst = v;
                live[static_cast<std::size_t>(worst)] = false;
                for (const auto& [w, mult] : d.out_neighbors(worst))
                    if (live[static_cast<std::size_t>(w)]) deg[static_cast<std::size_t>(w)] -= mult;
                for (const auto& [w, mult] : d.in_neighbors(worst))
                    if (live[static_cast<std::size_t>(w)]) deg[static_cast<std::size_t>(w)] -= mult;
                current.erase(std::find(current.begin(), current.end(), worst));
            }
        }
    }
    return rep;
}

}  // namespace pathdec
