// Command-line front end: generation, decomposition, verification and
// Monte-Carlo experiments over the library.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "pathdec/decomposer.hpp"
#include "pathdec/digraph.hpp"
#include "pathdec/generator.hpp"
#include "pathdec/oracle.hpp"
#include "pathdec/rng.hpp"

namespace {

using namespace pathdec;

constexpr int kExUsage = 64;    // bad flags
constexpr int kExNoInput = 66;  // unreadable/malformed input

Digraph read_graph_or_exit(const std::string& path) {
    try {
        if (path == "-") return read_edge_list(std::cin);
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        return read_edge_list(in);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::exit(kExNoInput);
    }
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) {
        std::cerr << "error: cannot write " << path << "\n";
        std::exit(kExNoInput);
    }
    return file;
}

int cmd_generate(int n, double p, std::uint64_t seed, const std::string& cls, int t,
                 int euler_deg, const std::string& out_path) {
    Digraph d;
    try {
        d = cls == "example" ? gen_example_class(n, t, euler_deg, seed) : gen_dnp(n, p, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExUsage;
    }
    std::ofstream file;
    write_edge_list(open_out(file, out_path), d);
    return 0;
}

int cmd_decompose(const std::string& in_path, const std::string& out_path,
                  const DecomposeOptions& options) {
    Digraph d = read_graph_or_exit(in_path);
    DecomposeResult res = perfect_decompose(d, options);

    for (const StageReport& s : res.stages) {
        std::fprintf(stderr, "stage %-20s %s (%.3fs)\n", s.stage.c_str(),
                     s.success ? "ok" : "FAILED", s.seconds);
        for (const std::string& b : s.breaches) std::fprintf(stderr, "  breach: %s\n", b.c_str());
    }
    for (const std::string& w : res.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
    if (options.trace)
        for (const std::string& t : res.trace_log) std::fprintf(stderr, "trace: %s\n", t.c_str());

    if (!res.success) {
        const StageReport* f = res.failure();
        return f && f->stage == "verify" ? 3 : 2;
    }
    std::ofstream file;
    write_decomposition(open_out(file, out_path), res.decomposition);
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& paths_path) {
    Digraph d = read_graph_or_exit(graph_path);
    Decomposition dec;
    try {
        std::ifstream in(paths_path);
        if (!in) throw std::runtime_error("cannot open " + paths_path);
        dec = read_decomposition(in);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExNoInput;
    }
    VerifyReport rep = verify_decomposition(d, dec);
    if (rep.ok) {
        std::cout << "PASS\n";
        return 0;
    }
    std::cout << "FAIL\n";
    for (const std::string& f : rep.failures) std::cout << "  " << f << "\n";
    return 1;
}

struct McRow {
    int n;
    double p;
    int trials;
    bool skipped = false;
    double fraction = 0.0, ci_lo = 0.0, ci_hi = 0.0;
};

void wilson_ci(int hits, int trials, double& lo, double& hi) {
    constexpr double z = 1.959963984540054;  // 95%
    double t = trials, ph = hits / t;
    double denom = 1.0 + z * z / t;
    double center = (ph + z * z / (2.0 * t)) / denom;
    double half = z * std::sqrt(ph * (1.0 - ph) / t + z * z / (4.0 * t * t)) / denom;
    lo = std::max(0.0, center - half);
    hi = std::min(1.0, center + half);
}

int cmd_montecarlo(const std::vector<int>& ns, const std::vector<double>& ps, int trials,
                   std::uint64_t seed, const std::string& method, int edge_cap,
                   const std::string& out_path) {
    unsigned threads = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("PATHDEC_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) threads = static_cast<unsigned>(v);
    }
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));

    std::ofstream file;
    std::ostream& out = open_out(file, out_path);
    out << "n,p,trials,fraction,ci_lo,ci_hi,method\n";

    std::uint64_t cell = 0;
    for (int n : ns) {
        for (double p : ps) {
            ++cell;
            // 0 = inconsistent, 1 = consistent, 2 = over the oracle cap
            std::vector<int> verdict(static_cast<std::size_t>(trials), 0);
            std::atomic<int> next{0};
            auto worker = [&]() {
                for (;;) {
                    int i = next.fetch_add(1);
                    if (i >= trials) return;
                    std::uint64_t trial_seed =
                        Rng::split(seed, cell * 0x10000u + static_cast<std::uint64_t>(i));
                    Digraph d = gen_dnp(n, p, trial_seed);
                    if (method == "oracle") {
                        if (d.edge_count() > edge_cap) {
                            verdict[static_cast<std::size_t>(i)] = 2;
                            continue;
                        }
                        verdict[static_cast<std::size_t>(i)] =
                            is_consistent(d, edge_cap) ? 1 : 0;
                    } else {
                        DecomposeOptions opt;
                        opt.seed = trial_seed;
                        opt.mode = DecomposeMode::Permissive;
                        verdict[static_cast<std::size_t>(i)] =
                            perfect_decompose(d, opt).success ? 1 : 0;
                    }
                }
            };
            std::vector<std::thread> pool;
            for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
            worker();
            for (std::thread& t : pool) t.join();

            char pbuf[32];
            std::snprintf(pbuf, sizeof pbuf, "%g", p);
            bool capped = std::any_of(verdict.begin(), verdict.end(),
                                      [](int v) { return v == 2; });
            if (capped) {
                out << n << "," << pbuf << "," << trials << ",skipped,skipped,skipped,"
                    << method << "\n";
                continue;
            }
            int hits = static_cast<int>(std::count(verdict.begin(), verdict.end(), 1));
            double lo, hi;
            wilson_ci(hits, trials, lo, hi);
            char row[128];
            std::snprintf(row, sizeof row, "%.6f,%.6f,%.6f",
                          static_cast<double>(hits) / trials, lo, hi);
            out << n << "," << pbuf << "," << trials << "," << row << "," << method << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge decomposition of digraphs into excess-many paths"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a random digraph as an edge list");
    int g_n = 0, g_t = 2, g_euler = 2;
    double g_p = 0.5;
    std::uint64_t g_seed = 0;
    std::string g_class = "dnp", g_out;
    gen->add_option("--n", g_n, "vertex count")->required();
    gen->add_option("--p", g_p, "edge probability (dnp)");
    gen->add_option("--seed", g_seed, "random seed");
    gen->add_option("--class", g_class, "graph family")
        ->check(CLI::IsMember({"dnp", "example"}));
    gen->add_option("--t", g_t, "bipartite regularity (example)");
    gen->add_option("--euler-deg", g_euler, "max overlay in/out degree (example)");
    gen->add_option("--out", g_out, "output file (default stdout)");

    // decompose
    auto* dec = app.add_subcommand("decompose", "decompose a digraph into excess-many paths");
    std::string d_in, d_out, d_mode = "strict";
    DecomposeOptions d_opt;
    dec->add_option("--in", d_in, "edge-list file ('-' for stdin)")->required();
    dec->add_option("--out", d_out, "decomposition file (default stdout)");
    dec->add_option("--seed", d_opt.seed, "random seed");
    dec->add_option("--mode", d_mode, "strict or permissive")
        ->check(CLI::IsMember({"strict", "permissive"}));
    dec->add_option("--kappa", d_opt.kappa, "override the reservation multiplicity");
    dec->add_option("--lambda", d_opt.lambda, "override the A0 interaction threshold");
    dec->add_option("--cprime", d_opt.c_prime, "cycle budget constant");
    dec->add_flag("--trace", d_opt.trace, "log absorption events to stderr");

    // verify
    auto* ver = app.add_subcommand("verify", "check a decomposition against its graph");
    std::string v_graph, v_paths;
    ver->add_option("--graph", v_graph, "edge-list file")->required();
    ver->add_option("--paths", v_paths, "decomposition file")->required();

    // montecarlo
    auto* mc = app.add_subcommand("montecarlo", "estimate the consistent fraction of D_{n,p}");
    std::vector<int> m_ns;
    std::vector<double> m_ps;
    int m_trials = 100, m_cap = kHardEdgeLimit;
    std::uint64_t m_seed = 0;
    std::string m_method = "oracle", m_out;
    mc->add_option("--n-list", m_ns, "vertex counts")->required();
    mc->add_option("--p-list", m_ps, "edge probabilities")->required();
    mc->add_option("--trials", m_trials, "trials per (n,p) cell")
        ->check(CLI::PositiveNumber);
    mc->add_option("--seed", m_seed, "random seed");
    mc->add_option("--method", m_method, "oracle or constructive")
        ->check(CLI::IsMember({"oracle", "constructive"}));
    mc->add_option("--edge-cap", m_cap, "oracle edge limit")
        ->check(CLI::Range(1, kHardEdgeLimit));
    mc->add_option("--out", m_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExUsage;
    }

    try {
        if (gen->parsed())
            return cmd_generate(g_n, g_p, g_seed, g_class, g_t, g_euler, g_out);
        if (dec->parsed()) {
            d_opt.mode =
                d_mode == "permissive" ? DecomposeMode::Permissive : DecomposeMode::Strict;
            return cmd_decompose(d_in, d_out, d_opt);
        }
        if (ver->parsed()) return cmd_verify(v_graph, v_paths);
        if (mc->parsed())
            return cmd_montecarlo(m_ns, m_ps, m_trials, m_seed, m_method, m_cap, m_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExUsage;
}
