#include "pathdec/digraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace pathdec {

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (const auto& [v, mult] : out_[u])
            for (int k = 0; k < mult; ++k) out.push_back({u, v});
    return out;
}

VertexPartition::VertexPartition(int vertex_count, std::vector<int> a_plus,
                                 std::vector<int> a_minus)
    : a_plus_(std::move(a_plus)), a_minus_(std::move(a_minus)) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    membership_.assign(static_cast<std::size_t>(vertex_count), Part::Zero);
    std::sort(a_plus_.begin(), a_plus_.end());
    std::sort(a_minus_.begin(), a_minus_.end());
    auto place = [&](const std::vector<int>& vs, Part p) {
        for (int v : vs) {
            if (v < 0 || v >= vertex_count)
                throw std::invalid_argument("partition vertex out of range");
            if (p == Part::Minus && membership_[static_cast<std::size_t>(v)] == Part::Plus)
                throw std::invalid_argument("partition sets overlap at vertex " +
                                            std::to_string(v));
            membership_[static_cast<std::size_t>(v)] = p;
        }
    };
    place(a_plus_, Part::Plus);
    place(a_minus_, Part::Minus);
    if (std::adjacent_find(a_plus_.begin(), a_plus_.end()) != a_plus_.end() ||
        std::adjacent_find(a_minus_.begin(), a_minus_.end()) != a_minus_.end())
        throw std::invalid_argument("duplicate vertex in partition set");
    for (int v = 0; v < vertex_count; ++v)
        if (membership_[static_cast<std::size_t>(v)] == Part::Zero) a_zero_.push_back(v);
    a_dot_.reserve(a_plus_.size() + a_minus_.size());
    std::merge(a_plus_.begin(), a_plus_.end(), a_minus_.begin(), a_minus_.end(),
               std::back_inserter(a_dot_));
}

std::vector<Edge> PathSeq::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        out.push_back({vertices[i], vertices[i + 1]});
    return out;
}

bool PathSeq::valid() const {
    if (vertices.empty()) return false;
    std::unordered_set<int> seen(vertices.begin(), vertices.end());
    return seen.size() == vertices.size();
}

std::vector<Edge> CycleSeq::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        out.push_back({vertices[i], vertices[i + 1]});
    return out;
}

bool CycleSeq::valid() const {
    if (vertices.size() < 3) return false;
    if (vertices.front() != vertices.back()) return false;
    std::unordered_set<int> seen(vertices.begin(), vertices.end() - 1);
    return seen.size() == vertices.size() - 1;
}

std::vector<int> CycleSeq::vertex_set() const {
    std::vector<int> vs(vertices.begin(), vertices.end() - (vertices.empty() ? 0 : 1));
    std::sort(vs.begin(), vs.end());
    return vs;
}

int excess(const Digraph& d, int v) { return d.out_degree(v) - d.in_degree(v); }

std::int64_t total_excess(const Digraph& d) {
    std::int64_t sum_abs = 0;
    for (int v = 0; v < d.vertex_count(); ++v) sum_abs += std::abs(excess(d, v));
    return sum_abs / 2;
}

bool is_eulerian(const Digraph& d) {
    for (int v = 0; v < d.vertex_count(); ++v)
        if (excess(d, v) != 0) return false;
    return true;
}

std::int64_t edge_count_between(const Digraph& d, const std::vector<int>& a,
                                const std::vector<int>& b) {
    std::unordered_set<int> in_a(a.begin(), a.end());
    std::unordered_set<int> in_b(b.begin(), b.end());
    for (int v : b)
        if (in_a.count(v))
            throw std::invalid_argument("edge_count_between requires disjoint sets");
    std::int64_t count = 0;
    for (int u : a)
        for (const auto& [v, mult] : d.out_neighbors(u))
            if (in_b.count(v)) count += mult;
    return count;
}

std::int64_t edge_count_within(const Digraph& d, const std::vector<int>& a) {
    std::unordered_set<int> in_a(a.begin(), a.end());
    std::int64_t count = 0;
    for (int u : a)
        for (const auto& [v, mult] : d.out_neighbors(u))
            if (in_a.count(v)) count += mult;
    return count;
}

VertexPartition partition_by_excess(const Digraph& d, int threshold) {
    if (threshold < 1) throw std::invalid_argument("threshold must be >= 1");
    std::vector<int> plus, minus;
    for (int v = 0; v < d.vertex_count(); ++v) {
        int ex = excess(d, v);
        if (ex >= threshold)
            plus.push_back(v);
        else if (ex <= -threshold)
            minus.push_back(v);
    }
    return VertexPartition(d.vertex_count(), std::move(plus), std::move(minus));
}

Digraph read_edge_list(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& out) -> bool {
        while (std::getline(in, out)) {
            std::size_t i = out.find_first_not_of(" \t\r");
            if (i == std::string::npos || out[i] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_data_line(line)) throw std::runtime_error("edge list: missing header line");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw std::runtime_error("edge list: malformed header: " + line);
    Digraph d(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(line))
            throw std::runtime_error("edge list: expected " + std::to_string(m) +
                                     " edges, got " + std::to_string(i));
        std::istringstream row(line);
        int u = -1, v = -1;
        if (!(row >> u >> v)) throw std::runtime_error("edge list: malformed edge: " + line);
        d.add_edge(u, v);
    }
    return d;
}

void write_edge_list(std::ostream& out, const Digraph& d) {
    out << d.vertex_count() << ' ' << d.edge_count() << '\n';
    for (const Edge& e : d.edges()) out << e.tail << ' ' << e.head << '\n';
}

}  // namespace pathdec
