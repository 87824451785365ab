#ifndef PATHDEC_DIGRAPH_HPP
#define PATHDEC_DIGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathdec {

// A directed edge between two distinct vertices. Multi-edges are
// distinguished by an instance index where it matters; as a value this
// is just the ordered pair.
struct Edge {
    int tail = 0;
    int head = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Loopless multidigraph on dense vertex indices 0..n-1.
//
// Adjacency is kept as neighbor -> multiplicity maps in both directions,
// so edge insertion and removal are O(log deg) and iteration over
// out-neighbors is in ascending head order. In simple mode (the default)
// every ordered pair has multiplicity at most 1; internal auxiliary
// graphs may disable it.
//
// Immutable-after-build values are safe to share read-only across
// threads; mutation requires exclusive access.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int vertex_count, bool simple = true)
        : n_(vertex_count),
          simple_(simple),
          out_(vertex_count),
          in_(vertex_count),
          outdeg_(vertex_count, 0),
          indeg_(vertex_count, 0) {
        if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    }

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }
    bool simple_mode() const { return simple_; }

    void add_edge(int u, int v, int count = 1) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        if (count <= 0) throw std::invalid_argument("edge count must be positive");
        int& mult = out_[u][v];
        if (simple_ && mult + count > 1)
            throw std::invalid_argument("duplicate edge in simple mode: " +
                                        std::to_string(u) + "->" + std::to_string(v));
        mult += count;
        in_[v][u] += count;
        outdeg_[u] += count;
        indeg_[v] += count;
        m_ += count;
    }

    void add_edge(Edge e) { add_edge(e.tail, e.head); }

    // Removes one instance of u->v.
    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        auto it = out_[u].find(v);
        if (it == out_[u].end())
            throw std::invalid_argument("edge not present: " + std::to_string(u) + "->" +
                                        std::to_string(v));
        if (--it->second == 0) out_[u].erase(it);
        auto jt = in_[v].find(u);
        if (--jt->second == 0) in_[v].erase(jt);
        --outdeg_[u];
        --indeg_[v];
        --m_;
    }

    void remove_edge(Edge e) { remove_edge(e.tail, e.head); }

    int multiplicity(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        auto it = out_[u].find(v);
        return it == out_[u].end() ? 0 : it->second;
    }

    bool has_edge(int u, int v) const { return multiplicity(u, v) > 0; }

    int out_degree(int v) const {
        check_vertex(v);
        return outdeg_[v];
    }
    int in_degree(int v) const {
        check_vertex(v);
        return indeg_[v];
    }

    // neighbor -> multiplicity, ascending neighbor order
    const std::map<int, int>& out_neighbors(int v) const {
        check_vertex(v);
        return out_[v];
    }
    const std::map<int, int>& in_neighbors(int v) const {
        check_vertex(v);
        return in_[v];
    }

    // Edge multiset in ascending (tail, head) order, multi-edges repeated.
    std::vector<Edge> edges() const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.out_ == b.out_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    }

    int n_ = 0;
    bool simple_ = true;
    std::int64_t m_ = 0;
    std::vector<std::map<int, int>> out_;
    std::vector<std::map<int, int>> in_;
    std::vector<int> outdeg_;
    std::vector<int> indeg_;
};

// The (A+, A-, A0) split of a vertex set. The three sets are pairwise
// disjoint and cover 0..n-1; membership() gives O(1) lookup.
class VertexPartition {
public:
    enum class Part : std::uint8_t { Plus, Minus, Zero };

    VertexPartition() = default;
    VertexPartition(int vertex_count, std::vector<int> a_plus, std::vector<int> a_minus);

    const std::vector<int>& a_plus() const { return a_plus_; }
    const std::vector<int>& a_minus() const { return a_minus_; }
    const std::vector<int>& a_zero() const { return a_zero_; }
    // A-dot: the union of A+ and A-, ascending.
    const std::vector<int>& a_dot() const { return a_dot_; }

    int vertex_count() const { return static_cast<int>(membership_.size()); }
    Part membership(int v) const { return membership_.at(static_cast<std::size_t>(v)); }
    bool in_dot(int v) const { return membership(v) != Part::Zero; }

private:
    std::vector<int> a_plus_, a_minus_, a_zero_, a_dot_;
    std::vector<Part> membership_;
};

// Directed path as a vertex sequence; all vertices distinct, consecutive
// pairs are the edges. A single vertex is a degenerate, edgeless path.
struct PathSeq {
    std::vector<int> vertices;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    std::vector<Edge> edges() const;
    bool valid() const;
};

// Directed cycle as a vertex sequence with first == last and all interior
// vertices distinct; at least 2 edges.
struct CycleSeq {
    std::vector<int> vertices;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    std::vector<Edge> edges() const;
    bool valid() const;
    // Distinct vertices, ascending.
    std::vector<int> vertex_set() const;
};

// ex_D(v) = d+(v) - d-(v)
int excess(const Digraph& d, int v);

// ex(D) = half the sum of |ex_D(v)|; 64-bit on purpose.
std::int64_t total_excess(const Digraph& d);

// Every vertex balanced; connectivity is not required.
bool is_eulerian(const Digraph& d);

// e_D(A,B) for disjoint A, B, with multiplicity.
std::int64_t edge_count_between(const Digraph& d, const std::vector<int>& a,
                                const std::vector<int>& b);

// e_D(A): edges with both endpoints in A.
std::int64_t edge_count_within(const Digraph& d, const std::vector<int>& a);

// A+ = {ex >= threshold}, A- = {ex <= -threshold}, threshold >= 1.
VertexPartition partition_by_excess(const Digraph& d, int threshold);

// Edge-list text format: "n m" then m lines "u v"; '#' lines ignored.
Digraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Digraph& d);

}  // namespace pathdec

#endif
