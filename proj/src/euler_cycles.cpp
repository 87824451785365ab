#include "pathdec/euler_cycles.hpp"

#include <algorithm>

namespace pathdec {

std::vector<CycleSeq> peel_cycles(const Digraph& d) {
    int n = d.vertex_count();
    for (int v = 0; v < n; ++v)
        if (d.out_degree(v) != d.in_degree(v))
            throw std::invalid_argument("peel_cycles: vertex " + std::to_string(v) +
                                        " unbalanced: out=" + std::to_string(d.out_degree(v)) +
                                        " in=" + std::to_string(d.in_degree(v)));

    Digraph rem = d;
    std::vector<CycleSeq> out;
    std::vector<int> stack;
    std::vector<int> pos(static_cast<std::size_t>(n), -1);  // index in stack, -1 if absent

    for (int start = 0; start < n; ++start) {
        if (rem.out_degree(start) == 0) continue;
        stack.clear();
        stack.push_back(start);
        pos[static_cast<std::size_t>(start)] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            if (rem.out_degree(v) == 0) {
                // A walk in a balanced digraph can only run dry back at its
                // start, with every cycle through it already cut off.
                if (stack.size() != 1)
                    throw std::logic_error("peel_cycles: stuck mid-walk at vertex " +
                                           std::to_string(v));
                pos[static_cast<std::size_t>(v)] = -1;
                stack.pop_back();
                break;
            }
            int w = rem.out_neighbors(v).begin()->first;
            rem.remove_edge(v, w);
            int at = pos[static_cast<std::size_t>(w)];
            if (at < 0) {
                pos[static_cast<std::size_t>(w)] = static_cast<int>(stack.size());
                stack.push_back(w);
                continue;
            }
            // w is already on the stack: stack[at..] plus the edge v->w
            // closes a cycle. Cut it off and resume the walk from w.
            CycleSeq c;
            c.vertices.assign(stack.begin() + at, stack.end());
            c.vertices.push_back(w);
            out.push_back(std::move(c));
            for (std::size_t i = static_cast<std::size_t>(at) + 1; i < stack.size(); ++i)
                pos[static_cast<std::size_t>(stack[i])] = -1;
            stack.resize(static_cast<std::size_t>(at) + 1);
        }
    }
    return out;
}

int dot_vertex_count(const CycleSeq& c, const VertexPartition& part) {
    int count = 0;
    // interior vertices are distinct; skip the repeated closing vertex
    for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i)
        if (part.in_dot(c.vertices[i])) ++count;
    return count;
}

CycleClasses classify_cycles(const std::vector<CycleSeq>& cycles, const VertexPartition& part,
                             double kappa, double big_n) {
    if (kappa <= 0.0) throw std::invalid_argument("classify_cycles: kappa must be positive");
    CycleClasses out;
    double long_threshold = big_n / kappa;
    for (const CycleSeq& c : cycles) {
        int ell = dot_vertex_count(c, part);
        if (ell <= kappa)
            out.short_cycles.push_back(c);
        else if (ell >= long_threshold)
            out.long_cycles.push_back(c);
        else
            out.medium_cycles.push_back(c);
    }
    return out;
}

}  // namespace pathdec
