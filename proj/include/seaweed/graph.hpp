#pragma once

#include <utility>
#include <vector>

#include "seaweed/meander.hpp"

namespace seaweed {

// Arc graph of a meander: nodes 1..n on a line, nested upper arcs per top
// block, nested lower arcs per bottom block. Every node carries at most one
// arc on each side, so components are simple paths (isolated nodes included)
// or cycles.
class MeanderGraph {
public:
    explicit MeanderGraph(const Meander& m)
        : n_(m.length()), up_(static_cast<std::size_t>(n_) + 1, 0),
          low_(static_cast<std::size_t>(n_) + 1, 0) {
        fill_arcs(m.top().parts(), up_);
        fill_arcs(m.bottom().parts(), low_);
    }

    int size() const { return n_; }

    // partner node, or 0 when the node has no arc on that side
    int upper(int v) const { return up_[static_cast<std::size_t>(v)]; }
    int lower(int v) const { return low_[static_cast<std::size_t>(v)]; }

    std::vector<std::pair<int, int>> upper_arcs() const { return collect(up_); }
    std::vector<std::pair<int, int>> lower_arcs() const { return collect(low_); }

private:
    static void fill_arcs(const std::vector<int>& parts, std::vector<int>& arc) {
        int pos = 1;
        for (int part : parts) {
            for (int t = 0; t < part / 2; ++t) {
                int a = pos + t;
                int b = pos + part - 1 - t;
                arc[static_cast<std::size_t>(a)] = b;
                arc[static_cast<std::size_t>(b)] = a;
            }
            pos += part;
        }
    }

    std::vector<std::pair<int, int>> collect(const std::vector<int>& arc) const {
        std::vector<std::pair<int, int>> out;
        for (int v = 1; v <= n_; ++v)
            if (arc[static_cast<std::size_t>(v)] > v)
                out.emplace_back(v, arc[static_cast<std::size_t>(v)]);
        return out;
    }

    int n_;
    std::vector<int> up_;
    std::vector<int> low_;
};

inline MeanderGraph build_graph(const Meander& m) { return MeanderGraph(m); }

struct IndexStats {
    int cycles = 0;
    int paths = 0;  // isolated nodes count as paths
    int index = 0;  // 2 * cycles + paths
};

// Component census by iterative walk. From each unvisited node, walk the
// alternating upper/lower arcs rightward; returning to the start closes a
// cycle, otherwise the leftward walk completes a path.
inline IndexStats classify(const MeanderGraph& g) {
    const int n = g.size();
    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
    IndexStats stats;
    for (int s = 1; s <= n; ++s) {
        if (visited[static_cast<std::size_t>(s)]) continue;
        visited[static_cast<std::size_t>(s)] = 1;
        int cur = s;
        bool via_upper = true;
        bool closed = false;
        while (true) {
            int nxt = via_upper ? g.upper(cur) : g.lower(cur);
            if (nxt == 0) break;
            visited[static_cast<std::size_t>(nxt)] = 1;
            cur = nxt;
            via_upper = !via_upper;
            if (cur == s) { closed = true; break; }
        }
        if (closed) {
            ++stats.cycles;
            continue;
        }
        cur = s;
        via_upper = false;
        while (true) {
            int nxt = via_upper ? g.upper(cur) : g.lower(cur);
            if (nxt == 0) break;
            visited[static_cast<std::size_t>(nxt)] = 1;
            cur = nxt;
            via_upper = !via_upper;
        }
        ++stats.paths;
    }
    stats.index = 2 * stats.cycles + stats.paths;
    return stats;
}

// Component labels 1..count in order of each component's smallest node.
struct ComponentMap {
    std::vector<int> label;   // size n+1, 1-based; label[0] unused
    std::vector<bool> cycle;  // size count+1; cycle[label]
    int count = 0;
};

inline ComponentMap components(const MeanderGraph& g) {
    const int n = g.size();
    ComponentMap cm;
    cm.label.assign(static_cast<std::size_t>(n) + 1, 0);
    cm.cycle.push_back(false);
    std::vector<int> stack;
    for (int s = 1; s <= n; ++s) {
        if (cm.label[static_cast<std::size_t>(s)]) continue;
        const int id = ++cm.count;
        bool all_degree_two = true;
        stack.assign(1, s);
        cm.label[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (g.upper(v) == 0 || g.lower(v) == 0) all_degree_two = false;
            for (int w : {g.upper(v), g.lower(v)}) {
                if (w != 0 && cm.label[static_cast<std::size_t>(w)] == 0) {
                    cm.label[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        cm.cycle.push_back(all_degree_two);
    }
    return cm;
}

inline int index_of(const Meander& m) {
    if (m.empty()) return 0;
    return classify(MeanderGraph(m)).index;
}

inline bool is_acyclic(const Meander& m) {
    return classify(MeanderGraph(m)).cycles == 0;
}

}  // namespace seaweed
