// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#include "mbqc/depth.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "mbqc/errors.hpp"

namespace mbqc {

namespace {

int ceil_log2(std::size_t k) {
    if (k <= 1) return 0;
    int bits = 0;
    std::size_t v = k - 1;
    while (v) {
        ++bits;
        v >>= 1;
    }
    return bits;
}

// Longest path (counting vertices) through the DAG induced on `nodes`.
int longest_chain(const std::vector<int>& nodes,
                  const std::map<int, std::vector<int>>& preds) {
    std::map<int, int> memo;
    std::function<int(int)> depth_of = [&](int v) -> int {
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        memo[v] = 1;  // cycle guard; acyclicity is checked upstream
        int d = 1;
        auto pit = preds.find(v);
        if (pit != preds.end())
            for (int u : pit->second) d = std::max(d, 1 + depth_of(u));
        memo[v] = d;
        return d;
    };
    int best = 0;
    for (int v : nodes) best = std::max(best, depth_of(v));
    return best;
}

}  // namespace

DependencyGraph dependency_graph_of(const Pattern& p) {
    DependencyGraph g;
    g.nodes = p.vertices;
    std::set<std::tuple<int, int, bool>> arcs;
    std::set<int> active;
    for (const Command& c : p.commands) {
        switch (c.kind) {
            case Command::Kind::Meas:
                active.insert(c.a);
                for (int q : c.s.qubits()) arcs.insert({q, c.a, false});
                for (int q : c.t.qubits()) arcs.insert({q, c.a, true});
                break;
            case Command::Kind::CorrX:
                active.insert(c.a);
                for (int q : c.s.qubits()) arcs.insert({q, c.a, false});
                break;
            case Command::Kind::CorrZ:
                active.insert(c.a);
                for (int q : c.s.qubits()) arcs.insert({q, c.a, true});
                break;
            default:
                break;
        }
    }
    g.arcs.assign(arcs.begin(), arcs.end());
    g.active.assign(active.begin(), active.end());

    // Cycle check via Kahn's algorithm on the deduplicated arc set.
    std::map<int, int> indeg;
    std::map<int, std::vector<int>> succ;
    std::set<std::pair<int, int>> seen;
    for (const auto& [from, to, z] : g.arcs) {
        (void)z;
        if (!seen.insert({from, to}).second) continue;
        succ[from].push_back(to);
        ++indeg[to];
    }
    std::queue<int> ready;
    std::size_t done = 0;
    for (int v : g.nodes)
        if (!indeg.count(v)) ready.push(v);
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        ++done;
        for (int w : succ[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (done != g.nodes.size())
        throw PreconditionError("outcome dependencies form a cycle");
    return g;
}

std::string dependency_dot(const Pattern& p) {
    DependencyGraph g = dependency_graph_of(p);
    std::ostringstream out;
    out << "digraph dependencies {\n";
    for (int v : g.nodes) out << "  v" << v << " [label=\"" << v << "\"];\n";
    for (const auto& [from, to, z] : g.arcs)
        out << "  v" << from << " -> v" << to << " [arrowhead="
            << (z ? "normal" : "odiamond") << "];\n";
    out << "}\n";
    return out.str();
}

namespace {

std::map<int, std::vector<int>> dep_preds(const DependencyGraph& g) {
    std::map<int, std::vector<int>> preds;
    std::set<std::pair<int, int>> seen;
    for (const auto& [from, to, z] : g.arcs) {
        (void)z;
        if (seen.insert({from, to}).second) preds[to].push_back(from);
    }
    return preds;
}

int standard_quantum_depth(const Pattern& p) {
    DependencyGraph g = dependency_graph_of(p);
    return longest_chain(g.active, dep_preds(g));
}

// A schedulable block of a non-standard command sequence.
struct Unit {
    int weight = 0;
    std::set<int> acted;
    std::set<int> measured;
    std::set<int> sources;
};

std::vector<Unit> units_of(const Pattern& p) {
    std::vector<Unit> units;
    std::size_t i = 0;
    const auto& cmds = p.commands;
    while (i < cmds.size()) {
        const Command& c = cmds[i];
        if (c.kind == Command::Kind::Shift) {  // classical bookkeeping
            ++i;
            continue;
        }
        Unit u;
        if (c.kind == Command::Kind::Ent) {
            // A run of entangling commands executes as one edge-colored
            // schedule.
            Geometry sub;
            while (i < cmds.size() && cmds[i].kind == Command::Kind::Ent) {
                sub.add_edge(cmds[i].a, cmds[i].b);
                u.acted.insert(cmds[i].a);
                u.acted.insert(cmds[i].b);
                ++i;
            }
            u.weight = preparation_depth(sub);
        } else if (c.kind == Command::Kind::CorrX ||
                   c.kind == Command::Kind::CorrZ) {
            // Adjacent corrections on one qubit fuse into one timestep.
            u.weight = 1;
            u.acted.insert(c.a);
            while (i < cmds.size() &&
                   (cmds[i].kind == Command::Kind::CorrX ||
                    cmds[i].kind == Command::Kind::CorrZ) &&
                   cmds[i].a == c.a) {
                for (int q : cmds[i].s.qubits()) u.sources.insert(q);
                ++i;
            }
        } else if (c.kind == Command::Kind::Meas) {
            u.weight = 1;
            u.acted.insert(c.a);
            u.measured.insert(c.a);
            for (int q : c.s.qubits()) u.sources.insert(q);
            for (int q : c.t.qubits()) u.sources.insert(q);
            ++i;
        } else {  // Prep: absorbed into the qubit's first real use
            u.weight = 0;
            u.acted.insert(c.a);
            ++i;
        }
        units.push_back(std::move(u));
    }
    return units;
}

bool intersects(const std::set<int>& a, const std::set<int>& b) {
    for (int x : a)
        if (b.count(x)) return true;
    return false;
}

int wild_quantum_depth(const Pattern& p) {
    std::vector<Unit> units = units_of(p);
    std::vector<int> len(units.size(), 0);
    int best = 0;
    for (std::size_t j = 0; j < units.size(); ++j) {
        int start = 0;
        for (std::size_t i = 0; i < j; ++i) {
            bool linked = intersects(units[i].acted, units[j].acted) ||
                          intersects(units[i].measured, units[j].sources);
            if (linked) start = std::max(start, len[i]);
        }
        len[j] = start + units[j].weight;
        best = std::max(best, len[j]);
    }
    return best;
}

}  // namespace

int quantum_depth(const Pattern& p) {
    if (is_standard(p)) return standard_quantum_depth(p);
    return wild_quantum_depth(p);
}

int quantum_depth_by_layers(const Pattern& p) {
    DependencyGraph g = dependency_graph_of(p);
    std::set<int> remaining(g.active.begin(), g.active.end());
    std::map<int, std::set<int>> preds;
    for (const auto& [from, to, z] : g.arcs) {
        (void)z;
        preds[to].insert(from);
    }
    int layers = 0;
    while (!remaining.empty()) {
        std::vector<int> now;
        for (int v : remaining) {
            bool blocked = false;
            for (int u : preds[v])
                if (remaining.count(u)) blocked = true;
            if (!blocked) now.push_back(v);
        }
        if (now.empty())
            throw PreconditionError("outcome dependencies form a cycle");
        for (int v : now) remaining.erase(v);
        ++layers;
    }
    return layers;
}

int classical_depth(const Pattern& p) {
    DependencyGraph g = dependency_graph_of(p);

    std::map<int, int> cost;  // per-qubit worst parity-tree depth
    for (const Command& c : p.commands) {
        if (c.kind == Command::Kind::Meas)
            cost[c.a] =
                std::max(cost[c.a], ceil_log2(c.s.size() + c.t.size()));
        else if (c.kind == Command::Kind::CorrX ||
                 c.kind == Command::Kind::CorrZ)
            cost[c.a] = std::max(cost[c.a], ceil_log2(c.s.size()));
    }

    std::set<int> remaining(g.active.begin(), g.active.end());
    std::map<int, std::set<int>> preds;
    for (const auto& [from, to, z] : g.arcs) {
        (void)z;
        preds[to].insert(from);
    }
    int total = 0;
    while (!remaining.empty()) {
        std::vector<int> now;
        for (int v : remaining) {
            bool blocked = false;
            for (int u : preds[v])
                if (remaining.count(u)) blocked = true;
            if (!blocked) now.push_back(v);
        }
        if (now.empty())
            throw PreconditionError("outcome dependencies form a cycle");
        int layer_cost = 0;
        for (int v : now) {
            remaining.erase(v);
            layer_cost = std::max(layer_cost, cost[v]);
        }
        total += layer_cost;
    }
    return total;
}

// --- preparation schedule (edge coloring) --------------------------------

namespace {

bool two_color(const Geometry& g, std::map<int, int>& side) {
    for (int v : g.vertices)
        if (!side.count(v)) {
            side[v] = 0;
            std::queue<int> bfs;
            bfs.push(v);
            while (!bfs.empty()) {
                int u = bfs.front();
                bfs.pop();
                for (int w : g.neighbors(u)) {
                    if (!side.count(w)) {
                        side[w] = 1 - side[u];
                        bfs.push(w);
                    } else if (side[w] == side[u]) {
                        return false;
                    }
                }
            }
        }
    return true;
}

struct ColorState {
    // at[v][c] = the neighbor joined to v by the c-colored edge.
    std::map<int, std::map<int, int>> at;
    std::map<std::pair<int, int>, int> edge_color;

    int lookup(int v, int c) const {
        auto it = at.find(v);
        if (it == at.end()) return -1;
        auto jt = it->second.find(c);
        return jt == it->second.end() ? -1 : jt->second;
    }
    bool free_at(int v, int c) const { return lookup(v, c) == -1; }
    int first_free(int v, int max_color) const {
        for (int c = 1; c <= max_color; ++c)
            if (free_at(v, c)) return c;
        return -1;
    }
    void set(int u, int v, int c) {
        at[u][c] = v;
        at[v][c] = u;
        edge_color[{std::min(u, v), std::max(u, v)}] = c;
    }
    void unset(int u, int v) {
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        int c = edge_color.at(key);
        at[u].erase(c);
        at[v].erase(c);
        edge_color.erase(key);
    }
};

// Swaps colors a and b along the alternating path that starts at v with
// an a-colored edge.  Returns the far end of the path.
int invert_path(ColorState& st, int v, int a, int b) {
    std::vector<std::tuple<int, int, int>> path;  // (x, y, color)
    int cur = v;
    int want = a;
    while (true) {
        int nxt = st.lookup(cur, want);
        if (nxt == -1) break;
        path.emplace_back(cur, nxt, want);
        cur = nxt;
        want = (want == a) ? b : a;
    }
    for (const auto& [x, y, c] : path) {
        (void)c;
        st.unset(x, y);
    }
    for (const auto& [x, y, c] : path) st.set(x, y, c == a ? b : a);
    return cur;
}

EdgeColoring finish(ColorState& st, bool bipartite) {
    EdgeColoring out;
    out.bipartite = bipartite;
    out.color = st.edge_color;
    for (const auto& [e, c] : out.color) {
        (void)e;
        out.colors = std::max(out.colors, c);
    }
    return out;
}

EdgeColoring koenig_coloring(const Geometry& g, int delta) {
    ColorState st;
    for (const auto& [u, v] : g.edges) {
        int a = st.first_free(u, delta);
        int b = st.first_free(v, delta);
        if (!st.free_at(v, a)) {
            // Free a at v by flipping the (a,b)-alternating path from v;
            // in a bipartite graph it cannot end at u.
            int end = invert_path(st, v, a, b);
            if (end == u || !st.free_at(u, a) || !st.free_at(v, a))
                throw Error("internal: alternating-path recoloring failed");
        }
        st.set(u, v, a);
    }
    return finish(st, true);
}

EdgeColoring misra_gries_coloring(const Geometry& g, int delta) {
    const int palette = delta + 1;
    ColorState st;
    for (const auto& [u, v] : g.edges) {
        // Maximal fan of u starting at v: each next edge's color is free
        // at the previous fan vertex.
        std::vector<int> fan{v};
        std::set<int> used{v};
        bool grew = true;
        while (grew) {
            grew = false;
            for (int w : g.neighbors(u)) {
                if (used.count(w)) continue;
                auto it = st.edge_color.find(
                    {std::min(u, w), std::max(u, w)});
                if (it == st.edge_color.end()) continue;
                if (st.free_at(fan.back(), it->second)) {
                    fan.push_back(w);
                    used.insert(w);
                    grew = true;
                    break;
                }
            }
        }
        int c = st.first_free(u, palette);
        int d = st.first_free(fan.back(), palette);
        if (c != d) invert_path(st, u, d, c);

        // Find the shortest fan prefix whose tip can take d.
        auto is_fan_prefix = [&](std::size_t k) {
            for (std::size_t i = 0; i < k; ++i) {
                auto it = st.edge_color.find(
                    {std::min(u, fan[i + 1]), std::max(u, fan[i + 1])});
                if (it == st.edge_color.end()) return false;
                if (!st.free_at(fan[i], it->second)) return false;
            }
            return true;
        };
        std::size_t w = fan.size();
        for (std::size_t j = 0; j < fan.size(); ++j) {
            if (st.free_at(fan[j], d) && is_fan_prefix(j)) {
                w = j;
                break;
            }
        }
        if (w == fan.size())
            throw Error("internal: fan rotation target missing");

        // Rotate: each fan edge takes its successor's color, the tip
        // takes d.
        for (std::size_t i = 0; i < w; ++i) {
            auto key = std::make_pair(std::min(u, fan[i + 1]),
                                      std::max(u, fan[i + 1]));
            int ci = st.edge_color.at(key);
            st.unset(u, fan[i + 1]);
            st.set(u, fan[i], ci);
        }
        st.set(u, fan[w], d);
    }
    return finish(st, false);
}

}  // namespace

bool is_bipartite(const Geometry& g) {
    std::map<int, int> side;
    return two_color(g, side);
}

EdgeColoring preparation_schedule(const Geometry& g) {
    if (g.edges.empty()) {
        EdgeColoring out;
        out.bipartite = true;
        return out;
    }
    int delta = g.max_degree();
    EdgeColoring out = is_bipartite(g) ? koenig_coloring(g, delta)
                                       : misra_gries_coloring(g, delta);
    // Propriety: no two same-colored edges share an endpoint.
    std::set<std::pair<int, int>> seen;  // (vertex, color)
    for (const auto& [e, c] : out.color) {
        if (!seen.insert({e.first, c}).second ||
            !seen.insert({e.second, c}).second)
            throw Error("internal: improper edge coloring");
    }
    if (out.color.size() != g.edges.size())
        throw Error("internal: uncolored edges remain");
    return out;
}

int preparation_depth(const Geometry& g) {
    return preparation_schedule(g).colors;
}

}  // namespace mbqc
