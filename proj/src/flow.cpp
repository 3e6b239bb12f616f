// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#include "mbqc/flow.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "mbqc/errors.hpp"
#include "mbqc/rewrite.hpp"

namespace mbqc {

std::vector<std::pair<int, int>> flow_arcs(const Geometry& g,
                                           const Flow& fl) {
    std::set<std::pair<int, int>> arcs;
    for (const auto& [v, fv] : fl.f) {
        if (v != fv) arcs.insert({v, fv});
        for (int y : g.neighbors(fv))
            if (y != v) arcs.insert({v, y});
    }
    return {arcs.begin(), arcs.end()};
}

std::optional<Flow> make_flow(const Geometry& g, std::map<int, int> f) {
    Flow fl;
    fl.f = std::move(f);
    auto arcs = flow_arcs(g, fl);

    std::map<int, std::vector<int>> preds;
    std::map<int, int> indeg;
    for (const auto& [from, to] : arcs) {
        preds[to].push_back(from);
        ++indeg[to];
    }
    // Longest-path layering via Kahn's algorithm.
    std::map<int, int> layer;
    std::queue<int> ready;
    for (int v : g.vertices)
        if (!indeg.count(v)) {
            ready.push(v);
            layer[v] = 1;
        }
    std::size_t done = 0;
    std::map<int, std::vector<int>> succ;
    for (const auto& [from, to] : arcs) succ[from].push_back(to);
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        ++done;
        for (int w : succ[v]) {
            layer[w] = std::max(layer[w], layer[v] + 1);
            if (--indeg[w] == 0) ready.push(w);
        }
    }
    if (done != g.vertices.size()) return std::nullopt;  // cyclic

    int depth = 0;
    for (const auto& [v, k] : layer) {
        (void)v;
        depth = std::max(depth, k);
    }
    fl.layers.assign(static_cast<std::size_t>(depth), {});
    for (int v : g.vertices)
        fl.layers[static_cast<std::size_t>(layer[v] - 1)].push_back(v);
    for (auto& l : fl.layers) std::sort(l.begin(), l.end());
    return fl;
}

std::optional<Flow> find_flow(const Geometry& g) {
    // The successor map sends every measured vertex to a distinct non-input,
    // so a geometry with more inputs than outputs can never carry a flow.
    if (g.inputs.size() > g.outputs.size())
        throw PreconditionError(
            "flow search requires at least as many outputs as inputs");

    std::set<int> resolved(g.outputs.begin(), g.outputs.end());
    std::set<int> used_as_image;
    std::map<int, int> f;

    const std::size_t want = g.vertices.size();
    while (resolved.size() < want) {
        // A resolved non-input u that is nobody's successor yet and touches
        // exactly one unresolved vertex w is a candidate corrector for w.
        // Among candidates, commit the lowest-degree one first (ties by id):
        // a pendant vertex can only ever serve its single neighbour, so
        // spending it never blocks another assignment.
        int best_u = -1;
        int best_w = -1;
        std::size_t best_deg = 0;
        for (int u : g.vertices) {
            if (!resolved.count(u) || g.is_input(u)) continue;
            if (used_as_image.count(u)) continue;
            int w = -1;
            int count = 0;
            for (int y : g.neighbors(u))
                if (!resolved.count(y)) {
                    w = y;
                    ++count;
                }
            if (count != 1) continue;
            std::size_t deg = g.neighbors(u).size();
            if (best_u < 0 || deg < best_deg) {
                best_u = u;
                best_w = w;
                best_deg = deg;
            }
        }
        if (best_u < 0) return std::nullopt;
        f[best_w] = best_u;
        used_as_image.insert(best_u);
        resolved.insert(best_w);
    }
    return make_flow(g, std::move(f));
}

Flow relax_with_loops(const Geometry& g, Flow fl,
                      const std::map<int, Angle>& angles) {
    for (int v : g.vertices) {
        auto it = fl.f.find(v);
        if (it == fl.f.end() || it->second == v) continue;
        if (g.is_input(v)) continue;
        auto ang = angles.find(v);
        if (ang == angles.end() ||
            ang->second.pauli_class() != PauliClass::Y)
            continue;
        bool is_image = false;
        for (const auto& [w, fw] : fl.f)
            if (w != v && fw == v) is_image = true;
        if (is_image) continue;

        std::map<int, int> trial = fl.f;
        trial[v] = v;
        if (auto relaxed = make_flow(g, std::move(trial)))
            fl = std::move(*relaxed);
    }
    return fl;
}

namespace {

constexpr std::size_t kPathBudget = 1000000;

void dfs_paths(const Geometry& g, const std::map<int, int>& f,
               std::vector<int>& verts, std::vector<EdgeStep>& steps,
               std::set<int>& visited, bool loop_start,
               std::vector<InfluencingPath>& out) {
    int cur = verts.back();
    if (g.is_output(cur) && !steps.empty()) {
        if (out.size() >= kPathBudget)
            throw ResourceError("influencing path enumeration exceeds 10^6");
        out.push_back({verts, steps, loop_start});
    }
    bool last_was_flow =
        steps.empty() ? true  // virtual loop step, or path start
                      : steps.back().is_flow;
    for (int y : g.neighbors(cur)) {
        if (visited.count(y)) continue;
        auto it = f.find(cur);
        bool is_flow = it != f.end() && it->second == y;
        if (!is_flow && !last_was_flow) continue;
        // The very first step of a non-loop path must follow the flow.
        if (steps.empty() && !loop_start && !is_flow) continue;
        verts.push_back(y);
        steps.push_back({cur, y, is_flow});
        visited.insert(y);
        dfs_paths(g, f, verts, steps, visited, loop_start, out);
        visited.erase(y);
        steps.pop_back();
        verts.pop_back();
    }
}

}  // namespace

std::vector<InfluencingPath> influencing_paths(const Geometry& g,
                                               const Flow& fl) {
    std::set<int> starts(g.inputs.begin(), g.inputs.end());
    std::set<int> loops;
    for (const auto& [v, fv] : fl.f)
        if (v == fv) loops.insert(v);
    starts.insert(loops.begin(), loops.end());

    std::vector<InfluencingPath> all;
    for (int s : starts) {
        std::vector<int> verts{s};
        std::vector<EdgeStep> steps;
        std::set<int> visited{s};
        dfs_paths(g, fl.f, verts, steps, visited, loops.count(s) != 0, all);
    }

    // Drop paths that are proper suffixes of other paths.
    std::set<std::vector<int>> suffixes;
    for (const auto& p : all)
        for (std::size_t k = 1; k < p.vertices.size(); ++k)
            suffixes.insert(
                std::vector<int>(p.vertices.begin() +
                                     static_cast<std::ptrdiff_t>(k),
                                 p.vertices.end()));
    std::vector<InfluencingPath> kept;
    for (auto& p : all)
        if (!suffixes.count(p.vertices)) kept.push_back(std::move(p));

    std::sort(kept.begin(), kept.end(),
              [](const InfluencingPath& a, const InfluencingPath& b) {
                  return a.vertices < b.vertices;
              });
    return kept;
}

Pattern flow_pattern(const Geometry& g, const Flow& fl,
                     const std::map<int, Angle>& angles) {
    Pattern p;
    p.vertices = g.vertices;
    p.inputs = g.inputs;
    p.outputs = g.outputs;

    for (int v : g.measured())
        if (!angles.count(v))
            throw PreconditionError("no measurement angle for qubit " +
                                    std::to_string(v));

    for (int v : g.vertices)
        if (!g.is_input(v)) p.commands.push_back(Command::prep(v));
    for (const auto& [a, b] : g.edges)
        p.commands.push_back(Command::ent(a, b));

    std::map<int, int> finv;  // image -> source
    for (const auto& [v, fv] : fl.f)
        if (v != fv) finv[fv] = v;

    auto s_dom = [&](int i) {
        Signal s;
        auto it = finv.find(i);
        if (it != finv.end()) s.insert(it->second);
        return s;
    };
    auto t_sources = [&](int i) {
        std::vector<int> js;
        for (const auto& [j, fj] : fl.f)
            if (j != i && g.has_edge(fj, i)) js.push_back(j);
        return js;
    };

    for (const auto& lay : fl.layers)
        for (int v : lay) {
            if (g.is_output(v)) continue;
            Signal t;
            for (int j : t_sources(v)) t.insert(j);
            p.commands.push_back(
                Command::meas(v, angles.at(v), s_dom(v), t));
        }

    for (int o : g.outputs) {
        Signal sx = s_dom(o);
        if (!sx.empty()) p.commands.push_back(Command::corr_x(o, sx));
        for (int j : t_sources(o))
            p.commands.push_back(Command::corr_z(o, Signal{j}));
    }
    return p;
}

Pattern line_pattern(const InfluencingPath& path,
                     const std::map<int, Angle>& angles) {
    const auto& w = path.vertices;
    const auto& eps = path.steps;

    Pattern p;
    p.vertices = w;
    std::sort(p.vertices.begin(), p.vertices.end());
    p.inputs = p.vertices;
    for (int v : p.vertices)
        if (!angles.count(v)) p.outputs.push_back(v);

    auto flow_into = [&](std::size_t k) {  // step k-1 exists and is flow
        return k >= 1 && eps[k - 1].is_flow;
    };
    auto flow_two_back = [&](std::size_t k) {
        if (k == 1 && path.loop_start) return true;  // virtual self-step
        return k >= 2 && eps[k - 2].is_flow;
    };

    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!angles.count(w[k])) continue;
        Signal s, t;
        if (flow_into(k)) s.insert(w[k - 1]);
        if (flow_two_back(k)) t.insert(w[k == 1 ? 0 : k - 2]);
        p.commands.push_back(Command::meas(w[k], angles.at(w[k]), s, t));
    }
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (angles.count(w[k])) continue;
        if (flow_into(k))
            p.commands.push_back(Command::corr_x(w[k], Signal{w[k - 1]}));
        if (flow_two_back(k))
            p.commands.push_back(
                Command::corr_z(w[k], Signal{w[k == 1 ? 0 : k - 2]}));
    }
    return p;
}

int depth_upper_bound(const Geometry& g, const Flow& fl,
                      const std::map<int, Angle>& angles) {
    auto pauli_target = [&](int v) {
        auto it = angles.find(v);
        return it != angles.end() && it->second.is_pauli();
    };
    auto generic_target = [&](int v) {
        auto it = angles.find(v);
        return it != angles.end() && !it->second.is_pauli();
    };
    int best = 0;
    for (const auto& path : influencing_paths(g, fl)) {
        int e = path.loop_start ? 1 : 0;
        int n = 0;
        int pl = 0;
        // The loop edge buys a layer only when the vertex right after the
        // loop start carries a generic measurement: that measurement can
        // then join the first layer.
        int loop = path.loop_start && !path.steps.empty() &&
                           generic_target(path.steps[0].to)
                       ? 1
                       : 0;
        for (std::size_t k = 0; k < path.steps.size(); ++k) {
            // A loop start reclassifies its first step as a flow step.
            bool as_flow =
                path.steps[k].is_flow || (k == 0 && path.loop_start);
            if (path.steps[k].is_flow) ++e;
            else if (!(k == 0 && path.loop_start)) ++n;
            if (as_flow && pauli_target(path.steps[k].to)) ++pl;
        }
        best = std::max(best, e - (n + pl + loop) + 1);
    }
    return best;
}

DepthReport characterized_depth(const Geometry& g, const Flow& fl,
                                const std::map<int, Angle>& angles) {
    DepthReport rep;
    for (const auto& path : influencing_paths(g, fl)) {
        Pattern lp = line_pattern(path, angles);
        Pattern simplified =
            signal_shift(pauli_simplify(lp).pattern).pattern;
        rep.characterized =
            std::max(rep.characterized, quantum_depth(simplified));
    }
    rep.upper_bound = depth_upper_bound(g, fl, angles);
    rep.preparation = preparation_depth(g);
    if (!fl.has_loop()) {
        Pattern fp = flow_pattern(g, fl, angles);
        Pattern simplified =
            signal_shift(pauli_simplify(fp).pattern).pattern;
        rep.classical = classical_depth(simplified);
    }
    return rep;
}

DepthReport characterized_depth(const Pattern& p) {
    Geometry g = geometry_of(p);
    auto fl = find_flow(g);
    if (!fl)
        throw PreconditionError("pattern not in flow form");
    return characterized_depth(g, *fl, p.angles());
}

bool is_reset_sequence(const std::vector<PauliClass>& word) {
    for (PauliClass p : word)
        if (p == PauliClass::None)
            throw PreconditionError(
                "reset sequence requires Pauli letters only");
    // Odd runs are necessarily nonempty, so one parity counter suffices.
    std::size_t run = 0;
    bool ok = true;
    for (PauliClass p : word) {
        if (p == PauliClass::Y) {
            ok = ok && (run % 2 == 1);
            run = 0;
        } else {
            ++run;
        }
    }
    return ok && (run % 2 == 1);
}

}  // namespace mbqc
