// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mbqc/angle.hpp"
#include "mbqc/depth.hpp"
#include "mbqc/geometry.hpp"
#include "mbqc/pattern.hpp"

namespace mbqc {

// A causal flow: an injective successor map f from measured vertices to
// non-inputs such that f(v) is a neighbor of v and the induced partial
// order is consistent.  `layers` is the coarsest schedule: layer k holds
// the vertices whose longest dependency chain has length k+1.
// A vertex mapped to itself is a relaxed self-loop (see relax_with_loops);
// proper flows returned by find_flow never contain one.
struct Flow {
    std::map<int, int> f;
    std::vector<std::vector<int>> layers;

    int depth() const { return static_cast<int>(layers.size()); }
    bool has_loop() const {
        for (const auto& [v, w] : f)
            if (v == w) return true;
        return false;
    }
};

// Dependency arcs induced by a flow on a geometry: v -> f(v) (omitted for
// self-loops; a self-looped v instead contributes v -> y for every
// neighbor y), and v -> y for every neighbor y of f(v) other than v.
// Sorted and unique.
std::vector<std::pair<int, int>> flow_arcs(const Geometry& g, const Flow& fl);

// Builds a Flow from a successor map: derives the arcs, rejects cyclic
// dependency (returns nullopt), and computes the layering.
std::optional<Flow> make_flow(const Geometry& g, std::map<int, int> f);

// Backward construction: starting from the outputs, repeatedly matches a
// correctable vertex with its unique unresolved neighbor.  Returns
// nullopt when the geometry has no causal flow.  Requires equally many
// inputs and outputs (PreconditionError otherwise).
std::optional<Flow> find_flow(const Geometry& g);

// Tries to replace f-successors of Y-measured vertices (angle pi/2 or
// 3*pi/2) by self-loops, freeing their successor.  A candidate is
// accepted when the rebuilt arc set stays acyclic.  Candidates are
// visited in ascending order; inputs and vertices serving as another
// vertex's successor are skipped.
Flow relax_with_loops(const Geometry& g, Flow fl,
                      const std::map<int, Angle>& angles);

// One edge of an influencing path.  is_flow marks steps along the flow
// (v to f(v)); edges walked against the flow or between unrelated
// neighbors are non-flow.
struct EdgeStep {
    int from = -1;
    int to = -1;
    bool is_flow = false;
    bool operator==(const EdgeStep& o) const {
        return from == o.from && to == o.to && is_flow == o.is_flow;
    }
};

// A walk along which measurement signals can propagate: starts at an
// input (or a self-looped vertex, with loop_start set), follows graph
// edges, begins with a flow step (the self-loop counts for loop starts),
// never takes two non-flow steps in a row, never repeats a vertex, and
// ends on an output.
struct InfluencingPath {
    std::vector<int> vertices;
    std::vector<EdgeStep> steps;
    bool loop_start = false;
};

// Enumerates all influencing paths, drops those that are proper suffixes
// of longer ones, and returns the rest sorted by vertex sequence.
// Throws ResourceError beyond 10^6 paths.
std::vector<InfluencingPath> influencing_paths(const Geometry& g,
                                               const Flow& fl);

// The standard pattern realizing the geometry with the given flow: all
// non-inputs prepared, every edge entangled, measurements in layer order
// with s-domain {f^-1(i)} and t-domain {j : f(j) ~ i, j != i}, then X/Z
// corrections on the outputs.  `angles` must cover every measured vertex.
Pattern flow_pattern(const Geometry& g, const Flow& fl,
                     const std::map<int, Angle>& angles);

// The one-dimensional pattern a single influencing path induces: its
// vertices with their real angles, dependencies given by the step kinds
// (a flow step feeds the next vertex's s-domain and the vertex after
// next's t-domain; a loop start feeds the second vertex's t-domain), and
// terminal corrections on the unmeasured vertices.
Pattern line_pattern(const InfluencingPath& path,
                     const std::map<int, Angle>& angles);

// Largest value over influencing paths of e - (n + p + l) + 1, where e
// counts flow steps (a loop start reclassifies its first step), n the
// remaining non-flow steps, p the flow steps into Pauli-measured
// vertices, and l is 1 for loop starts.
int depth_upper_bound(const Geometry& g, const Flow& fl,
                      const std::map<int, Angle>& angles);

// Exact adaptive depth: every influencing path is simplified in
// isolation (Pauli simplification, then signal shifting of its line
// pattern) and measured; the pattern's depth is the worst path's.  Also
// fills the upper bound, the classical depth and the preparation depth.
DepthReport characterized_depth(const Geometry& g, const Flow& fl,
                                const std::map<int, Angle>& angles);

// Convenience overload: recovers geometry, flow (no loop relaxation) and
// angles from a pattern in flow form.  Throws PreconditionError when the
// underlying geometry has no flow.
DepthReport characterized_depth(const Pattern& p);

// True when a word of Pauli letters, read along a line of measurements,
// erases the dependency of the far end on the near end: between (and
// around) the Y letters every maximal X run must have odd length.
// Non-Pauli letters are rejected with PreconditionError.
bool is_reset_sequence(const std::vector<PauliClass>& word);

}  // namespace mbqc
