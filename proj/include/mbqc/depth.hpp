// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mbqc/geometry.hpp"
#include "mbqc/pattern.hpp"

namespace mbqc {

// Outcome-dependency digraph of a pattern.  There is an arc q -> i when a
// command on qubit i reads the outcome of q: through an X-type domain
// (measurement s-domain or X correction) or a Z-type domain (measurement
// t-domain or Z correction).  Shift commands are classical bookkeeping
// and contribute no arcs.
struct DependencyGraph {
    std::vector<int> nodes;                         // all pattern vertices
    std::vector<std::tuple<int, int, bool>> arcs;   // (from, to, is_z), sorted
    std::vector<int> active;  // vertices carrying a Meas or correction
};

// Builds the digraph and verifies it is acyclic (it always is for
// runnable patterns, whose domains reference earlier outcomes only).
DependencyGraph dependency_graph_of(const Pattern& p);

// Graphviz rendering: X-dependencies use arrowhead=odiamond,
// Z-dependencies arrowhead=normal.  Deterministic ordering.
std::string dependency_dot(const Pattern& p);

// Number of adaptive rounds the pattern needs.
//
// For standard patterns this is the longest chain of active vertices in
// the dependency digraph (1 for a dependency-free pattern with at least
// one active vertex, 0 for none): measurements and corrections whose
// domains are already resolved run in the same round, entanglement is
// accounted separately by preparation_depth.
//
// For non-standard patterns the commands are first grouped into units  —
// a maximal run of consecutive Ent commands (weight: preparation depth of
// the touched subgraph), a single Meas (weight 1), a maximal run of
// adjacent corrections on one qubit (weight 1), Prep and Shift (weight
// 0) — and the result is the heaviest path through the unit digraph,
// whose arcs connect units sharing a qubit or linked by a signal.
int quantum_depth(const Pattern& p);

// Independent computation for standard patterns: counts peeling layers of
// the active dependency subgraph.  Used as a cross-check invariant.
int quantum_depth_by_layers(const Pattern& p);

// Depth of the classical side-processing: evaluating a k-term parity
// takes ceil(log2 k) rounds with a binary tree; each qubit's cost is the
// worst of its commands, each dependency layer costs its worst qubit, and
// layers run in sequence.
int classical_depth(const Pattern& p);

// A proper edge coloring of the geometry, interpreted as the schedule of
// entangling operations: all edges of one color commute and run in one
// timestep.  Colors are 1-based.
struct EdgeColoring {
    std::map<std::pair<int, int>, int> color;  // keyed by (a<b)
    int colors = 0;
    bool bipartite = false;
};

// Bipartite graphs get an optimal coloring with exactly max-degree
// colors; general graphs use at most max-degree + 1.
EdgeColoring preparation_schedule(const Geometry& g);

// Number of entangling timesteps, i.e. preparation_schedule(g).colors.
int preparation_depth(const Geometry& g);

bool is_bipartite(const Geometry& g);

// Depth figures for one pattern/geometry, filled in by the flow and
// translation layers.
struct DepthReport {
    int characterized = 0;   // exact adaptive depth from path analysis
    int upper_bound = 0;     // combinatorial bound from path statistics
    int classical = 0;       // classical_depth of the simplified pattern
    int preparation = 0;     // entangling timesteps of the geometry
    int consecutive_j = -1;  // longest chained non-Pauli run (circuits; -1 n/a)
    int realized = -1;       // depth of the emitted circuit (-1 until emitted)
};

}  // namespace mbqc
