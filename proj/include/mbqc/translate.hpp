// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#pragma once

#include <map>
#include <vector>

#include "mbqc/circuit.hpp"
#include "mbqc/depth.hpp"
#include "mbqc/flow.hpp"
#include "mbqc/pattern.hpp"

namespace mbqc {

// How a pattern vertex relates to the source circuit's wires.
enum class VertexRole {
    Input,        // wire entry point, measured away
    Output,       // final carrier of a wire
    InputOutput,  // wire untouched by J gates: entry and exit at once
    Auxiliary,    // interior vertex, created and measured
};

enum class TranslateVariant {
    Direct,   // J and CZ map straight onto the open graph
    Cluster,  // extra teleports keep the graph degree bounded by 4
};

struct TranslationStats {
    int qubits = 0;               // pattern vertices
    int measurements = 0;         // measured vertices
    int teleport_insertions = 0;  // positions with consecutive CZ on a wire
    int predicted_depth_bound = 0;
};

struct Translation {
    Pattern pattern;  // standardized and signal-shifted
    Geometry geometry;
    Flow flow;
    std::map<int, Angle> angles;
    std::map<int, VertexRole> roles;
    TranslationStats stats;
};

// Removes CZ pairs that cancel: a CZ annihilates an earlier CZ on the
// same wire pair when no intervening gate touches either wire.
Circuit cz_normalize(const Circuit& c);

// Translates a source-dialect circuit into a measurement pattern: J(a)
// extends the acted wire by a fresh vertex (measured at -a), CZ becomes
// an entangling edge between the current wire endpoints.  The Cluster
// variant inserts a two-step teleport before a CZ would land on an
// endpoint that last saw a CZ, keeping every vertex degree at most 4.
Translation circuit_to_pattern(const Circuit& c,
                               TranslateVariant v = TranslateVariant::Direct);

enum class FanInKind {
    Linear,  // one CX per source, chained onto the target wire
    Tree,    // balanced pairing over fresh ancillas, ceil(log2 k) levels
};

// How one measurement's s-domain was accumulated in the emitted circuit.
struct FanInInfo {
    int target_wire = -1;
    FanInKind kind = FanInKind::Linear;
    int sources = 0;
    std::vector<int> ancillas;
    int levels = 0;
};

struct CircuitEmission {
    Circuit circuit;              // target dialect, with MZ annotations
    std::map<int, int> wire_of;   // pattern vertex -> wire
    std::vector<FanInInfo> fanins;
    int ancilla_count = 0;
};

// Emits the coherent circuit equivalent to a standard pattern with
// trivial t-domains: non-input vertices start as |0> and are Hadamard-
// rotated, edges become CZ, a measurement at angle a becomes its s-domain
// fanned in (as CX), then a phase of -a, then H, with the wire read out
// in the computational basis; X / Z corrections become CX / CZ.  Emission
// is interleaved so that only a window of wires is ever live.
CircuitEmission pattern_to_circuit_ex(const Pattern& p,
                                      FanInKind k = FanInKind::Tree);
Circuit pattern_to_circuit(const Pattern& p, FanInKind k = FanInKind::Tree);

// An influencing path of the translated circuit together with its word:
// the J angles of the measured path vertices, in path order.
struct CircuitPath {
    InfluencingPath path;
    std::vector<Angle> word;
};

std::vector<CircuitPath> circuit_influencing_paths(const Circuit& c);

// D': the largest number of chained non-Pauli J gates along any
// influencing path, where two successive non-Pauli letters are chained
// when the later one still depends on the earlier after the path's line
// pattern is simplified.  A circuit with J gates but no non-Pauli letter
// counts 1; a circuit without J gates counts 0.
int consecutive_j_depth(const Circuit& c);

struct ParallelizeResult {
    Translation translation;
    Pattern simplified;  // pauli-simplified and re-shifted pattern
    CircuitEmission emission;
    DepthReport report;
};

// The full pipeline: translate, Pauli-simplify, signal-shift, analyze
// depth, and emit the parallelized target circuit.
ParallelizeResult parallelize_circuit(const Circuit& c,
                                      FanInKind k = FanInKind::Tree);

}  // namespace mbqc
