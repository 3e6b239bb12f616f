// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#pragma once

#include <map>
#include <string>
#include <vector>

#include "mbqc/command.hpp"
#include "mbqc/geometry.hpp"

namespace mbqc {

// A measurement pattern: computation space V, input/output subsets, and a
// command sequence stored in execution order (first command runs first).
struct Pattern {
    std::vector<int> vertices;  // ascending, unique
    std::vector<int> inputs;    // ascending subset of vertices
    std::vector<int> outputs;   // ascending subset of vertices
    std::vector<Command> commands;

    bool is_input(int v) const;
    bool is_output(int v) const;

    // Qubits carrying a Meas command, ascending.
    std::vector<int> measured() const;

    // Measurement angles keyed by qubit.
    std::map<int, Angle> angles() const;

    bool operator==(const Pattern& o) const {
        return vertices == o.vertices && inputs == o.inputs &&
               outputs == o.outputs && commands == o.commands;
    }
};

// Runnability checks.  Returns one message per violation, each prefixed
// with the offending command index when one exists.  The conditions are:
// every qubit referenced is in V; non-inputs are prepared exactly once
// before first use and inputs never; no command acts on a qubit after its
// measurement; every non-output is measured exactly once and outputs
// never; signal domains only reference previously measured qubits.
std::vector<std::string> validate_pattern(const Pattern& p);

// Throws PreconditionError listing all violations if the pattern is not
// runnable.
void require_valid(const Pattern& p);

// True if commands are sorted as preparations, entanglements,
// measurements, then corrections, with no Shift commands.
bool is_standard(const Pattern& p);

// True if no measurement command carries a t-domain (and no Shifts).
bool has_trivial_t_domains(const Pattern& p);

bool has_shift_commands(const Pattern& p);

// The open graph underlying the pattern: vertices and input/output sets
// are copied, edges are collected from Ent commands.
Geometry geometry_of(const Pattern& p);

}  // namespace mbqc
