// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#pragma once

#include <string>
#include <vector>

#include "mbqc/angle.hpp"

namespace mbqc {

// One circuit gate.  Wires are 0-based; wire 0 is the most significant
// qubit in matrix conventions.
struct Gate {
    enum class Kind {
        J,   // J(angle) = H * diag(1, e^{i*angle}) on wire a
        CZ,  // controlled-Z between wires a and b
        H,   // Hadamard on wire a
        ZP,  // phase diag(1, e^{i*angle}) on wire a
        CX,  // controlled-X, control a, target b
        MZ,  // computational-basis readout annotation on wire a
    };

    Kind kind;
    int a = -1;
    int b = -1;
    Angle angle;

    static Gate j(int q, Angle a);
    static Gate cz(int a, int b);
    static Gate h(int q);
    static Gate zp(int q, Angle a);
    static Gate cx(int c, int t);
    static Gate mz(int q);

    std::vector<int> wires() const;  // wires the gate acts on (MZ: none)
    bool operator==(const Gate& o) const;
    std::string str() const;
};

struct Circuit {
    // Source circuits use the {J, CZ} generating set; target circuits use
    // {H, ZP, CZ, CX} plus MZ readout annotations.
    enum class Dialect { Source, Target };

    int n = 0;  // wire count
    Dialect dialect = Dialect::Source;
    std::vector<Gate> gates;

    bool operator==(const Circuit& o) const {
        return n == o.n && dialect == o.dialect && gates == o.gates;
    }
};

// Throws PreconditionError when a gate is outside the dialect's gate set
// or touches a wire outside [0, n).
void require_well_formed(const Circuit& c);

// Greedy list schedule: each gate starts at 1 + the latest busy step of
// its wires.  MZ annotations are free.  Returns the number of steps.
int circuit_depth(const Circuit& c);

}  // namespace mbqc
