// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#pragma once

#include <string>
#include <vector>

#include "mbqc/angle.hpp"
#include "mbqc/signal.hpp"

namespace mbqc {

// One pattern command.  Commands are stored in execution order: the first
// element of a command sequence is applied first.
struct Command {
    enum class Kind {
        Prep,   // prepare qubit a in |+>
        Ent,    // apply CZ between qubits a and b
        Meas,   // destructively measure qubit a at `angle`, with s/t domains
        CorrX,  // apply X to qubit a conditioned on signal s
        CorrZ,  // apply Z to qubit a conditioned on signal s
        Shift,  // reinterpret the recorded outcome of a: s_a ^= t
    };

    Kind kind;
    int a = -1;    // acted qubit (first endpoint for Ent)
    int b = -1;    // second endpoint, Ent only
    Angle angle;   // Meas only
    Signal s;      // Meas s-domain; CorrX/CorrZ condition
    Signal t;      // Meas t-domain; Shift domain

    static Command prep(int q);
    static Command ent(int i, int j);
    static Command meas(int q, Angle angle, Signal s = {}, Signal t = {});
    static Command corr_x(int q, Signal s);
    static Command corr_z(int q, Signal s);
    static Command shift(int q, Signal t);

    // Qubits whose state the command touches (both endpoints for Ent,
    // none for Shift, which is classical bookkeeping).
    std::vector<int> acted() const;
    // Qubits whose measurement outcomes the command reads.
    std::vector<int> signal_sources() const;

    // Standardization order class: Prep=0, Ent=1, Meas=2, corrections=3.
    // Shift commands sort last; they are not part of standard form.
    int order_class() const;

    bool operator==(const Command& o) const;
    std::string str() const;
};

}  // namespace mbqc
