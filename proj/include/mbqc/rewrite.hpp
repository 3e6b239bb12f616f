// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mbqc/pattern.hpp"

namespace mbqc {

// One applied rewrite.  `rule` names the local transformation and `index`
// the command position (in the pattern as it was at that moment) where it
// fired:
//   EX    X then E on a shared qubit  ->  E, then Z on the far end, then X
//   EZ    Z then E on a shared qubit  ->  E then Z
//   MX    X then M on the same qubit  ->  M with s-domain toggled
//   MZ    Z then M on the same qubit  ->  M with t-domain toggled
//   FC    swap of two adjacent commands on disjoint qubits that are out
//         of standard order
//   PX    measurement at angle 0 or pi drops its s-domain
//   PY    measurement at angle pi/2 or 3*pi/2 folds s into t, drops s
//   SHIFT measurement t-domain cleared; the toggle is forwarded into every
//         later domain that mentions the measured qubit
//   CANON the trailing correction block is merged per (qubit, kind) and
//         sorted (ascending qubit, X before Z)
struct RewriteStep {
    std::string rule;
    std::size_t index = 0;
    bool operator==(const RewriteStep& o) const {
        return rule == o.rule && index == o.index;
    }
};

// A replayable log of rewrite applications.
struct RewriteTrace {
    std::vector<RewriteStep> steps;
    // Fingerprint of the command list the trace was recorded against.
    std::size_t origin = 0;

    // Mechanically reapplies the recorded steps to `start`.  Replaying the
    // trace of a rewrite on its own input reproduces the output bit for
    // bit; this is the determinism witness used by the tests.  A start
    // pattern other than the recorded origin is rejected.
    Pattern replay(const Pattern& start) const;
};

struct RewriteResult {
    Pattern pattern;
    RewriteTrace trace;
};

// Sorts the command sequence into preparations, entanglements,
// measurements, then corrections, by repeatedly applying the local rules
// above (EX/EZ/MX/MZ/FC).  The input must be runnable and free of Shift
// commands; throws PreconditionError otherwise.
RewriteResult standardize(const Pattern& p);

// Removes all measurement t-domains from a standard pattern by forwarding
// each one into later domains, then canonicalizes the correction block.
// Requires standard form.
RewriteResult signal_shift(const Pattern& p);

// Drops dependencies that cannot change a Pauli-basis measurement:
// s-domains of measurements at 0/pi vanish outright, s-domains at
// pi/2 / 3*pi/2 fold into the t-domain.  Requires standard form.
RewriteResult pauli_simplify(const Pattern& p);

}  // namespace mbqc
