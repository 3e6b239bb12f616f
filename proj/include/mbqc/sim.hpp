// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "mbqc/circuit.hpp"
#include "mbqc/pattern.hpp"

namespace mbqc {

using Mat = Eigen::MatrixXcd;

// Default cap on simultaneously live qubits in pattern simulation.
inline constexpr int kPatternWidthCap = 12;
// Cap on simultaneously live wires in restricted circuit simulation.
inline constexpr int kCircuitWidthCap = 22;

// The linear map realized by one measurement branch.  Rows are indexed by
// the output qubits in ascending id order (smallest id = most significant
// bit), columns by computational-basis states of the inputs in the same
// convention.  probability = tr(A^dagger A) / 2^{#inputs}, the branch
// weight for a maximally mixed input.
struct BranchMap {
    std::string outcomes;  // one bit per measured qubit, ascending id
    Mat map;
    double probability = 0.0;
};

// Runs the pattern once per basis input with the measurement outcomes
// forced to `outcomes` (raw bits, keyed by qubit).  Throws ResourceError
// when more than `max_active` qubits would be live at once.
BranchMap run_branch(const Pattern& p, const std::map<int, int>& outcomes,
                     int max_active = kPatternWidthCap);

// All 2^m branches, m the number of measured qubits, in outcome-string
// order.  The branch probabilities sum to 1.
std::vector<BranchMap> pattern_branches(const Pattern& p,
                                        int max_active = kPatternWidthCap);

// True when max_ij |A_ij - lambda B_ij| <= tol for some unit-modulus
// lambda (chosen at B's largest entry).  Zero maps are compared directly.
bool equiv_up_to_phase(const Mat& a, const Mat& b, double tol);

struct DeterminismReport {
    bool deterministic = false;  // all branch maps pairwise proportional
    bool strong = false;         // equal up to phase, with equal weights
    bool uniform = false;        // still strong after angle resampling
    // Outcome strings of a violating pair, empty when the check passed.
    std::string witness_a, witness_b;
};

// Brute-force determinism check over all branches (at most 10 measured
// qubits; ResourceError beyond).  The uniform check re-runs the strong
// check on 3 angle resamplings drawn from a fixed-seed generator
// (mt19937, seed 0x5EED; angles (2k+1)/32 * pi, k = rng() % 16).
DeterminismReport check_determinism(const Pattern& p,
                                    int max_active = kPatternWidthCap);

// The unitary a strongly deterministic pattern implements: the all-zero
// branch map rescaled by 2^{m/2}, m the number of measured qubits.  For
// at most 10 measured qubits strong determinism is verified first; above
// that the caller vouches for it (e.g. patterns emitted along a flow).
// Throws PreconditionError when the check fails or the rescaled map is
// not unitary within `tol`.
Mat pattern_operator(const Pattern& p, int max_active = kPatternWidthCap,
                     double tol = 1e-9);

// Dense unitary of an MZ-free circuit on at most 12 wires
// (PreconditionError / ResourceError otherwise).  Wire 0 is the most
// significant bit.
Mat circuit_unitary(const Circuit& c);

// The linear map of a circuit run with post-selection: `inputs` wires are
// basis-state columns, wires outside `outputs` are projected onto <0| at
// their last gate, output wires are returned in ascending order.  When
// rescale_pow_half >= 0 the map is multiplied by 2^{rescale_pow_half/2};
// otherwise it is normalized by the first column's norm.  Wires come
// alive at first use, so circuits far wider than `cap` simulate as long
// as few wires are live at once.
Mat restricted_circuit_map(const Circuit& c, const std::vector<int>& inputs,
                           const std::vector<int>& outputs,
                           int rescale_pow_half = -1,
                           int cap = kCircuitWidthCap);

}  // namespace mbqc
