// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#pragma once
// Fixtures and random generators shared by the test binaries.
#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mbqc/angle.hpp"
#include "mbqc/circuit.hpp"
#include "mbqc/flow.hpp"
#include "mbqc/geometry.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/sim.hpp"
#include "mbqc/translate.hpp"

namespace testutil {

using namespace mbqc;

// Seven-vertex open graph used as the running example: inputs 0 and 1,
// outputs 4, 5 and 6, with a unique causal flow of depth 4.
inline Geometry sample_geometry() {
    Geometry g;
    g.vertices = {0, 1, 2, 3, 4, 5, 6};
    g.edges = {{0, 2}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}};
    g.inputs = {0, 1};
    g.outputs = {4, 5, 6};
    return g;
}

// Generic (non-Pauli) angles for the sample's measured vertices.
inline std::map<int, Angle> sample_angles() {
    return {{0, Angle(1, 8)},
            {1, Angle(3, 8)},
            {2, Angle(5, 8)},
            {3, Angle(7, 8)}};
}

struct Instance {
    Geometry g;
    Flow fl;
    std::map<int, Angle> angles;
};

inline Angle letter_angle(char c) {
    switch (c) {
        case 'X':
            return Angle(0, 1);
        case 'Y':
            return Angle(1, 2);
        default:
            return Angle(1, 4);  // 'N': generic
    }
}

// A straight line of measurements: vertex k carries word[k], the final
// vertex is the unmeasured output, and the flow walks left to right.
// With with_input = false the line has no input, which makes the first
// vertex eligible for self-loop relaxation when it is Y-measured.
inline Instance line_instance(const std::string& word,
                              bool with_input = true, bool relax = false) {
    Instance inst;
    int m = static_cast<int>(word.size());
    for (int v = 0; v <= m; ++v) inst.g.vertices.push_back(v);
    for (int v = 0; v < m; ++v) inst.g.edges.push_back({v, v + 1});
    if (with_input) inst.g.inputs = {0};
    inst.g.outputs = {m};
    std::map<int, int> f;
    for (int v = 0; v < m; ++v) f[v] = v + 1;
    inst.fl = *make_flow(inst.g, f);
    for (int v = 0; v < m; ++v)
        inst.angles.emplace(v, letter_angle(word[static_cast<std::size_t>(v)]));
    if (relax) inst.fl = relax_with_loops(inst.g, inst.fl, inst.angles);
    return inst;
}

// A ragged ladder: 2 or 3 wires of length 2 to 4 (at most 8 vertices in
// total), horizontal edges carried by the flow, and random vertical
// rungs.  Every dependency arc points to a later column, so any rung
// assignment admits the row-wise flow.
inline Instance random_grid_instance(std::mt19937& rng) {
    int wires = 2 + static_cast<int>(rng() % 2);
    std::vector<int> len;
    for (;;) {
        len.clear();
        int total = 0;
        for (int w = 0; w < wires; ++w) {
            int l = 2 + static_cast<int>(rng() % 3);
            len.push_back(l);
            total += l;
        }
        if (total <= 8) break;
    }
    Instance inst;
    std::vector<int> base(static_cast<std::size_t>(wires), 0);
    int next = 0;
    for (int w = 0; w < wires; ++w) {
        base[static_cast<std::size_t>(w)] = next;
        next += len[static_cast<std::size_t>(w)];
    }
    auto id = [&](int w, int c) { return base[static_cast<std::size_t>(w)] + c; };
    for (int v = 0; v < next; ++v) inst.g.vertices.push_back(v);
    std::map<int, int> f;
    for (int w = 0; w < wires; ++w) {
        inst.g.inputs.push_back(id(w, 0));
        inst.g.outputs.push_back(id(w, len[static_cast<std::size_t>(w)] - 1));
        for (int c = 0; c + 1 < len[static_cast<std::size_t>(w)]; ++c) {
            inst.g.edges.push_back({id(w, c), id(w, c + 1)});
            f[id(w, c)] = id(w, c + 1);
        }
    }
    for (int w = 0; w + 1 < wires; ++w) {
        int cols = std::min(len[static_cast<std::size_t>(w)],
                            len[static_cast<std::size_t>(w + 1)]);
        for (int c = 0; c < cols; ++c)
            if (rng() % 3 == 0)
                inst.g.edges.push_back({id(w, c), id(w + 1, c)});
    }
    normalize(inst.g);
    inst.fl = *make_flow(inst.g, f);
    for (int v : inst.g.measured())
        inst.angles.emplace(v, Angle(static_cast<std::int64_t>(rng() % 16), 8));
    return inst;
}

// A random open graph on at most 7 vertices with equally many inputs and
// outputs (flow existence is undetermined by construction).
inline Geometry random_geometry(std::mt19937& rng) {
    // Unconstrained sprinkles almost never carry a flow, so draw half of
    // the corpus from the ladder family (row-wise flow by construction)
    // to exercise the found branch as well.
    if (rng() % 2 == 0) return random_grid_instance(rng).g;
    Geometry g;
    int n = 3 + static_cast<int>(rng() % 5);
    for (int v = 0; v < n; ++v) g.vertices.push_back(v);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng() % 100 < 35) g.edges.push_back({a, b});
    int k = 1 + static_cast<int>(rng() % 2);
    std::vector<int> perm(g.vertices), perm2(g.vertices);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::shuffle(perm2.begin(), perm2.end(), rng);
    g.inputs.assign(perm.begin(), perm.begin() + k);
    g.outputs.assign(perm2.begin(), perm2.begin() + k);
    normalize(g);
    return g;
}

// Exhaustive search for a causal flow: all injective neighbor
// assignments for the measured vertices, checked for acyclicity.
inline bool flow_exists_brute(const Geometry& g) {
    std::vector<int> meas = g.measured();
    std::map<int, int> f;
    std::vector<bool> used_id(64, false);
    std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
        if (k == meas.size()) return make_flow(g, f).has_value();
        int v = meas[k];
        for (int w : g.neighbors(v)) {
            if (g.is_input(w) || used_id[static_cast<std::size_t>(w)])
                continue;
            used_id[static_cast<std::size_t>(w)] = true;
            f[v] = w;
            if (go(k + 1)) return true;
            f.erase(v);
            used_id[static_cast<std::size_t>(w)] = false;
        }
        return false;
    };
    return go(0);
}

// Random source-dialect circuit; with clifford = true all rotation
// angles are multiples of pi/2 and at least one J gate is present.
inline Circuit random_source_circuit(std::mt19937& rng, int max_wires,
                                     int max_gates, bool clifford = false) {
    Circuit c;
    c.n = 2 + static_cast<int>(rng() % (static_cast<unsigned>(max_wires) - 1));
    c.dialect = Circuit::Dialect::Source;
    int gates = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_gates));
    bool has_j = false;
    for (int i = 0; i < gates; ++i) {
        if (rng() % 5 < 3) {
            int w = static_cast<int>(rng() % static_cast<unsigned>(c.n));
            Angle a = clifford
                          ? Angle(static_cast<std::int64_t>(rng() % 4), 2)
                          : Angle(static_cast<std::int64_t>(rng() % 16), 8);
            c.gates.push_back(Gate::j(w, a));
            has_j = true;
        } else {
            int a = static_cast<int>(rng() % static_cast<unsigned>(c.n));
            int b = static_cast<int>(rng() % static_cast<unsigned>(c.n));
            if (a == b) b = (b + 1) % c.n;
            c.gates.push_back(Gate::cz(a, b));
        }
    }
    if (clifford && !has_j) c.gates.push_back(Gate::j(0, Angle(0, 1)));
    return c;
}

// CX expressed over the source gate set: H, CZ, H on the target.
inline void add_cx_as_source(Circuit& c, int ctrl, int tgt) {
    c.gates.push_back(Gate::j(tgt, Angle(0, 1)));
    c.gates.push_back(Gate::cz(ctrl, tgt));
    c.gates.push_back(Gate::j(tgt, Angle(0, 1)));
}

// Eight-wire parity accumulator: a balanced CX cascade computing parities
// into wire 7, then uncomputing the partial sums.  Entirely Clifford.
inline Circuit parity_circuit_8() {
    Circuit c;
    c.n = 8;
    c.dialect = Circuit::Dialect::Source;
    const int pairs[][2] = {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {1, 3}, {5, 7},
                            {3, 7}, {1, 3}, {0, 1}, {2, 3}, {4, 5}};
    for (const auto& p : pairs) add_cx_as_source(c, p[0], p[1]);
    return c;
}

// n wires, n rounds: every round rotates each wire by a fresh generic
// angle, couples it to the next wire, and then applies three J(0) gates
// (an odd Hadamard run, which erases the adaptive dependency between
// successive generic rotations on the wire).
inline Circuit reset_ladder_circuit(int n) {
    Circuit c;
    c.n = n;
    c.dialect = Circuit::Dialect::Source;
    for (int round = 0; round < n; ++round)
        for (int w = 0; w < n; ++w) {
            c.gates.push_back(
                Gate::j(w, Angle(2 * (round * n + w) + 1, 16)));
            if (w + 1 < n) c.gates.push_back(Gate::cz(w, w + 1));
            for (int r = 0; r < 3; ++r)
                c.gates.push_back(Gate::j(w, Angle(0, 1)));
        }
    return c;
}

// Three-wire circuit whose translation has exactly one interior vertex:
// wire 0 is rotated, coupled twice to wire 1, and rotated again.
inline Circuit three_wire_example() {
    Circuit c;
    c.n = 3;
    c.dialect = Circuit::Dialect::Source;
    c.gates.push_back(Gate::j(0, Angle(1, 8)));
    c.gates.push_back(Gate::cz(0, 1));
    c.gates.push_back(Gate::j(1, Angle(3, 8)));
    c.gates.push_back(Gate::cz(1, 2));
    c.gates.push_back(Gate::cz(0, 1));
    c.gates.push_back(Gate::j(0, Angle(5, 8)));
    return c;
}

// Pattern output vertex carrying each source wire: the end of the wire's
// flow chain (the wire's input vertex when no gate touched it).
inline std::vector<int> wire_endpoints(const Translation& tr, int wires) {
    std::vector<int> ends;
    for (int w = 0; w < wires; ++w) {
        int v = w;
        while (tr.flow.f.count(v)) v = tr.flow.f.at(v);
        ends.push_back(v);
    }
    return ends;
}

// Reindexes the rows of a wire-major map (wire 0 = most significant bit)
// so that bit position j, counted from the most significant end, carries
// msb_wires[j] instead.
inline Mat rows_for_wires(const Mat& u, const std::vector<int>& msb_wires) {
    int m = static_cast<int>(msb_wires.size());
    Mat out(u.rows(), u.cols());
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
        Eigen::Index rs = 0;
        for (int j = 0; j < m; ++j)
            if ((r >> (m - 1 - j)) & 1)
                rs |= Eigen::Index{1} << (m - 1 - msb_wires[j]);
        out.row(r) = u.row(rs);
    }
    return out;
}

// The unitary of a source circuit with its rows reordered to the
// ascending-output-vertex convention of the circuit's translation, so it
// can be compared directly against pattern or emission maps.
inline Mat source_unitary_as_outputs(const Circuit& src,
                                     const Translation& tr) {
    std::vector<int> ends = wire_endpoints(tr, src.n);
    std::vector<int> msb_wires;
    for (int v : tr.pattern.outputs) {
        auto it = std::find(ends.begin(), ends.end(), v);
        msb_wires.push_back(static_cast<int>(it - ends.begin()));
    }
    return rows_for_wires(circuit_unitary(src), msb_wires);
}

}  // namespace testutil
