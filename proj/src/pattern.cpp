// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#include "mbqc/pattern.hpp"

#include <algorithm>
#include <set>

#include "mbqc/errors.hpp"

namespace mbqc {

bool Pattern::is_input(int v) const {
    return std::binary_search(inputs.begin(), inputs.end(), v);
}

bool Pattern::is_output(int v) const {
    return std::binary_search(outputs.begin(), outputs.end(), v);
}

std::vector<int> Pattern::measured() const {
    std::set<int> m;
    for (const Command& c : commands)
        if (c.kind == Command::Kind::Meas) m.insert(c.a);
    return {m.begin(), m.end()};
}

std::map<int, Angle> Pattern::angles() const {
    std::map<int, Angle> out;
    for (const Command& c : commands)
        if (c.kind == Command::Kind::Meas) out.emplace(c.a, c.angle);
    return out;
}

std::vector<std::string> validate_pattern(const Pattern& p) {
    std::vector<std::string> bad;
    auto complain = [&](std::size_t idx, const std::string& msg) {
        bad.push_back("command " + std::to_string(idx) + ": " + msg);
    };

    std::set<int> vset(p.vertices.begin(), p.vertices.end());
    if (vset.size() != p.vertices.size() ||
        !std::is_sorted(p.vertices.begin(), p.vertices.end()))
        bad.push_back("vertex list must be ascending and duplicate-free");
    for (int v : p.inputs)
        if (!vset.count(v))
            bad.push_back("input " + std::to_string(v) + " not in vertex list");
    for (int v : p.outputs)
        if (!vset.count(v))
            bad.push_back("output " + std::to_string(v) + " not in vertex list");

    std::set<int> prepared(p.inputs.begin(), p.inputs.end());
    std::set<int> measured_so_far;
    std::set<int> ever_prepared;  // non-inputs that saw a Prep

    for (std::size_t i = 0; i < p.commands.size(); ++i) {
        const Command& c = p.commands[i];
        for (int q : c.acted())
            if (!vset.count(q))
                complain(i, "acts on qubit " + std::to_string(q) +
                                " outside the vertex list");
        if (c.kind == Command::Kind::Shift && !vset.count(c.a))
            complain(i, "shifts qubit " + std::to_string(c.a) +
                            " outside the vertex list");

        if (c.kind == Command::Kind::Prep) {
            if (p.is_input(c.a))
                complain(i, "prepares input qubit " + std::to_string(c.a));
            else if (ever_prepared.count(c.a))
                complain(i, "prepares qubit " + std::to_string(c.a) + " twice");
            else {
                ever_prepared.insert(c.a);
                prepared.insert(c.a);
            }
            if (measured_so_far.count(c.a))
                complain(i, "prepares already measured qubit " +
                                std::to_string(c.a));
            continue;
        }

        for (int q : c.acted()) {
            if (measured_so_far.count(q))
                complain(i, "acts on already measured qubit " +
                                std::to_string(q));
            else if (!prepared.count(q) && vset.count(q))
                complain(i, "acts on unprepared qubit " + std::to_string(q));
        }
        for (int q : c.signal_sources())
            if (!measured_so_far.count(q))
                complain(i, "reads outcome of qubit " + std::to_string(q) +
                                " before it is measured");

        if (c.kind == Command::Kind::Meas) {
            if (p.is_output(c.a))
                complain(i, "measures output qubit " + std::to_string(c.a));
            measured_so_far.insert(c.a);
        }
        if (c.kind == Command::Kind::Ent && c.a == c.b)
            complain(i, "entangles a qubit with itself");
        if (c.kind == Command::Kind::Shift && !measured_so_far.count(c.a))
            complain(i, "shifts qubit " + std::to_string(c.a) +
                            " before it is measured");
    }

    for (int v : p.vertices)
        if (!p.is_output(v) && !measured_so_far.count(v))
            bad.push_back("non-output qubit " + std::to_string(v) +
                          " is never measured");
    return bad;
}

void require_valid(const Pattern& p) {
    auto bad = validate_pattern(p);
    if (bad.empty()) return;
    std::string msg = "pattern is not runnable:";
    for (const auto& b : bad) msg += "\n  " + b;
    throw PreconditionError(msg);
}

bool is_standard(const Pattern& p) {
    int last = 0;
    for (const Command& c : p.commands) {
        if (c.kind == Command::Kind::Shift) return false;
        int k = c.order_class();
        if (k < last) return false;
        last = k;
    }
    return true;
}

bool has_trivial_t_domains(const Pattern& p) {
    for (const Command& c : p.commands) {
        if (c.kind == Command::Kind::Shift) return false;
        if (c.kind == Command::Kind::Meas && !c.t.empty()) return false;
    }
    return true;
}

bool has_shift_commands(const Pattern& p) {
    for (const Command& c : p.commands)
        if (c.kind == Command::Kind::Shift) return true;
    return false;
}

Geometry geometry_of(const Pattern& p) {
    Geometry g;
    g.vertices = p.vertices;
    g.inputs = p.inputs;
    g.outputs = p.outputs;
    for (const Command& c : p.commands)
        if (c.kind == Command::Kind::Ent) g.add_edge(c.a, c.b);
    normalize(g);
    return g;
}

}  // namespace mbqc
