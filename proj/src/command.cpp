// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#include "mbqc/command.hpp"

#include <algorithm>
#include <set>

namespace mbqc {

Command Command::prep(int q) {
    Command c;
    c.kind = Kind::Prep;
    c.a = q;
    return c;
}

Command Command::ent(int i, int j) {
    Command c;
    c.kind = Kind::Ent;
    c.a = std::min(i, j);
    c.b = std::max(i, j);
    return c;
}

Command Command::meas(int q, Angle angle, Signal s, Signal t) {
    Command c;
    c.kind = Kind::Meas;
    c.a = q;
    c.angle = angle;
    c.s = std::move(s);
    c.t = std::move(t);
    return c;
}

Command Command::corr_x(int q, Signal s) {
    Command c;
    c.kind = Kind::CorrX;
    c.a = q;
    c.s = std::move(s);
    return c;
}

Command Command::corr_z(int q, Signal s) {
    Command c;
    c.kind = Kind::CorrZ;
    c.a = q;
    c.s = std::move(s);
    return c;
}

Command Command::shift(int q, Signal t) {
    Command c;
    c.kind = Kind::Shift;
    c.a = q;
    c.t = std::move(t);
    return c;
}

std::vector<int> Command::acted() const {
    switch (kind) {
        case Kind::Ent:
            return {a, b};
        case Kind::Shift:
            return {};
        default:
            return {a};
    }
}

std::vector<int> Command::signal_sources() const {
    std::set<int> src;
    src.insert(s.qubits().begin(), s.qubits().end());
    src.insert(t.qubits().begin(), t.qubits().end());
    return {src.begin(), src.end()};
}

int Command::order_class() const {
    switch (kind) {
        case Kind::Prep:
            return 0;
        case Kind::Ent:
            return 1;
        case Kind::Meas:
            return 2;
        case Kind::CorrX:
        case Kind::CorrZ:
            return 3;
        case Kind::Shift:
            return 4;
    }
    return 4;
}

bool Command::operator==(const Command& o) const {
    return kind == o.kind && a == o.a && b == o.b && angle == o.angle &&
           s == o.s && t == o.t;
}

std::string Command::str() const {
    switch (kind) {
        case Kind::Prep:
            return "N " + std::to_string(a);
        case Kind::Ent:
            return "E " + std::to_string(a) + " " + std::to_string(b);
        case Kind::Meas:
            return "M " + std::to_string(a) + " a=" + angle.str() +
                   " s=" + s.str() + " t=" + t.str();
        case Kind::CorrX:
            return "X " + std::to_string(a) + " s=" + s.str();
        case Kind::CorrZ:
            return "Z " + std::to_string(a) + " s=" + s.str();
        case Kind::Shift:
            return "S " + std::to_string(a) + " t=" + t.str();
    }
    return "";
}

}  // namespace mbqc
