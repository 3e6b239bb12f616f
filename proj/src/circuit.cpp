// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#include "mbqc/circuit.hpp"

#include <algorithm>

#include "mbqc/errors.hpp"

namespace mbqc {

Gate Gate::j(int q, Angle a) { return Gate{Kind::J, q, -1, a}; }
Gate Gate::cz(int a, int b) {
    return Gate{Kind::CZ, std::min(a, b), std::max(a, b), Angle()};
}
Gate Gate::h(int q) { return Gate{Kind::H, q, -1, Angle()}; }
Gate Gate::zp(int q, Angle a) { return Gate{Kind::ZP, q, -1, a}; }
Gate Gate::cx(int c, int t) { return Gate{Kind::CX, c, t, Angle()}; }
Gate Gate::mz(int q) { return Gate{Kind::MZ, q, -1, Angle()}; }

std::vector<int> Gate::wires() const {
    switch (kind) {
        case Kind::CZ:
        case Kind::CX:
            return {a, b};
        case Kind::MZ:
            return {};
        default:
            return {a};
    }
}

bool Gate::operator==(const Gate& o) const {
    return kind == o.kind && a == o.a && b == o.b && angle == o.angle;
}

std::string Gate::str() const {
    switch (kind) {
        case Kind::J:
            return "J " + std::to_string(a) + " " + angle.str();
        case Kind::CZ:
            return "CZ " + std::to_string(a) + " " + std::to_string(b);
        case Kind::H:
            return "H " + std::to_string(a);
        case Kind::ZP:
            return "ZP " + std::to_string(a) + " " + angle.str();
        case Kind::CX:
            return "CX " + std::to_string(a) + " " + std::to_string(b);
        case Kind::MZ:
            return "MZ " + std::to_string(a);
    }
    return "";
}

void require_well_formed(const Circuit& c) {
    auto in_range = [&](int w) { return 0 <= w && w < c.n; };
    for (const Gate& g : c.gates) {
        bool src_ok = g.kind == Gate::Kind::J || g.kind == Gate::Kind::CZ;
        bool tgt_ok = g.kind != Gate::Kind::J;
        if (c.dialect == Circuit::Dialect::Source && !src_ok)
            throw PreconditionError("gate " + g.str() +
                                    " is not in the source dialect {J, CZ}");
        if (c.dialect == Circuit::Dialect::Target && !tgt_ok)
            throw PreconditionError("gate " + g.str() +
                                    " is not in the target dialect");
        if (!in_range(g.a) || (g.b >= 0 && !in_range(g.b)) ||
            (g.kind == Gate::Kind::MZ && !in_range(g.a)))
            throw PreconditionError("gate " + g.str() + " touches a wire "
                                    "outside the circuit");
        if ((g.kind == Gate::Kind::CZ || g.kind == Gate::Kind::CX) &&
            g.a == g.b)
            throw PreconditionError("two-qubit gate with equal wires");
    }
}

int circuit_depth(const Circuit& c) {
    std::vector<int> busy(c.n, 0);
    int depth = 0;
    for (const Gate& g : c.gates) {
        auto ws = g.wires();
        if (ws.empty()) continue;
        int start = 0;
        for (int w : ws) start = std::max(start, busy[w]);
        for (int w : ws) busy[w] = start + 1;
        depth = std::max(depth, start + 1);
    }
    return depth;
}

}  // namespace mbqc
