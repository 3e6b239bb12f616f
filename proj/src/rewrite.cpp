// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#include "mbqc/rewrite.hpp"

#include <algorithm>

#include "mbqc/errors.hpp"

namespace mbqc {

namespace {

bool disjoint_acted(const Command& a, const Command& b) {
    for (int x : a.acted())
        for (int y : b.acted())
            if (x == y) return false;
    return true;
}

// Tries the pair rules at position k of cmds.  Returns the rule name, or
// empty when nothing applies.
std::string apply_pair_rule(std::vector<Command>& cmds, std::size_t k) {
    Command& a = cmds[k];
    Command& b = cmds[k + 1];

    if (a.kind == Command::Kind::CorrX && b.kind == Command::Kind::Ent &&
        (a.a == b.a || a.a == b.b)) {
        // X then E: the X pushes through and leaves a Z on the far end.
        int far = (a.a == b.a) ? b.b : b.a;
        Command x = a;
        Command e = b;
        a = e;
        b = Command::corr_z(far, x.s);
        cmds.insert(cmds.begin() + static_cast<std::ptrdiff_t>(k) + 2, x);
        return "EX";
    }
    if (a.kind == Command::Kind::CorrZ && b.kind == Command::Kind::Ent &&
        (a.a == b.a || a.a == b.b)) {
        std::swap(a, b);
        return "EZ";
    }
    if (a.kind == Command::Kind::CorrX && b.kind == Command::Kind::Meas &&
        a.a == b.a) {
        b.s ^= a.s;
        cmds.erase(cmds.begin() + static_cast<std::ptrdiff_t>(k));
        return "MX";
    }
    if (a.kind == Command::Kind::CorrZ && b.kind == Command::Kind::Meas &&
        a.a == b.a) {
        b.t ^= a.s;
        cmds.erase(cmds.begin() + static_cast<std::ptrdiff_t>(k));
        return "MZ";
    }
    if (a.order_class() > b.order_class() && disjoint_acted(a, b)) {
        std::swap(a, b);
        return "FC";
    }
    return "";
}

void canonicalize_corrections(std::vector<Command>& cmds,
                              RewriteTrace& trace) {
    std::size_t first = cmds.size();
    while (first > 0 && cmds[first - 1].order_class() == 3) --first;

    // Merge per (qubit, kind); X sorts before Z on the same qubit.
    std::map<std::pair<int, int>, Signal> merged;
    for (std::size_t i = first; i < cmds.size(); ++i) {
        int kind_key = cmds[i].kind == Command::Kind::CorrX ? 0 : 1;
        merged[{cmds[i].a, kind_key}] ^= cmds[i].s;
    }
    std::vector<Command> block;
    for (const auto& [key, dom] : merged) {
        if (dom.empty()) continue;
        block.push_back(key.second == 0 ? Command::corr_x(key.first, dom)
                                        : Command::corr_z(key.first, dom));
    }
    bool changed = block.size() != cmds.size() - first;
    for (std::size_t i = 0; !changed && i < block.size(); ++i)
        changed = !(block[i] == cmds[first + i]);
    if (!changed) return;

    cmds.resize(first);
    cmds.insert(cmds.end(), block.begin(), block.end());
    trace.steps.push_back({"CANON", first});
}

// Clears the t-domain of the measurement at `idx` and forwards the toggle
// into every later domain mentioning the measured qubit.
void apply_shift(std::vector<Command>& cmds, std::size_t idx) {
    Command& m = cmds[idx];
    int q = m.a;
    Signal t = m.t;
    m.t.clear();
    for (std::size_t j = idx + 1; j < cmds.size(); ++j) {
        Command& c = cmds[j];
        if (c.s.contains(q)) c.s ^= t;
        if (c.t.contains(q)) c.t ^= t;
    }
}

void apply_named(std::vector<Command>& cmds, const RewriteStep& st) {
    if (st.rule == "PX") {
        cmds[st.index].s.clear();
    } else if (st.rule == "PY") {
        cmds[st.index].t ^= cmds[st.index].s;
        cmds[st.index].s.clear();
    } else if (st.rule == "SHIFT") {
        apply_shift(cmds, st.index);
    } else if (st.rule == "CANON") {
        RewriteTrace scratch;
        canonicalize_corrections(cmds, scratch);
    } else {
        std::string got = apply_pair_rule(cmds, st.index);
        if (got != st.rule)
            throw PreconditionError("trace replay: rule " + st.rule +
                                    " does not apply at index " +
                                    std::to_string(st.index));
    }
}

}  // namespace

namespace {

// FNV-1a over the rendered command list; ties a trace to its origin.
std::size_t fingerprint(const std::vector<Command>& cmds) {
    std::uint64_t h = 1469598103934665603ull;
    for (const Command& c : cmds)
        for (char ch : c.str() + '\n') {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ull;
        }
    return static_cast<std::size_t>(h);
}

}  // namespace

Pattern RewriteTrace::replay(const Pattern& start) const {
    if (fingerprint(start.commands) != origin)
        throw PreconditionError(
            "trace replay: start pattern is not the recorded origin");
    Pattern p = start;
    for (const RewriteStep& st : steps) apply_named(p.commands, st);
    return p;
}

RewriteResult standardize(const Pattern& p) {
    if (has_shift_commands(p))
        throw PreconditionError(
            "standardize expects a pattern without Shift commands");
    require_valid(p);

    RewriteResult out{p, {}};
    out.trace.origin = fingerprint(p.commands);
    auto& cmds = out.pattern.commands;
    std::size_t k = 0;
    while (cmds.size() >= 2 && k + 1 < cmds.size()) {
        std::string rule = apply_pair_rule(cmds, k);
        if (rule.empty()) {
            ++k;
        } else {
            out.trace.steps.push_back({rule, k});
            k = (k == 0) ? 0 : k - 1;
        }
    }
    return out;
}

RewriteResult signal_shift(const Pattern& p) {
    if (!is_standard(p))
        throw PreconditionError("signal_shift expects a standard pattern");

    RewriteResult out{p, {}};
    out.trace.origin = fingerprint(p.commands);
    auto& cmds = out.pattern.commands;
    for (std::size_t i = 0; i < cmds.size(); ++i) {
        if (cmds[i].kind != Command::Kind::Meas || cmds[i].t.empty())
            continue;
        apply_shift(cmds, i);
        out.trace.steps.push_back({"SHIFT", i});
    }
    canonicalize_corrections(cmds, out.trace);
    return out;
}

RewriteResult pauli_simplify(const Pattern& p) {
    if (!is_standard(p))
        throw PreconditionError("pauli_simplify expects a standard pattern");

    RewriteResult out{p, {}};
    out.trace.origin = fingerprint(p.commands);
    auto& cmds = out.pattern.commands;
    for (std::size_t i = 0; i < cmds.size(); ++i) {
        if (cmds[i].kind != Command::Kind::Meas || cmds[i].s.empty())
            continue;
        PauliClass pc = cmds[i].angle.pauli_class();
        if (pc == PauliClass::X) {
            cmds[i].s.clear();
            out.trace.steps.push_back({"PX", i});
        } else if (pc == PauliClass::Y) {
            cmds[i].t ^= cmds[i].s;
            cmds[i].s.clear();
            out.trace.steps.push_back({"PY", i});
        }
    }
    return out;
}

}  // namespace mbqc
