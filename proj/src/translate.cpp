// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#include "mbqc/translate.hpp"

#include <algorithm>
#include <set>

#include "mbqc/errors.hpp"
#include "mbqc/rewrite.hpp"

namespace mbqc {

Circuit cz_normalize(const Circuit& c) {
    Circuit out;
    out.n = c.n;
    out.dialect = c.dialect;
    for (const Gate& g : c.gates) {
        if (g.kind != Gate::Kind::CZ) {
            out.gates.push_back(g);
            continue;
        }
        // Scan backwards: an identical CZ with no intervening touch of
        // either wire cancels against this one.
        bool cancelled = false;
        for (std::size_t k = out.gates.size(); k-- > 0;) {
            const Gate& prev = out.gates[k];
            auto ws = prev.wires();
            bool touches = std::find(ws.begin(), ws.end(), g.a) != ws.end() ||
                           std::find(ws.begin(), ws.end(), g.b) != ws.end();
            if (!touches) continue;
            if (prev.kind == Gate::Kind::CZ && prev.a == g.a &&
                prev.b == g.b) {
                out.gates.erase(out.gates.begin() +
                                static_cast<std::ptrdiff_t>(k));
                cancelled = true;
            }
            break;
        }
        if (!cancelled) out.gates.push_back(g);
    }
    return out;
}

Translation circuit_to_pattern(const Circuit& c, TranslateVariant variant) {
    require_well_formed(c);
    if (c.dialect != Circuit::Dialect::Source)
        throw PreconditionError(
            "translation expects a source-dialect circuit");

    Circuit cc = cz_normalize(c);
    enum class LastOp { None, J, Cz };
    std::vector<int> endpoint(static_cast<std::size_t>(cc.n));
    std::vector<LastOp> last(static_cast<std::size_t>(cc.n), LastOp::None);
    for (int w = 0; w < cc.n; ++w) endpoint[static_cast<std::size_t>(w)] = w;

    int next_id = cc.n;
    std::vector<Command> cmds;
    std::map<int, int> f;
    std::map<int, Angle> angles;
    int positions = 0;
    int teleports = 0;

    auto teleport = [&](int wire) {
        int i = endpoint[static_cast<std::size_t>(wire)];
        int j = next_id++;
        int k = next_id++;
        cmds.push_back(Command::prep(j));
        cmds.push_back(Command::prep(k));
        cmds.push_back(Command::ent(i, j));
        cmds.push_back(Command::ent(j, k));
        cmds.push_back(Command::meas(i, Angle(0, 1)));
        cmds.push_back(Command::meas(j, Angle(0, 1)));
        cmds.push_back(Command::corr_z(k, Signal{i}));
        cmds.push_back(Command::corr_x(k, Signal{j}));
        f[i] = j;
        f[j] = k;
        angles[i] = Angle(0, 1);
        angles[j] = Angle(0, 1);
        endpoint[static_cast<std::size_t>(wire)] = k;
        ++teleports;
    };

    for (const Gate& g : cc.gates) {
        if (g.kind == Gate::Kind::J) {
            int u = endpoint[static_cast<std::size_t>(g.a)];
            int v = next_id++;
            cmds.push_back(Command::prep(v));
            cmds.push_back(Command::ent(u, v));
            cmds.push_back(Command::meas(u, g.angle.negated()));
            cmds.push_back(Command::corr_x(v, Signal{u}));
            f[u] = v;
            angles[u] = g.angle.negated();
            endpoint[static_cast<std::size_t>(g.a)] = v;
            last[static_cast<std::size_t>(g.a)] = LastOp::J;
        } else {  // CZ
            for (int w : {g.a, g.b})
                if (last[static_cast<std::size_t>(w)] == LastOp::Cz) {
                    ++positions;
                    if (variant == TranslateVariant::Cluster) teleport(w);
                }
            cmds.push_back(
                Command::ent(endpoint[static_cast<std::size_t>(g.a)],
                             endpoint[static_cast<std::size_t>(g.b)]));
            last[static_cast<std::size_t>(g.a)] = LastOp::Cz;
            last[static_cast<std::size_t>(g.b)] = LastOp::Cz;
        }
    }

    Translation tr;
    Pattern wild;
    for (int v = 0; v < next_id; ++v) wild.vertices.push_back(v);
    for (int w = 0; w < cc.n; ++w) wild.inputs.push_back(w);
    std::set<int> ends(endpoint.begin(), endpoint.end());
    wild.outputs.assign(ends.begin(), ends.end());
    wild.commands = std::move(cmds);

    tr.pattern = signal_shift(standardize(wild).pattern).pattern;
    tr.geometry = geometry_of(tr.pattern);
    auto fl = make_flow(tr.geometry, f);
    if (!fl) throw Error("internal: translated circuit lost its flow");
    tr.flow = std::move(*fl);
    tr.angles = std::move(angles);

    for (int v = 0; v < next_id; ++v) {
        bool is_end = ends.count(v) != 0;
        if (v < cc.n)
            tr.roles[v] = is_end ? VertexRole::InputOutput : VertexRole::Input;
        else
            tr.roles[v] = is_end ? VertexRole::Output : VertexRole::Auxiliary;
    }

    tr.stats.qubits = next_id;
    tr.stats.measurements = static_cast<int>(tr.angles.size());
    tr.stats.teleport_insertions = positions;
    tr.stats.predicted_depth_bound =
        depth_upper_bound(tr.geometry, tr.flow, tr.angles);
    (void)teleports;
    return tr;
}

namespace {

struct Emitter {
    const Pattern& p;
    FanInKind kind;
    Geometry g;
    std::map<int, int> wire;  // pattern vertex -> wire
    int next_wire;
    Circuit out;
    std::vector<FanInInfo> fanins;
    std::vector<int> ancillas;

    explicit Emitter(const Pattern& pat, FanInKind k) : p(pat), kind(k) {
        g = geometry_of(p);
        int rank = 0;
        for (int v : p.vertices) wire[v] = rank++;
        next_wire = rank;
        out.dialect = Circuit::Dialect::Target;
    }

    // Fans the parity of `sources` into a single control wire; returns
    // that wire and records the shape.
    int fan_in(const Signal& sources, int target_wire) {
        FanInInfo info;
        info.target_wire = target_wire;
        info.kind = kind;
        info.sources = static_cast<int>(sources.size());
        std::vector<int> cur;
        for (int q : sources.qubits()) cur.push_back(wire.at(q));
        if (kind == FanInKind::Linear) {
            info.levels = info.sources;
            fanins.push_back(info);
            return -1;  // caller delivers per source
        }
        while (cur.size() >= 2) {
            std::vector<int> next;
            for (std::size_t i = 0; i + 1 < cur.size(); i += 2) {
                int a = next_wire++;
                ancillas.push_back(a);
                info.ancillas.push_back(a);
                out.gates.push_back(Gate::cx(cur[i], a));
                out.gates.push_back(Gate::cx(cur[i + 1], a));
                next.push_back(a);
            }
            if (cur.size() % 2) next.push_back(cur.back());
            cur = std::move(next);
            ++info.levels;
        }
        int root = cur.empty() ? -1 : cur[0];
        fanins.push_back(info);
        return root;
    }

    void deliver_x(const Signal& sources, int target_wire) {
        if (sources.empty()) return;
        if (kind == FanInKind::Linear) {
            fan_in(sources, target_wire);
            for (int q : sources.qubits())
                out.gates.push_back(Gate::cx(wire.at(q), target_wire));
        } else {
            int root = fan_in(sources, target_wire);
            out.gates.push_back(Gate::cx(root, target_wire));
        }
    }

    void deliver_z(const Signal& sources, int target_wire) {
        if (sources.empty()) return;
        if (kind == FanInKind::Linear) {
            fan_in(sources, target_wire);
            for (int q : sources.qubits())
                out.gates.push_back(Gate::cz(wire.at(q), target_wire));
        } else {
            int root = fan_in(sources, target_wire);
            out.gates.push_back(Gate::cz(root, target_wire));
        }
    }

    void meas_block(const Command& m) {
        int tw = wire.at(m.a);
        deliver_x(m.s, tw);
        if (!m.angle.is_zero())
            out.gates.push_back(Gate::zp(tw, m.angle.negated()));
        out.gates.push_back(Gate::h(tw));
    }
};

}  // namespace

CircuitEmission pattern_to_circuit_ex(const Pattern& p, FanInKind kind) {
    if (!is_standard(p))
        throw PreconditionError(
            "circuit emission expects a standard pattern");
    if (!has_trivial_t_domains(p))
        throw PreconditionError(
            "circuit emission expects all t-domains shifted away");
    require_valid(p);

    Emitter em(p, kind);

    std::vector<std::size_t> meas_cmds, corr_cmds;
    for (std::size_t i = 0; i < p.commands.size(); ++i) {
        if (p.commands[i].kind == Command::Kind::Meas)
            meas_cmds.push_back(i);
        else if (p.commands[i].kind == Command::Kind::CorrX ||
                 p.commands[i].kind == Command::Kind::CorrZ)
            corr_cmds.push_back(i);
    }

    std::set<int> swept;
    std::set<int> meas_emitted;  // qubits with an emitted measurement block
    std::size_t next_meas = 0, next_corr = 0;

    auto ready_vertex = [&](int v) {
        if (!swept.count(v)) return false;
        for (int u : em.g.neighbors(v))
            if (!swept.count(u)) return false;
        return true;
    };
    auto drain = [&]() {
        bool progress = true;
        while (progress) {
            progress = false;
            while (next_meas < meas_cmds.size()) {
                const Command& m = p.commands[meas_cmds[next_meas]];
                if (!ready_vertex(m.a)) break;
                em.meas_block(m);
                meas_emitted.insert(m.a);
                ++next_meas;
                progress = true;
            }
            while (next_corr < corr_cmds.size()) {
                const Command& c = p.commands[corr_cmds[next_corr]];
                if (!ready_vertex(c.a)) break;
                bool sources_ready = true;
                for (int q : c.s.qubits())
                    if (!meas_emitted.count(q)) sources_ready = false;
                if (!sources_ready) break;
                if (c.kind == Command::Kind::CorrX)
                    em.deliver_x(c.s, em.wire.at(c.a));
                else
                    em.deliver_z(c.s, em.wire.at(c.a));
                ++next_corr;
                progress = true;
            }
        }
    };

    for (int v : p.vertices) {
        if (!p.is_input(v)) em.out.gates.push_back(Gate::h(em.wire.at(v)));
        for (int u : em.g.neighbors(v))
            if (u < v)
                em.out.gates.push_back(Gate::cz(em.wire.at(u), em.wire.at(v)));
        swept.insert(v);
        drain();
    }
    drain();
    if (next_meas != meas_cmds.size() || next_corr != corr_cmds.size())
        throw Error("internal: circuit emission deadlocked");

    for (int v : p.vertices)
        if (meas_emitted.count(v))
            em.out.gates.push_back(Gate::mz(em.wire.at(v)));
    for (int a : em.ancillas) em.out.gates.push_back(Gate::mz(a));

    em.out.n = em.next_wire;
    require_well_formed(em.out);

    CircuitEmission res;
    res.circuit = std::move(em.out);
    res.wire_of = std::move(em.wire);
    res.fanins = std::move(em.fanins);
    res.ancilla_count = static_cast<int>(em.ancillas.size());
    return res;
}

Circuit pattern_to_circuit(const Pattern& p, FanInKind k) {
    return pattern_to_circuit_ex(p, k).circuit;
}

std::vector<CircuitPath> circuit_influencing_paths(const Circuit& c) {
    Translation tr = circuit_to_pattern(c, TranslateVariant::Direct);
    std::vector<CircuitPath> out;
    for (auto& path : influencing_paths(tr.geometry, tr.flow)) {
        CircuitPath cp;
        for (int v : path.vertices) {
            auto it = tr.angles.find(v);
            if (it != tr.angles.end())
                cp.word.push_back(it->second.negated());
        }
        cp.path = std::move(path);
        out.push_back(std::move(cp));
    }
    return out;
}

int consecutive_j_depth(const Circuit& c) {
    Translation tr = circuit_to_pattern(c, TranslateVariant::Direct);
    if (tr.angles.empty()) return 0;

    int best = 1;
    for (const auto& path : influencing_paths(tr.geometry, tr.flow)) {
        // Non-Pauli measured vertices along the path.
        std::vector<int> hard;
        for (int v : path.vertices) {
            auto it = tr.angles.find(v);
            if (it != tr.angles.end() && !it->second.is_pauli())
                hard.push_back(v);
        }
        if (hard.empty()) continue;

        // Simplify the path in isolation and read off which dependencies
        // survive.
        Pattern lp = line_pattern(path, tr.angles);
        Pattern simplified =
            signal_shift(pauli_simplify(lp).pattern).pattern;
        std::map<int, Signal> final_s;
        for (const Command& cmd : simplified.commands)
            if (cmd.kind == Command::Kind::Meas) final_s[cmd.a] = cmd.s;

        int run = 1;
        best = std::max(best, 1);
        for (std::size_t i = 1; i < hard.size(); ++i) {
            bool chained = final_s.count(hard[i]) &&
                           final_s[hard[i]].contains(hard[i - 1]);
            run = chained ? run + 1 : 1;
            best = std::max(best, run);
        }
    }
    return best;
}

ParallelizeResult parallelize_circuit(const Circuit& c, FanInKind kind) {
    ParallelizeResult res;
    res.translation = circuit_to_pattern(c, TranslateVariant::Direct);
    Pattern p1 = pauli_simplify(res.translation.pattern).pattern;
    res.simplified = signal_shift(p1).pattern;
    res.report = characterized_depth(res.translation.geometry,
                                     res.translation.flow,
                                     res.translation.angles);
    res.report.consecutive_j = consecutive_j_depth(c);
    res.emission = pattern_to_circuit_ex(res.simplified, kind);
    res.report.realized = circuit_depth(res.emission.circuit);
    res.report.classical = classical_depth(res.simplified);
    return res;
}

}  // namespace mbqc
