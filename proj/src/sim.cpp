// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#include "mbqc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <set>

#include "mbqc/errors.hpp"

namespace mbqc {

namespace {

using cd = std::complex<double>;

// Statevector over the currently live qubits.  The first-born qubit is
// the most significant index bit; newly born qubits append as the least
// significant bit, and projections remove a qubit wherever it sits.
class LazyState {
public:
    explicit LazyState(int cap) : cap_(cap), amps_{cd(1.0, 0.0)} {}

    bool alive(int id) const { return pos(id) >= 0; }

    void birth(int id, cd a0, cd a1) {
        if (static_cast<int>(ids_.size()) >= cap_)
            throw ResourceError(
                "simulation width exceeds the cap of " +
                std::to_string(cap_) + " live qubits");
        ids_.push_back(id);
        std::vector<cd> nxt(amps_.size() * 2);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            nxt[2 * i] = amps_[i] * a0;
            nxt[2 * i + 1] = amps_[i] * a1;
        }
        amps_ = std::move(nxt);
    }

    void apply1(int id, cd m00, cd m01, cd m10, cd m11) {
        std::size_t b = bit(id);
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (i & b) continue;
            cd lo = amps_[i];
            cd hi = amps_[i | b];
            amps_[i] = m00 * lo + m01 * hi;
            amps_[i | b] = m10 * lo + m11 * hi;
        }
    }

    void cz(int a, int b) {
        std::size_t ba = bit(a), bb = bit(b);
        for (std::size_t i = 0; i < amps_.size(); ++i)
            if ((i & ba) && (i & bb)) amps_[i] = -amps_[i];
    }

    void cx(int c, int t) {
        std::size_t bc = bit(c), bt = bit(t);
        for (std::size_t i = 0; i < amps_.size(); ++i)
            if ((i & bc) && !(i & bt)) std::swap(amps_[i], amps_[i | bt]);
    }

    // Applies the bra (b0, b1) to the qubit and drops it from the state.
    void project(int id, cd b0, cd b1) {
        int k = pos(id);
        std::size_t b = bit(id);
        std::vector<cd> nxt(amps_.size() / 2);
        std::size_t w = 0;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (i & b) continue;
            nxt[w++] = b0 * amps_[i] + b1 * amps_[i | b];
        }
        amps_ = std::move(nxt);
        ids_.erase(ids_.begin() + k);
    }

    // Amplitudes reordered so that the first listed qubit is the most
    // significant bit.  `order` must be a permutation of the live set.
    std::vector<cd> extract(const std::vector<int>& order) const {
        if (order.size() != ids_.size())
            throw Error("internal: extraction set mismatch");
        std::vector<std::size_t> weight(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            int k = pos(order[i]);
            if (k < 0) throw Error("internal: extraction set mismatch");
            weight[i] = bit(order[i]);
            (void)k;
        }
        std::vector<cd> out(amps_.size());
        for (std::size_t r = 0; r < out.size(); ++r) {
            std::size_t src = 0;
            for (std::size_t i = 0; i < order.size(); ++i)
                if (r & (std::size_t{1} << (order.size() - 1 - i)))
                    src |= weight[i];
            out[r] = amps_[src];
        }
        return out;
    }

    cd scalar() const {
        if (!ids_.empty()) throw Error("internal: state not scalar");
        return amps_[0];
    }

private:
    int pos(int id) const {
        for (std::size_t k = 0; k < ids_.size(); ++k)
            if (ids_[k] == id) return static_cast<int>(k);
        return -1;
    }
    std::size_t bit(int id) const {
        int k = pos(id);
        if (k < 0) throw Error("internal: qubit not live");
        return std::size_t{1}
               << (ids_.size() - 1 - static_cast<std::size_t>(k));
    }

    int cap_;
    std::vector<int> ids_;
    std::vector<cd> amps_;
};

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

struct ClassicalPass {
    std::vector<cd> bra0, bra1;   // per command: measurement bra
    std::vector<bool> corr_live;  // per command: correction fires
};

// Resolves every signal against the forced outcomes, honoring Shift
// commands in execution order.
ClassicalPass classical_pass(const Pattern& p,
                             const std::map<int, int>& outcomes) {
    ClassicalPass cp;
    cp.bra0.assign(p.commands.size(), cd(0));
    cp.bra1.assign(p.commands.size(), cd(0));
    cp.corr_live.assign(p.commands.size(), false);

    std::map<int, int> eff;
    auto parity = [&](const Signal& s) {
        int v = 0;
        for (int q : s.qubits()) v ^= eff.at(q);
        return v != 0;
    };
    for (std::size_t i = 0; i < p.commands.size(); ++i) {
        const Command& c = p.commands[i];
        switch (c.kind) {
            case Command::Kind::Meas: {
                auto it = outcomes.find(c.a);
                if (it == outcomes.end())
                    throw PreconditionError(
                        "no forced outcome for measured qubit " +
                        std::to_string(c.a));
                bool s = parity(c.s);
                bool t = parity(c.t);
                double ang = c.angle.transformed(s, t).radians();
                if (it->second) ang += M_PI;
                cp.bra0[i] = cd(kInvSqrt2, 0);
                cp.bra1[i] = std::exp(cd(0, -ang)) * kInvSqrt2;
                eff[c.a] = it->second;
                break;
            }
            case Command::Kind::CorrX:
            case Command::Kind::CorrZ:
                cp.corr_live[i] = parity(c.s);
                break;
            case Command::Kind::Shift:
                eff[c.a] ^= parity(c.t) ? 1 : 0;
                break;
            default:
                break;
        }
    }
    return cp;
}

}  // namespace

BranchMap run_branch(const Pattern& p, const std::map<int, int>& outcomes,
                     int max_active) {
    require_valid(p);
    ClassicalPass cp = classical_pass(p, outcomes);

    const std::size_t n_in = p.inputs.size();
    const std::size_t n_out = p.outputs.size();
    Mat map(std::size_t{1} << n_out, std::size_t{1} << n_in);

    // Per-qubit command streams; executing a command first drains every
    // earlier command of each qubit it acts on, so qubits come alive as
    // late as possible.
    std::map<int, std::vector<std::size_t>> stream;
    for (std::size_t i = 0; i < p.commands.size(); ++i)
        for (int q : p.commands[i].acted()) stream[q].push_back(i);

    for (std::size_t col = 0; col < (std::size_t{1} << n_in); ++col) {
        LazyState st(max_active);
        auto input_bit = [&](int q) {
            auto it = std::lower_bound(p.inputs.begin(), p.inputs.end(), q);
            std::size_t k =
                static_cast<std::size_t>(it - p.inputs.begin());
            return (col >> (n_in - 1 - k)) & 1;
        };
        auto ensure_alive = [&](int q) {
            if (st.alive(q)) return;
            if (!p.is_input(q))
                throw Error("internal: qubit touched before preparation");
            bool one = input_bit(q) != 0;
            st.birth(q, one ? cd(0) : cd(1), one ? cd(1) : cd(0));
        };

        std::vector<bool> done(p.commands.size(), false);
        std::map<int, std::size_t> cursor;
        std::function<void(std::size_t)> exec = [&](std::size_t ci) {
            if (done[ci]) return;
            const Command& c = p.commands[ci];
            for (int q : c.acted())
                while (stream[q][cursor[q]] != ci)
                    exec(stream[q][cursor[q]]);
            done[ci] = true;
            for (int q : c.acted()) ++cursor[q];
            switch (c.kind) {
                case Command::Kind::Prep:
                    st.birth(c.a, cd(kInvSqrt2), cd(kInvSqrt2));
                    break;
                case Command::Kind::Ent:
                    ensure_alive(c.a);
                    ensure_alive(c.b);
                    st.cz(c.a, c.b);
                    break;
                case Command::Kind::Meas:
                    ensure_alive(c.a);
                    st.project(c.a, cp.bra0[ci], cp.bra1[ci]);
                    break;
                case Command::Kind::CorrX:
                    if (cp.corr_live[ci]) {
                        ensure_alive(c.a);
                        st.apply1(c.a, cd(0), cd(1), cd(1), cd(0));
                    }
                    break;
                case Command::Kind::CorrZ:
                    if (cp.corr_live[ci]) {
                        ensure_alive(c.a);
                        st.apply1(c.a, cd(1), cd(0), cd(0), cd(-1));
                    }
                    break;
                case Command::Kind::Shift:
                    break;
            }
        };
        for (std::size_t ci = 0; ci < p.commands.size(); ++ci) exec(ci);
        for (int o : p.outputs) ensure_alive(o);

        std::vector<cd> column = st.extract(p.outputs);
        for (std::size_t r = 0; r < column.size(); ++r)
            map(static_cast<Eigen::Index>(r),
                static_cast<Eigen::Index>(col)) = column[r];
    }

    BranchMap out;
    for (int q : p.measured())
        out.outcomes += outcomes.at(q) ? '1' : '0';
    out.map = std::move(map);
    out.probability =
        out.map.squaredNorm() / static_cast<double>(std::size_t{1} << n_in);
    return out;
}

std::vector<BranchMap> pattern_branches(const Pattern& p, int max_active) {
    std::vector<int> meas = p.measured();
    if (meas.size() > 20)
        throw ResourceError("too many measured qubits to enumerate branches");
    std::vector<BranchMap> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << meas.size());
         ++mask) {
        std::map<int, int> outcomes;
        for (std::size_t k = 0; k < meas.size(); ++k)
            outcomes[meas[k]] =
                static_cast<int>((mask >> (meas.size() - 1 - k)) & 1);
        out.push_back(run_branch(p, outcomes, max_active));
    }
    return out;
}

bool equiv_up_to_phase(const Mat& a, const Mat& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    Eigen::Index bi = 0, bj = 0;
    double bmax = 0;
    for (Eigen::Index i = 0; i < b.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            if (std::abs(b(i, j)) > bmax) {
                bmax = std::abs(b(i, j));
                bi = i;
                bj = j;
            }
    if (bmax <= tol) return a.cwiseAbs().maxCoeff() <= tol;
    std::complex<double> lambda = a(bi, bj) / b(bi, bj);
    if (std::abs(lambda) <= tol) return false;
    lambda /= std::abs(lambda);
    return (a - lambda * b).cwiseAbs().maxCoeff() <= tol;
}

namespace {

bool proportional(const Mat& a, const Mat& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    Eigen::Index bi = 0, bj = 0;
    double bmax = 0;
    for (Eigen::Index i = 0; i < b.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            if (std::abs(b(i, j)) > bmax) {
                bmax = std::abs(b(i, j));
                bi = i;
                bj = j;
            }
    if (bmax <= tol) return true;  // zero map is a multiple of anything
    if (a.cwiseAbs().maxCoeff() <= tol) return true;
    std::complex<double> lambda = a(bi, bj) / b(bi, bj);
    return (a - lambda * b).cwiseAbs().maxCoeff() <=
           tol * (1.0 + std::abs(lambda));
}

// Strong determinism of one angle assignment: every branch equals the
// first up to phase, with matching weights.
bool strong_check(const Pattern& p, int max_active, double tol,
                  std::string* wa, std::string* wb) {
    std::vector<BranchMap> br = pattern_branches(p, max_active);
    for (std::size_t k = 1; k < br.size(); ++k) {
        if (!equiv_up_to_phase(br[0].map, br[k].map, tol) ||
            std::abs(br[0].probability - br[k].probability) > tol) {
            if (wa) *wa = br[0].outcomes;
            if (wb) *wb = br[k].outcomes;
            return false;
        }
    }
    return true;
}

}  // namespace

DeterminismReport check_determinism(const Pattern& p, int max_active) {
    if (p.measured().size() > 10)
        throw ResourceError(
            "determinism check is limited to 10 measured qubits");
    const double tol = 1e-9;
    DeterminismReport rep;

    std::vector<BranchMap> br = pattern_branches(p, max_active);
    std::size_t ref = 0;
    double best = -1;
    for (std::size_t k = 0; k < br.size(); ++k) {
        double nrm = br[k].map.cwiseAbs().maxCoeff();
        if (nrm > best) {
            best = nrm;
            ref = k;
        }
    }
    rep.deterministic = true;
    for (std::size_t k = 0; k < br.size(); ++k)
        if (!proportional(br[k].map, br[ref].map, tol)) {
            rep.deterministic = false;
            rep.witness_a = br[ref].outcomes;
            rep.witness_b = br[k].outcomes;
            break;
        }

    rep.strong = strong_check(p, max_active, tol,
                              rep.deterministic ? &rep.witness_a : nullptr,
                              rep.deterministic ? &rep.witness_b : nullptr);

    if (rep.strong) {
        // Resample every measured angle from a fixed-seed stream; a
        // pattern is uniformly deterministic when the branch structure
        // survives arbitrary angles.
        std::mt19937 rng(0x5EED);
        rep.uniform = true;
        for (int round = 0; round < 3 && rep.uniform; ++round) {
            Pattern q = p;
            std::vector<int> meas = p.measured();
            std::map<int, Angle> fresh;
            for (int v : meas) {
                std::uint32_t k = rng() % 16;
                fresh[v] = Angle(2 * static_cast<std::int64_t>(k) + 1, 32);
            }
            for (Command& c : q.commands)
                if (c.kind == Command::Kind::Meas) c.angle = fresh[c.a];
            if (!strong_check(q, max_active, tol, &rep.witness_a,
                              &rep.witness_b))
                rep.uniform = false;
        }
    }
    return rep;
}

Mat pattern_operator(const Pattern& p, int max_active, double tol) {
    std::size_t m = p.measured().size();
    if (m <= 10) {
        DeterminismReport rep = check_determinism(p, max_active);
        if (!rep.strong)
            throw PreconditionError(
                "pattern is not strongly deterministic (branches " +
                rep.witness_a + " vs " + rep.witness_b + ")");
    }
    std::map<int, int> zeros;
    for (int q : p.measured()) zeros[q] = 0;
    Mat a = run_branch(p, zeros, max_active).map *
            std::pow(2.0, static_cast<double>(m) / 2.0);
    Mat gram = a.adjoint() * a;
    Mat eye = Mat::Identity(gram.rows(), gram.cols());
    if ((gram - eye).cwiseAbs().maxCoeff() > tol)
        throw PreconditionError(
            "rescaled branch map is not an isometry within tolerance");
    return a;
}

Mat circuit_unitary(const Circuit& c) {
    require_well_formed(c);
    if (c.n > 12)
        throw ResourceError("dense circuit unitary is limited to 12 wires");
    for (const Gate& g : c.gates)
        if (g.kind == Gate::Kind::MZ)
            throw PreconditionError(
                "circuit with readout annotations has no unitary; "
                "use the restricted map");

    const std::size_t dim = std::size_t{1} << c.n;
    auto wire_bit = [&](int w) {
        return std::size_t{1} << (c.n - 1 - w);
    };
    Mat u(dim, dim);
    std::vector<cd> v(dim);
    for (std::size_t colb = 0; colb < dim; ++colb) {
        std::fill(v.begin(), v.end(), cd(0));
        v[colb] = cd(1);
        for (const Gate& g : c.gates) {
            switch (g.kind) {
                case Gate::Kind::J:
                case Gate::Kind::H: {
                    cd e = g.kind == Gate::Kind::H
                               ? cd(1)
                               : std::exp(cd(0, g.angle.radians()));
                    std::size_t b = wire_bit(g.a);
                    for (std::size_t i = 0; i < dim; ++i) {
                        if (i & b) continue;
                        cd lo = v[i], hi = v[i | b];
                        v[i] = (lo + e * hi) * kInvSqrt2;
                        v[i | b] = (lo - e * hi) * kInvSqrt2;
                    }
                    break;
                }
                case Gate::Kind::ZP: {
                    cd e = std::exp(cd(0, g.angle.radians()));
                    std::size_t b = wire_bit(g.a);
                    for (std::size_t i = 0; i < dim; ++i)
                        if (i & b) v[i] *= e;
                    break;
                }
                case Gate::Kind::CZ: {
                    std::size_t ba = wire_bit(g.a), bb = wire_bit(g.b);
                    for (std::size_t i = 0; i < dim; ++i)
                        if ((i & ba) && (i & bb)) v[i] = -v[i];
                    break;
                }
                case Gate::Kind::CX: {
                    std::size_t bc = wire_bit(g.a), bt = wire_bit(g.b);
                    for (std::size_t i = 0; i < dim; ++i)
                        if ((i & bc) && !(i & bt))
                            std::swap(v[i], v[i | bt]);
                    break;
                }
                case Gate::Kind::MZ:
                    break;
            }
        }
        for (std::size_t r = 0; r < dim; ++r)
            u(static_cast<Eigen::Index>(r),
              static_cast<Eigen::Index>(colb)) = v[r];
    }
    return u;
}

Mat restricted_circuit_map(const Circuit& c, const std::vector<int>& inputs,
                           const std::vector<int>& outputs,
                           int rescale_pow_half, int cap) {
    require_well_formed(c);
    std::vector<int> ins = inputs, outs = outputs;
    std::sort(ins.begin(), ins.end());
    std::sort(outs.begin(), outs.end());
    std::set<int> in_set(ins.begin(), ins.end());
    std::set<int> out_set(outs.begin(), outs.end());

    // Post-selection absorbs trailing control-type gates: once every later
    // use of a non-output wire w is absorbed, <0|_w CX(w->t) = <0|_w (x) I_t
    // and <0|_w CZ(w,b) = <0|_w (x) I_b, so the gate drops out of the
    // restricted map exactly. Dropping one gate can expose another wire's
    // trailing controls (e.g. a fan-in ancilla whose feed gates become
    // trailing for their sources), so sweep to a fixed point. This keeps
    // outcome-delivery gates from holding their source wires alive.
    std::vector<char> skip(c.gates.size(), 0);
    {
        std::vector<std::vector<std::size_t>> uses(
            static_cast<std::size_t>(c.n));
        for (std::size_t i = 0; i < c.gates.size(); ++i)
            if (c.gates[i].kind != Gate::Kind::MZ)
                for (int w : c.gates[i].wires())
                    uses[static_cast<std::size_t>(w)].push_back(i);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int w = 0; w < c.n; ++w) {
                if (out_set.count(w)) continue;
                auto& us = uses[static_cast<std::size_t>(w)];
                while (!us.empty()) {
                    if (skip[us.back()]) {
                        us.pop_back();
                        continue;
                    }
                    const Gate& g = c.gates[us.back()];
                    bool control_use =
                        g.kind == Gate::Kind::CZ ||
                        (g.kind == Gate::Kind::CX && g.a == w);
                    if (!control_use) break;
                    skip[us.back()] = 1;
                    us.pop_back();
                    changed = true;
                }
            }
        }
    }

    // Last surviving non-MZ touch per wire; the branch-zero reading of a
    // trailing MZ is the same <0| post-selection applied at the wire's
    // real last use.
    std::vector<int> last_gate(static_cast<std::size_t>(c.n), -1);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        if (c.gates[i].kind == Gate::Kind::MZ || skip[i]) continue;
        for (int w : c.gates[i].wires())
            last_gate[static_cast<std::size_t>(w)] = static_cast<int>(i);
    }

    const std::size_t n_in = ins.size();
    Mat map(std::size_t{1} << outs.size(), std::size_t{1} << n_in);

    for (std::size_t col = 0; col < (std::size_t{1} << n_in); ++col) {
        LazyState st(cap);
        bool dead_column = false;
        auto input_bit = [&](int w) {
            auto it = std::lower_bound(ins.begin(), ins.end(), w);
            std::size_t k = static_cast<std::size_t>(it - ins.begin());
            return (col >> (n_in - 1 - k)) & 1;
        };
        auto ensure_alive = [&](int w) {
            if (st.alive(w)) return;
            bool one = in_set.count(w) && input_bit(w);
            st.birth(w, one ? cd(0) : cd(1), one ? cd(1) : cd(0));
        };

        for (std::size_t i = 0; i < c.gates.size(); ++i) {
            const Gate& g = c.gates[i];
            if (g.kind == Gate::Kind::MZ || skip[i]) continue;
            for (int w : g.wires()) ensure_alive(w);
            switch (g.kind) {
                case Gate::Kind::J:
                case Gate::Kind::H: {
                    cd e = g.kind == Gate::Kind::H
                               ? cd(1)
                               : std::exp(cd(0, g.angle.radians()));
                    st.apply1(g.a, cd(kInvSqrt2), e * kInvSqrt2,
                              cd(kInvSqrt2), -e * kInvSqrt2);
                    break;
                }
                case Gate::Kind::ZP:
                    st.apply1(g.a, cd(1), cd(0), cd(0),
                              std::exp(cd(0, g.angle.radians())));
                    break;
                case Gate::Kind::CZ:
                    st.cz(g.a, g.b);
                    break;
                case Gate::Kind::CX:
                    st.cx(g.a, g.b);
                    break;
                case Gate::Kind::MZ:
                    break;
            }
            for (int w : g.wires())
                if (last_gate[static_cast<std::size_t>(w)] ==
                        static_cast<int>(i) &&
                    !out_set.count(w))
                    st.project(w, cd(1), cd(0));
        }
        // Untouched wires: outputs join the state carrying their initial
        // value; other untouched wires face the <0| post-selection.
        for (int w : outs)
            if (!st.alive(w)) ensure_alive(w);
        for (int w = 0; w < c.n; ++w)
            if (last_gate[static_cast<std::size_t>(w)] == -1 &&
                !out_set.count(w) && in_set.count(w) && input_bit(w))
                dead_column = true;

        std::vector<cd> column = st.extract(outs);
        for (std::size_t r = 0; r < column.size(); ++r)
            map(static_cast<Eigen::Index>(r),
                static_cast<Eigen::Index>(col)) =
                dead_column ? cd(0) : column[r];
    }

    if (rescale_pow_half >= 0) {
        map *= std::pow(2.0, static_cast<double>(rescale_pow_half) / 2.0);
    } else {
        double nrm = map.col(0).norm();
        if (nrm > 0) map /= nrm;
    }
    return map;
}

}  // namespace mbqc
