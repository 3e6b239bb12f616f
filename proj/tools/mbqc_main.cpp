// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
//
// Command-line front end.  Transform commands print '# key = value'
// report lines followed by the output artifact; analysis commands print
// bare 'key = value' lines.  All output is byte-deterministic.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mbqc/depth.hpp"
#include "mbqc/errors.hpp"
#include "mbqc/flow.hpp"
#include "mbqc/io.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/rewrite.hpp"
#include "mbqc/sim.hpp"
#include "mbqc/translate.hpp"

namespace {

using namespace mbqc;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

using Report = std::map<std::string, std::string>;

void print_report(const Report& rep, bool artifact_follows) {
    for (const auto& [k, v] : rep) {
        if (artifact_follows) std::cout << "# ";
        std::cout << k << " = " << v << "\n";
    }
}

// First word of the first non-comment line: "circuit" or "pattern".
std::string sniff(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string w;
        if (ls >> w) return w;
    }
    return "";
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

// Loads an artifact and produces its linear map for equivalence checking.
Mat map_of_file(const std::string& text) {
    std::string kind = sniff(text);
    if (kind == "pattern") {
        Pattern p = parse_pattern(text);
        return pattern_operator(p);
    }
    if (kind != "circuit")
        throw ParseError("expected a 'circuit' or 'pattern' artifact");
    Circuit c = parse_circuit(text);
    bool has_mz = false;
    for (const Gate& g : c.gates)
        if (g.kind == Gate::Kind::MZ) has_mz = true;
    if (!has_mz) return circuit_unitary(c);
    // Restricted map: outputs are the MZ-free wires, inputs the first
    // as-many wires; the column norm fixes the post-selection weight.
    std::vector<bool> measured(static_cast<std::size_t>(c.n), false);
    for (const Gate& g : c.gates)
        if (g.kind == Gate::Kind::MZ)
            measured[static_cast<std::size_t>(g.a)] = true;
    std::vector<int> outputs;
    for (int w = 0; w < c.n; ++w)
        if (!measured[static_cast<std::size_t>(w)]) outputs.push_back(w);
    std::vector<int> inputs;
    for (int w = 0; w < static_cast<int>(outputs.size()); ++w)
        inputs.push_back(w);
    return restricted_circuit_map(c, inputs, outputs);
}

int run(int argc, char** argv) {
    CLI::App app{"measurement-pattern compiler toolkit"};
    app.require_subcommand(1);

    std::string file, file_b;
    std::string variant = "direct";
    std::string fanin = "tree";
    double tol = 1e-9;
    bool want_quantum = false, want_classical = false, want_prep = false,
         want_char = false, want_bound = false, geometry_dot_flag = false;

    auto* t_cmd = app.add_subcommand("translate",
                                     "source circuit -> measurement pattern");
    t_cmd->add_option("file", file)->required();
    t_cmd->add_option("--variant", variant)
        ->check(CLI::IsMember({"direct", "cluster"}));

    auto* std_cmd =
        app.add_subcommand("standardize", "sort commands into standard form");
    std_cmd->add_option("file", file)->required();
    auto* shift_cmd =
        app.add_subcommand("shift", "remove measurement t-domains");
    shift_cmd->add_option("file", file)->required();
    auto* simp_cmd =
        app.add_subcommand("simplify", "drop ineffective Pauli dependencies");
    simp_cmd->add_option("file", file)->required();

    auto* depth_cmd = app.add_subcommand("depth", "depth figures");
    depth_cmd->add_option("file", file)->required();
    depth_cmd->add_flag("--quantum", want_quantum);
    depth_cmd->add_flag("--classical", want_classical);
    depth_cmd->add_flag("--preparation", want_prep);
    depth_cmd->add_flag("--characterized", want_char);
    depth_cmd->add_flag("--bound", want_bound);

    auto* flow_cmd = app.add_subcommand("flow", "find a causal flow");
    flow_cmd->add_option("file", file)->required();
    auto* paths_cmd =
        app.add_subcommand("paths", "enumerate influencing paths");
    paths_cmd->add_option("file", file)->required();

    auto* verify_cmd =
        app.add_subcommand("verify", "check two artifacts for equivalence");
    verify_cmd->add_option("file_a", file)->required();
    verify_cmd->add_option("file_b", file_b)->required();
    verify_cmd->add_option("--tol", tol);

    auto* par_cmd = app.add_subcommand(
        "parallelize", "source circuit -> parallel target circuit");
    par_cmd->add_option("file", file)->required();
    par_cmd->add_option("--fanin", fanin)
        ->check(CLI::IsMember({"linear", "tree"}));

    auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering");
    dot_cmd->add_option("file", file)->required();
    dot_cmd->add_flag("--geometry", geometry_dot_flag,
                      "render the open graph instead of the dependencies");

    CLI11_PARSE(app, argc, argv);

    if (t_cmd->parsed()) {
        std::string text = slurp(file);
        Translation tr = circuit_to_pattern(
            parse_circuit(text), variant == "cluster"
                                     ? TranslateVariant::Cluster
                                     : TranslateVariant::Direct);
        Report rep;
        rep["digest"] = fnv1a_hex(text);
        rep["measurements"] = std::to_string(tr.stats.measurements);
        rep["predicted_depth_bound"] =
            std::to_string(tr.stats.predicted_depth_bound);
        rep["qubits"] = std::to_string(tr.stats.qubits);
        rep["teleport_positions"] =
            std::to_string(tr.stats.teleport_insertions);
        rep["variant"] = variant;
        print_report(rep, true);
        std::cout << serialize_pattern(tr.pattern);
        return 0;
    }
    if (std_cmd->parsed() || shift_cmd->parsed() || simp_cmd->parsed()) {
        std::string text = slurp(file);
        Pattern p = parse_pattern(text);
        RewriteResult res = std_cmd->parsed()   ? standardize(p)
                            : shift_cmd->parsed() ? signal_shift(p)
                                                  : pauli_simplify(p);
        Report rep;
        rep["digest"] = fnv1a_hex(text);
        rep["steps"] = std::to_string(res.trace.steps.size());
        print_report(rep, true);
        std::cout << serialize_pattern(res.pattern);
        return 0;
    }
    if (depth_cmd->parsed()) {
        std::string text = slurp(file);
        Pattern p = parse_pattern(text);
        bool all = !(want_quantum || want_classical || want_prep ||
                     want_char || want_bound);
        Report rep;
        rep["digest"] = fnv1a_hex(text);
        if (all || want_quantum)
            rep["quantum"] = std::to_string(quantum_depth(p));
        if (all || want_classical)
            rep["classical"] = std::to_string(classical_depth(p));
        if (all || want_prep)
            rep["preparation"] =
                std::to_string(preparation_depth(geometry_of(p)));
        if (all || want_char || want_bound) {
            DepthReport d = characterized_depth(p);
            if (all || want_char)
                rep["characterized"] = std::to_string(d.characterized);
            if (all || want_bound)
                rep["bound"] = std::to_string(d.upper_bound);
        }
        print_report(rep, false);
        return 0;
    }
    if (flow_cmd->parsed()) {
        std::string text = slurp(file);
        Pattern p = parse_pattern(text);
        Geometry g = geometry_of(p);
        auto fl = find_flow(g);
        Report rep;
        rep["digest"] = fnv1a_hex(text);
        if (!fl) {
            rep["flow"] = "NOFLOW";
            print_report(rep, false);
            return 1;
        }
        std::string fstr;
        for (const auto& [v, fv] : fl->f) {
            if (!fstr.empty()) fstr += ",";
            fstr += std::to_string(v) + ">" + std::to_string(fv);
        }
        std::string lstr;
        for (const auto& lay : fl->layers) {
            lstr += "[";
            for (std::size_t i = 0; i < lay.size(); ++i) {
                if (i) lstr += " ";
                lstr += std::to_string(lay[i]);
            }
            lstr += "]";
        }
        rep["depth"] = std::to_string(fl->depth());
        rep["flow"] = fstr;
        rep["layers"] = lstr;
        print_report(rep, false);
        return 0;
    }
    if (paths_cmd->parsed()) {
        std::string text = slurp(file);
        Pattern p = parse_pattern(text);
        Geometry g = geometry_of(p);
        auto fl = find_flow(g);
        if (!fl) {
            Report rep;
            rep["digest"] = fnv1a_hex(text);
            rep["flow"] = "NOFLOW";
            print_report(rep, false);
            return 1;
        }
        auto ps = influencing_paths(g, *fl);
        Report rep;
        rep["count"] = std::to_string(ps.size());
        rep["digest"] = fnv1a_hex(text);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            char key[16];
            std::snprintf(key, sizeof(key), "path.%03zu", i);
            std::string v;
            for (std::size_t k = 0; k < ps[i].vertices.size(); ++k) {
                if (k) v += " ";
                v += std::to_string(ps[i].vertices[k]);
            }
            rep[key] = v;
        }
        print_report(rep, false);
        return 0;
    }
    if (verify_cmd->parsed()) {
        std::string ta = slurp(file), tb = slurp(file_b);
        Mat a = map_of_file(ta);
        Mat b = map_of_file(tb);
        bool same_shape = a.rows() == b.rows() && a.cols() == b.cols();
        bool ok = same_shape && equiv_up_to_phase(a, b, tol);
        double delta = -1;
        if (same_shape) {
            // Residual after the optimal phase alignment, for the report.
            Eigen::Index bi = 0, bj = 0;
            double bmax = 0;
            for (Eigen::Index i = 0; i < b.rows(); ++i)
                for (Eigen::Index j = 0; j < b.cols(); ++j)
                    if (std::abs(b(i, j)) > bmax) {
                        bmax = std::abs(b(i, j));
                        bi = i;
                        bj = j;
                    }
            if (bmax > 0 && std::abs(a(bi, bj)) > 0) {
                std::complex<double> lam = a(bi, bj) / b(bi, bj);
                lam /= std::abs(lam);
                delta = (a - lam * b).cwiseAbs().maxCoeff();
            } else {
                delta = std::max(a.cwiseAbs().maxCoeff(),
                                 b.cwiseAbs().maxCoeff());
            }
        }
        Report rep;
        rep["digest_a"] = fnv1a_hex(ta);
        rep["digest_b"] = fnv1a_hex(tb);
        rep["equivalent"] = ok ? "yes" : "no";
        rep["max_delta"] = same_shape ? fmt_double(delta) : "shape-mismatch";
        print_report(rep, false);
        return ok ? 0 : 1;
    }
    if (par_cmd->parsed()) {
        std::string text = slurp(file);
        ParallelizeResult res = parallelize_circuit(
            parse_circuit(text),
            fanin == "linear" ? FanInKind::Linear : FanInKind::Tree);
        Report rep;
        rep["ancillas"] = std::to_string(res.emission.ancilla_count);
        rep["bound"] = std::to_string(res.report.upper_bound);
        rep["characterized"] = std::to_string(res.report.characterized);
        rep["classical"] = std::to_string(res.report.classical);
        rep["consecutive_j"] = std::to_string(res.report.consecutive_j);
        rep["digest"] = fnv1a_hex(text);
        rep["fanin"] = fanin;
        rep["measurements"] =
            std::to_string(res.translation.stats.measurements);
        rep["preparation"] = std::to_string(res.report.preparation);
        rep["qubits"] = std::to_string(res.translation.stats.qubits);
        rep["realized"] = std::to_string(res.report.realized);
        print_report(rep, true);
        std::cout << serialize_circuit(res.emission.circuit);
        return 0;
    }
    if (dot_cmd->parsed()) {
        std::string text = slurp(file);
        Pattern p = parse_pattern(text);
        if (geometry_dot_flag)
            std::cout << geometry_dot(geometry_of(p));
        else
            std::cout << dependency_dot(p);
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
