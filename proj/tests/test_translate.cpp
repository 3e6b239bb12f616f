// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <vector>

#include "mbqc/depth.hpp"
#include "mbqc/errors.hpp"
#include "mbqc/rewrite.hpp"
#include "mbqc/sim.hpp"
#include "mbqc/translate.hpp"
#include "helpers.hpp"

using namespace mbqc;

namespace {

Circuit source(int n, std::vector<Gate> gates) {
    Circuit c;
    c.n = n;
    c.dialect = Circuit::Dialect::Source;
    c.gates = std::move(gates);
    return c;
}

// Restricted map of the emitted circuit in branch zero, rescaled by one
// sqrt(2) per measured pattern qubit.
Mat emission_map(const Translation& tr, const CircuitEmission& em) {
    std::vector<int> in_wires, out_wires;
    for (int v : tr.pattern.inputs) in_wires.push_back(em.wire_of.at(v));
    for (int v : tr.pattern.outputs) out_wires.push_back(em.wire_of.at(v));
    int measured = static_cast<int>(tr.pattern.vertices.size() -
                                    tr.pattern.outputs.size());
    return restricted_circuit_map(em.circuit, in_wires, out_wires, measured);
}

}  // namespace

TEST_SUITE("translate") {

TEST_CASE("adjacent duplicate CZ gates cancel") {
    Circuit c = source(2, {Gate::cz(0, 1), Gate::cz(0, 1)});
    CHECK(cz_normalize(c).gates.empty());

    Circuit blocked =
        source(2, {Gate::cz(0, 1), Gate::j(0, Angle(1, 4)), Gate::cz(0, 1)});
    CHECK(cz_normalize(blocked).gates.size() == 3);

    Circuit apart =
        source(4, {Gate::cz(0, 1), Gate::cz(2, 3), Gate::cz(0, 1)});
    Circuit na = cz_normalize(apart);
    REQUIRE(na.gates.size() == 1);
    CHECK(na.gates[0].a == 2);
    CHECK(na.gates[0].b == 3);

    Circuit overlap =
        source(3, {Gate::cz(0, 1), Gate::cz(1, 2), Gate::cz(0, 1)});
    CHECK(cz_normalize(overlap).gates.size() == 3);

    Circuit triple =
        source(2, {Gate::cz(0, 1), Gate::cz(0, 1), Gate::cz(0, 1)});
    CHECK(cz_normalize(triple).gates.size() == 1);
}

TEST_CASE("a single J gate translates to the teleportation pattern") {
    Circuit c = source(1, {Gate::j(0, Angle(1, 4))});
    Translation tr = circuit_to_pattern(c);
    CHECK(tr.pattern.vertices == std::vector<int>{0, 1});
    CHECK(tr.pattern.inputs == std::vector<int>{0});
    CHECK(tr.pattern.outputs == std::vector<int>{1});
    std::vector<Command> want = {Command::prep(1), Command::ent(0, 1),
                                 Command::meas(0, Angle(7, 4)),
                                 Command::corr_x(1, Signal{0})};
    CHECK(tr.pattern.commands == want);
    CHECK(tr.roles.at(0) == VertexRole::Input);
    CHECK(tr.roles.at(1) == VertexRole::Output);
    CHECK(tr.stats.qubits == 2);
    CHECK(tr.stats.measurements == 1);
    CHECK(tr.stats.teleport_insertions == 0);
    CHECK(tr.flow.f == std::map<int, int>{{0, 1}});
    CHECK(equiv_up_to_phase(pattern_operator(tr.pattern), circuit_unitary(c),
                            1e-9));
}

TEST_CASE("translation rejects wrong dialects") {
    Circuit t;
    t.n = 1;
    t.dialect = Circuit::Dialect::Target;
    t.gates = {Gate::h(0)};
    CHECK_THROWS_AS(circuit_to_pattern(t), PreconditionError);
}

TEST_CASE("three-wire example, direct variant") {
    Circuit c = testutil::three_wire_example();
    Translation tr = circuit_to_pattern(c, TranslateVariant::Direct);

    CHECK(tr.pattern.vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(tr.pattern.inputs == std::vector<int>{0, 1, 2});
    CHECK(tr.pattern.outputs == std::vector<int>{2, 4, 5});
    std::vector<std::pair<int, int>> edges = {{0, 3}, {1, 3}, {1, 4},
                                              {2, 4}, {3, 4}, {3, 5}};
    CHECK(tr.geometry.edges == edges);
    CHECK(tr.geometry.max_degree() == 4);
    CHECK(tr.geometry.degree(3) == 4);

    CHECK(tr.flow.f == std::map<int, int>{{0, 3}, {1, 4}, {3, 5}});
    std::map<int, Angle> angles{
        {0, Angle(15, 8)}, {1, Angle(13, 8)}, {3, Angle(11, 8)}};
    CHECK(tr.angles == angles);

    CHECK(tr.roles.at(0) == VertexRole::Input);
    CHECK(tr.roles.at(1) == VertexRole::Input);
    CHECK(tr.roles.at(2) == VertexRole::InputOutput);
    CHECK(tr.roles.at(3) == VertexRole::Auxiliary);
    CHECK(tr.roles.at(4) == VertexRole::Output);
    CHECK(tr.roles.at(5) == VertexRole::Output);

    CHECK(tr.stats.qubits == 6);
    CHECK(tr.stats.measurements == 3);
    CHECK(tr.stats.teleport_insertions == 2);

    CHECK(is_standard(tr.pattern));
    CHECK(has_trivial_t_domains(tr.pattern));
    CHECK(validate_pattern(tr.pattern).empty());

    CHECK(equiv_up_to_phase(pattern_operator(tr.pattern),
                            testutil::source_unitary_as_outputs(c, tr),
                            1e-9));
}

TEST_CASE("three-wire example, cluster variant") {
    Circuit c = testutil::three_wire_example();
    Translation direct = circuit_to_pattern(c, TranslateVariant::Direct);
    Translation tr = circuit_to_pattern(c, TranslateVariant::Cluster);

    CHECK(tr.pattern.vertices.size() == 10);
    CHECK(tr.pattern.outputs == std::vector<int>{2, 8, 9});
    std::vector<std::pair<int, int>> edges = {{0, 3}, {1, 3}, {1, 4},
                                              {2, 4}, {3, 5}, {4, 7},
                                              {5, 6}, {6, 8}, {6, 9}, {7, 8}};
    CHECK(tr.geometry.edges == edges);
    CHECK(tr.geometry.max_degree() == 3);

    CHECK(tr.stats.qubits == 10);
    CHECK(tr.stats.measurements == 7);
    CHECK(tr.stats.teleport_insertions == 2);
    CHECK(tr.roles.at(3) == VertexRole::Auxiliary);
    CHECK(tr.roles.at(6) == VertexRole::Auxiliary);
    CHECK(tr.roles.at(8) == VertexRole::Output);
    CHECK(tr.roles.at(9) == VertexRole::Output);

    DepthReport rep = characterized_depth(tr.geometry, tr.flow, tr.angles);
    CHECK(rep.preparation <= 4);

    Mat a = pattern_operator(tr.pattern);
    CHECK(equiv_up_to_phase(a, pattern_operator(direct.pattern), 1e-9));
    CHECK(equiv_up_to_phase(a, testutil::source_unitary_as_outputs(c, tr),
                            1e-9));
}

TEST_CASE("emission of the single-J pattern is the readout block") {
    Circuit c = source(1, {Gate::j(0, Angle(1, 4))});
    Translation tr = circuit_to_pattern(c);
    CircuitEmission em = pattern_to_circuit_ex(tr.pattern, FanInKind::Tree);
    std::vector<Gate> want = {Gate::h(1),          Gate::cz(0, 1),
                              Gate::zp(0, Angle(1, 4)), Gate::h(0),
                              Gate::cx(0, 1),      Gate::mz(0)};
    CHECK(em.circuit.gates == want);
    CHECK(em.circuit.n == 2);
    CHECK(em.ancilla_count == 0);
    REQUIRE(em.fanins.size() == 1);
    CHECK(em.fanins[0].sources == 1);
    CHECK(em.fanins[0].levels == 0);

    Mat m = emission_map(tr, em);
    CHECK(equiv_up_to_phase(m, circuit_unitary(c), 1e-9));
}

TEST_CASE("emission preconditions") {
    Pattern wild;
    wild.vertices = {0, 1};
    wild.inputs = {0};
    wild.outputs = {1};
    wild.commands = {Command::ent(0, 1), Command::prep(1),
                     Command::meas(0, Angle(1, 4))};
    CHECK_THROWS_AS(pattern_to_circuit_ex(wild), PreconditionError);

    Pattern witht;
    witht.vertices = {0, 1, 2};
    witht.inputs = {0, 1, 2};
    witht.outputs = {2};
    witht.commands = {Command::meas(0, Angle(1, 4)),
                      Command::meas(1, Angle(1, 4), Signal{0}, Signal{0}),
                      Command::corr_x(2, Signal{1})};
    CHECK_THROWS_AS(pattern_to_circuit_ex(witht), PreconditionError);
}

TEST_CASE("fan-in shapes") {
    // Five measured inputs feed one correction; the tree kind pairs them
    // over fresh ancillas, the linear kind chains them onto the target.
    Pattern p;
    p.vertices = {0, 1, 2, 3, 4, 6};
    p.inputs = p.vertices;
    p.outputs = {6};
    for (int q = 0; q < 5; ++q)
        p.commands.push_back(Command::meas(q, Angle(1, 4)));
    p.commands.push_back(
        Command::corr_x(6, Signal{0, 1, 2, 3, 4}));

    CircuitEmission tree = pattern_to_circuit_ex(p, FanInKind::Tree);
    REQUIRE(tree.fanins.size() == 1);
    CHECK(tree.fanins[0].kind == FanInKind::Tree);
    CHECK(tree.fanins[0].sources == 5);
    CHECK(tree.fanins[0].levels == 3);
    CHECK(tree.fanins[0].ancillas.size() == 4);
    CHECK(tree.fanins[0].target_wire == 5);
    CHECK(tree.ancilla_count == 4);
    CHECK(tree.circuit.n == 10);

    CircuitEmission lin = pattern_to_circuit_ex(p, FanInKind::Linear);
    REQUIRE(lin.fanins.size() == 1);
    CHECK(lin.fanins[0].kind == FanInKind::Linear);
    CHECK(lin.fanins[0].levels == 5);
    CHECK(lin.fanins[0].ancillas.empty());
    CHECK(lin.ancilla_count == 0);
    int cx = 0;
    for (const Gate& g : lin.circuit.gates)
        if (g.kind == Gate::Kind::CX) ++cx;
    CHECK(cx == 5);
}

TEST_CASE("emitted circuits reproduce random source circuits") {
    std::mt19937 rng(31);
    for (int i = 0; i < 12; ++i) {
        Circuit c = testutil::random_source_circuit(rng, 3, 6);
        Translation tr = circuit_to_pattern(c);
        Mat ref = testutil::source_unitary_as_outputs(c, tr);
        for (FanInKind k : {FanInKind::Tree, FanInKind::Linear}) {
            CircuitEmission em = pattern_to_circuit_ex(tr.pattern, k);
            CHECK(equiv_up_to_phase(emission_map(tr, em), ref, 1e-9));
        }
        if (tr.stats.measurements <= 6)
            CHECK(equiv_up_to_phase(pattern_operator(tr.pattern), ref, 1e-9));
    }
}

TEST_CASE("word letters along circuit influencing paths") {
    Circuit c =
        source(1, {Gate::j(0, Angle(1, 4)), Gate::j(0, Angle(3, 8))});
    auto paths = circuit_influencing_paths(c);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].path.vertices == std::vector<int>{0, 1, 2});
    std::vector<Angle> word{Angle(1, 4), Angle(3, 8)};
    CHECK(paths[0].word == word);
}

TEST_CASE("chained rotation depth") {
    CHECK(consecutive_j_depth(source(
              1, {Gate::j(0, Angle(1, 4)), Gate::j(0, Angle(3, 8))})) == 2);
    CHECK(consecutive_j_depth(
              source(1, {Gate::j(0, Angle(1, 4)), Gate::j(0, Angle(0, 1)),
                         Gate::j(0, Angle(1, 4))})) == 1);
    CHECK(consecutive_j_depth(source(2, {Gate::cz(0, 1)})) == 0);
    CHECK(consecutive_j_depth(source(1, {Gate::j(0, Angle(0, 1))})) == 1);
}

TEST_CASE("full parallelization pipeline") {
    Circuit c = testutil::three_wire_example();
    ParallelizeResult res = parallelize_circuit(c, FanInKind::Tree);
    CHECK(res.report.characterized == quantum_depth(res.simplified));
    CHECK(res.report.realized == circuit_depth(res.emission.circuit));
    CHECK(res.report.realized > 0);
    CHECK(res.report.consecutive_j >= 1);
    CHECK(has_trivial_t_domains(res.simplified));
    Mat ref = testutil::source_unitary_as_outputs(c, res.translation);
    CHECK(equiv_up_to_phase(emission_map(res.translation, res.emission), ref,
                            1e-9));
}

}  // TEST_SUITE
