// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#include <doctest.h>

#include <random>

#include "mbqc/depth.hpp"
#include "mbqc/errors.hpp"
#include "mbqc/flow.hpp"
#include "mbqc/rewrite.hpp"
#include "mbqc/sim.hpp"
#include "helpers.hpp"

using namespace mbqc;

namespace {

// Two chained J gates written in raw teleportation order; the command
// stream interleaves corrections with later preparations, so it is wild.
Pattern two_j_wild() {
    Pattern p;
    p.vertices = {0, 1, 2};
    p.inputs = {0};
    p.outputs = {2};
    p.commands = {Command::prep(1),
                  Command::ent(0, 1),
                  Command::meas(0, Angle(1, 8)),
                  Command::corr_x(1, Signal{0}),
                  Command::prep(2),
                  Command::ent(1, 2),
                  Command::meas(1, Angle(3, 8)),
                  Command::corr_x(2, Signal{1})};
    return p;
}

Pattern line_nnn() {
    Pattern p;
    p.vertices = {0, 1, 2, 3};
    p.inputs = {0};
    p.outputs = {3};
    p.commands = {Command::prep(1),
                  Command::prep(2),
                  Command::prep(3),
                  Command::ent(0, 1),
                  Command::ent(1, 2),
                  Command::ent(2, 3),
                  Command::meas(0, Angle(1, 4)),
                  Command::meas(1, Angle(1, 4), Signal{0}),
                  Command::meas(2, Angle(1, 4), Signal{1}, Signal{0}),
                  Command::corr_x(3, Signal{2}),
                  Command::corr_z(3, Signal{1})};
    return p;
}

}  // namespace

TEST_SUITE("rewrite") {

TEST_CASE("standardization sorts a wild teleportation chain") {
    Pattern p = two_j_wild();
    RewriteResult res = standardize(p);

    Pattern want;
    want.vertices = {0, 1, 2};
    want.inputs = {0};
    want.outputs = {2};
    want.commands = {Command::prep(1),
                     Command::prep(2),
                     Command::ent(0, 1),
                     Command::ent(1, 2),
                     Command::meas(0, Angle(1, 8)),
                     Command::meas(1, Angle(3, 8), Signal{0}),
                     Command::corr_z(2, Signal{0}),
                     Command::corr_x(2, Signal{1})};
    CHECK(res.pattern == want);
    CHECK(is_standard(res.pattern));
    CHECK(!res.trace.steps.empty());

    CHECK(equiv_up_to_phase(pattern_operator(p),
                            pattern_operator(res.pattern), 1e-9));

    SUBCASE("the trace replays bit for bit") {
        CHECK(res.trace.replay(p) == res.pattern);
    }
    SUBCASE("replay on a mismatched pattern is rejected") {
        Pattern other = p;
        other.commands.pop_back();
        CHECK_THROWS_AS(res.trace.replay(other), PreconditionError);
    }
    SUBCASE("standardization is idempotent") {
        RewriteResult again = standardize(res.pattern);
        CHECK(again.trace.steps.empty());
        CHECK(again.pattern == res.pattern);
    }
}

TEST_CASE("standardization preconditions") {
    Pattern p = two_j_wild();
    p.commands.push_back(Command::shift(1, Signal{0}));
    CHECK_THROWS_AS(standardize(p), PreconditionError);

    Pattern invalid;
    invalid.vertices = {0};
    invalid.inputs = {0};
    invalid.outputs = {};
    invalid.commands = {Command::prep(0)};
    CHECK_THROWS_AS(standardize(invalid), PreconditionError);
}

TEST_CASE("signal shifting clears t-domains and patches readers") {
    Pattern p = line_nnn();
    RewriteResult res = signal_shift(p);
    REQUIRE(res.trace.steps.size() == 1);
    CHECK(res.trace.steps[0] == RewriteStep{"SHIFT", 8});
    CHECK(has_trivial_t_domains(res.pattern));
    CHECK(res.pattern.commands[8] ==
          Command::meas(2, Angle(1, 4), Signal{1}));
    CHECK(res.pattern.commands[9] == Command::corr_x(3, Signal{0, 2}));
    CHECK(res.pattern.commands[10] == Command::corr_z(3, Signal{1}));
    CHECK(equiv_up_to_phase(pattern_operator(p),
                            pattern_operator(res.pattern), 1e-9));
    CHECK(res.trace.replay(p) == res.pattern);

    Pattern wild = two_j_wild();
    CHECK_THROWS_AS(signal_shift(wild), PreconditionError);
}

TEST_CASE("signal shifting cascades and canonicalizes") {
    Geometry g = testutil::sample_geometry();
    Flow fl = *find_flow(g);
    Pattern p = flow_pattern(g, fl, testutil::sample_angles());
    RewriteResult res = signal_shift(p);

    REQUIRE(res.trace.steps.size() == 2);
    CHECK(res.trace.steps[0] == RewriteStep{"SHIFT", 13});
    CHECK(res.trace.steps[1] == RewriteStep{"CANON", 16});

    CHECK(res.pattern.commands[13] == Command::meas(1, Angle(3, 8)));
    CHECK(res.pattern.commands[15] ==
          Command::meas(3, Angle(7, 8), Signal{0, 1}));
    CHECK(res.pattern.commands[16] == Command::corr_x(4, Signal{2}));
    CHECK(res.pattern.commands[17] == Command::corr_z(4, Signal{0}));
    CHECK(res.pattern.commands[18] == Command::corr_z(5, Signal{1}));
    CHECK(res.pattern.commands[19] == Command::corr_x(6, Signal{3}));
    CHECK(res.pattern.commands[20] == Command::corr_z(6, Signal{0, 1}));
    CHECK(res.pattern.commands.size() == 21);

    CHECK(quantum_depth(p) == 4);
    CHECK(quantum_depth(res.pattern) == 3);
    CHECK(res.trace.replay(p) == res.pattern);
}

TEST_CASE("pauli simplification drops X dependencies") {
    // N-X line: the X-basis measurement forgets its s-domain.
    Pattern p;
    p.vertices = {0, 1, 2};
    p.inputs = {0};
    p.outputs = {2};
    p.commands = {Command::prep(1),
                  Command::prep(2),
                  Command::ent(0, 1),
                  Command::ent(1, 2),
                  Command::meas(0, Angle(1, 4)),
                  Command::meas(1, Angle(0, 1), Signal{0}),
                  Command::corr_x(2, Signal{1}),
                  Command::corr_z(2, Signal{0})};
    RewriteResult res = pauli_simplify(p);
    REQUIRE(res.trace.steps.size() == 1);
    CHECK(res.trace.steps[0] == RewriteStep{"PX", 5});
    CHECK(res.pattern.commands[5] == Command::meas(1, Angle(0, 1)));
    CHECK(equiv_up_to_phase(pattern_operator(p),
                            pattern_operator(res.pattern), 1e-9));
    CHECK(res.trace.replay(p) == res.pattern);
}

TEST_CASE("pauli simplification folds Y dependencies") {
    Pattern p;
    p.vertices = {0, 1, 2};
    p.inputs = {0};
    p.outputs = {2};
    p.commands = {Command::prep(1),
                  Command::prep(2),
                  Command::ent(0, 1),
                  Command::ent(1, 2),
                  Command::meas(0, Angle(1, 4)),
                  Command::meas(1, Angle(1, 2), Signal{0}),
                  Command::corr_x(2, Signal{1}),
                  Command::corr_z(2, Signal{0})};
    RewriteResult res = pauli_simplify(p);
    REQUIRE(res.trace.steps.size() == 1);
    CHECK(res.trace.steps[0] == RewriteStep{"PY", 5});
    CHECK(res.pattern.commands[5] ==
          Command::meas(1, Angle(1, 2), Signal{}, Signal{0}));
    CHECK(equiv_up_to_phase(pattern_operator(p),
                            pattern_operator(res.pattern), 1e-9));

    // Bare s-domains stay untouched and unrecorded.
    Pattern q = p;
    q.commands[5] = Command::meas(1, Angle(0, 1));
    CHECK(pauli_simplify(q).trace.steps.empty());

    CHECK_THROWS_AS(pauli_simplify(two_j_wild()), PreconditionError);
}

TEST_CASE("rewrites preserve the operator on random flow patterns") {
    std::mt19937 rng(7);
    for (int i = 0; i < 25; ++i) {
        testutil::Instance inst = testutil::random_grid_instance(rng);
        Pattern p = flow_pattern(inst.g, inst.fl, inst.angles);
        Mat ref = pattern_operator(p);
        int d0 = quantum_depth(p);

        RewriteResult simp = pauli_simplify(p);
        CHECK(equiv_up_to_phase(ref, pattern_operator(simp.pattern), 1e-9));
        CHECK(simp.trace.replay(p) == simp.pattern);
        int d1 = quantum_depth(simp.pattern);
        CHECK(d1 <= d0);

        RewriteResult shifted = signal_shift(simp.pattern);
        CHECK(equiv_up_to_phase(ref, pattern_operator(shifted.pattern),
                                1e-9));
        CHECK(shifted.trace.replay(simp.pattern) == shifted.pattern);
        CHECK(quantum_depth(shifted.pattern) <= d1);
    }
}

}  // TEST_SUITE
