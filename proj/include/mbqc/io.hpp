// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#pragma once

#include <string>

#include "mbqc/circuit.hpp"
#include "mbqc/geometry.hpp"
#include "mbqc/pattern.hpp"

namespace mbqc {

// Textual pattern format.  First non-comment line:
//   pattern V=<ids> I=<ids> O=<ids>
// with comma-separated ascending id lists (empty lists allowed), then one
// command per line:
//   N <q>
//   E <i> <j>
//   M <q> a=<num>/<den> s=[<ids>] t=[<ids>]   (s=/t= may be omitted)
//   X <q> s=[<ids>]
//   Z <q> s=[<ids>]
//   S <q> t=[<ids>]
// Angles are rational multiples of pi.  '#' starts a comment.
Pattern parse_pattern(const std::string& text);
std::string serialize_pattern(const Pattern& p);

// Textual circuit format.  First non-comment line:
//   circuit <n> <source|target>
// then one gate per line: J <q> <num>/<den>, CZ <a> <b>, H <q>,
// ZP <q> <num>/<den>, CX <c> <t>, MZ <q>.
Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& c);

// Graphviz renderings (deterministic: sorted vertices and edges).
// Geometry: inputs are boxes, measured vertices filled black, outputs
// white; edges carry the preparation timestep computed by edge coloring.
std::string geometry_dot(const Geometry& g);

}  // namespace mbqc
