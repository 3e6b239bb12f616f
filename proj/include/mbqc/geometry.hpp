// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#pragma once

#include <map>
#include <utility>
#include <vector>

namespace mbqc {

// An open graph: an undirected simple graph together with designated
// input and output vertex sets (which may overlap).
struct Geometry {
    std::vector<int> vertices;                 // ascending, unique
    std::vector<std::pair<int, int>> edges;    // (a<b), lex sorted, unique
    std::vector<int> inputs;                   // ascending subset of vertices
    std::vector<int> outputs;                  // ascending subset of vertices

    void add_vertex(int v);
    void add_edge(int u, int v);

    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;
    bool is_input(int v) const;
    bool is_output(int v) const;

    // Neighbors of v in ascending order.
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;

    // Measured vertices: the complement of the outputs, ascending.
    std::vector<int> measured() const;

    bool operator==(const Geometry& o) const {
        return vertices == o.vertices && edges == o.edges &&
               inputs == o.inputs && outputs == o.outputs;
    }
};

// Checked after mutation batches: sorts/dedupes the stored lists and
// verifies that inputs/outputs/edges refer to known vertices.
void normalize(Geometry& g);

}  // namespace mbqc
