// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#include "mbqc/geometry.hpp"

#include <algorithm>

#include "mbqc/errors.hpp"

namespace mbqc {

namespace {
void insert_sorted_unique(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}
}  // namespace

void Geometry::add_vertex(int v) { insert_sorted_unique(vertices, v); }

void Geometry::add_edge(int u, int v) {
    if (u == v) throw PreconditionError("self-loop edge in geometry");
    add_vertex(u);
    add_vertex(v);
    std::pair<int, int> e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) edges.insert(it, e);
}

bool Geometry::has_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Geometry::has_edge(int u, int v) const {
    std::pair<int, int> e{std::min(u, v), std::max(u, v)};
    return std::binary_search(edges.begin(), edges.end(), e);
}

bool Geometry::is_input(int v) const {
    return std::binary_search(inputs.begin(), inputs.end(), v);
}

bool Geometry::is_output(int v) const {
    return std::binary_search(outputs.begin(), outputs.end(), v);
}

std::vector<int> Geometry::neighbors(int v) const {
    std::vector<int> ns;
    for (const auto& [a, b] : edges) {
        if (a == v) ns.push_back(b);
        else if (b == v) ns.push_back(a);
    }
    std::sort(ns.begin(), ns.end());
    return ns;
}

int Geometry::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges)
        if (a == v || b == v) ++d;
    return d;
}

int Geometry::max_degree() const {
    int best = 0;
    for (int v : vertices) best = std::max(best, degree(v));
    return best;
}

std::vector<int> Geometry::measured() const {
    std::vector<int> m;
    for (int v : vertices)
        if (!is_output(v)) m.push_back(v);
    return m;
}

void normalize(Geometry& g) {
    auto tidy = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    tidy(g.vertices);
    tidy(g.inputs);
    tidy(g.outputs);
    for (auto& e : g.edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    for (int v : g.inputs)
        if (!g.has_vertex(v)) throw PreconditionError("input vertex not in graph");
    for (int v : g.outputs)
        if (!g.has_vertex(v)) throw PreconditionError("output vertex not in graph");
    for (const auto& [a, b] : g.edges)
        if (!g.has_vertex(a) || !g.has_vertex(b))
            throw PreconditionError("edge endpoint not in graph");
}

}  // namespace mbqc
