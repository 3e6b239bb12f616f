// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#include "mbqc/io.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "mbqc/depth.hpp"
#include "mbqc/errors.hpp"

namespace mbqc {

namespace {

// Strips comments and returns whitespace-split tokens per retained line,
// with the original 1-based line number.
std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenize(
    const std::string& text) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) rows.emplace_back(no, std::move(toks));
    }
    return rows;
}

std::int64_t parse_int(const std::string& s, std::size_t line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'", line);
    }
}

std::vector<int> parse_id_list(const std::string& s, std::size_t line) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(static_cast<int>(parse_int(item, line)));
    return out;
}

Angle parse_angle(const std::string& s, std::size_t line) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Angle(parse_int(s, line), 1);
    return Angle(parse_int(s.substr(0, slash), line),
                 parse_int(s.substr(slash + 1), line));
}

// Accepts "k=[a,b,...]" and returns the id list.
Signal parse_signal(const std::string& tok, char key, std::size_t line) {
    std::string prefix = std::string(1, key) + "=[";
    if (tok.rfind(prefix, 0) != 0 || tok.back() != ']')
        throw ParseError("expected " + std::string(1, key) +
                             "=[...], got '" + tok + "'",
                         line);
    auto ids =
        parse_id_list(tok.substr(prefix.size(),
                                 tok.size() - prefix.size() - 1),
                      line);
    return Signal(std::set<int>(ids.begin(), ids.end()));
}

std::string field_after(const std::string& tok, const std::string& key,
                        std::size_t line) {
    if (tok.rfind(key, 0) != 0)
        throw ParseError("expected " + key + "..., got '" + tok + "'", line);
    return tok.substr(key.size());
}

std::string id_list_str(const std::vector<int>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(ids[i]);
    }
    return out;
}

}  // namespace

Pattern parse_pattern(const std::string& text) {
    auto rows = tokenize(text);
    if (rows.empty()) throw ParseError("empty pattern text");
    const auto& [hline, head] = rows.front();
    if (head.size() != 4 || head[0] != "pattern")
        throw ParseError("expected header 'pattern V=... I=... O=...'", hline);

    Pattern p;
    p.vertices = parse_id_list(field_after(head[1], "V=", hline), hline);
    p.inputs = parse_id_list(field_after(head[2], "I=", hline), hline);
    p.outputs = parse_id_list(field_after(head[3], "O=", hline), hline);

    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& [no, toks] = rows[r];
        const std::string& op = toks[0];
        auto arity = [&](std::size_t lo, std::size_t hi) {
            if (toks.size() < lo || toks.size() > hi)
                throw ParseError("wrong number of fields for '" + op + "'",
                                 no);
        };
        if (op == "N") {
            arity(2, 2);
            p.commands.push_back(
                Command::prep(static_cast<int>(parse_int(toks[1], no))));
        } else if (op == "E") {
            arity(3, 3);
            p.commands.push_back(
                Command::ent(static_cast<int>(parse_int(toks[1], no)),
                             static_cast<int>(parse_int(toks[2], no))));
        } else if (op == "M") {
            arity(3, 5);
            int q = static_cast<int>(parse_int(toks[1], no));
            Angle a = parse_angle(field_after(toks[2], "a=", no), no);
            Signal s, t;
            for (std::size_t i = 3; i < toks.size(); ++i) {
                if (toks[i][0] == 's')
                    s = parse_signal(toks[i], 's', no);
                else
                    t = parse_signal(toks[i], 't', no);
            }
            p.commands.push_back(Command::meas(q, a, s, t));
        } else if (op == "X" || op == "Z") {
            arity(3, 3);
            int q = static_cast<int>(parse_int(toks[1], no));
            Signal s = parse_signal(toks[2], 's', no);
            p.commands.push_back(op == "X" ? Command::corr_x(q, s)
                                           : Command::corr_z(q, s));
        } else if (op == "S") {
            arity(3, 3);
            int q = static_cast<int>(parse_int(toks[1], no));
            p.commands.push_back(Command::shift(q, parse_signal(toks[2], 't', no)));
        } else {
            throw ParseError("unknown pattern command '" + op + "'", no);
        }
    }
    return p;
}

std::string serialize_pattern(const Pattern& p) {
    std::string out = "pattern V=" + id_list_str(p.vertices) +
                      " I=" + id_list_str(p.inputs) +
                      " O=" + id_list_str(p.outputs) + "\n";
    for (const Command& c : p.commands) out += c.str() + "\n";
    return out;
}

Circuit parse_circuit(const std::string& text) {
    auto rows = tokenize(text);
    if (rows.empty()) throw ParseError("empty circuit text");
    const auto& [hline, head] = rows.front();
    if (head.size() != 3 || head[0] != "circuit")
        throw ParseError("expected header 'circuit <n> <source|target>'",
                         hline);
    Circuit c;
    c.n = static_cast<int>(parse_int(head[1], hline));
    if (head[2] == "source")
        c.dialect = Circuit::Dialect::Source;
    else if (head[2] == "target")
        c.dialect = Circuit::Dialect::Target;
    else
        throw ParseError("dialect must be 'source' or 'target'", hline);

    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& [no, toks] = rows[r];
        const std::string& op = toks[0];
        auto arity = [&](std::size_t k) {
            if (toks.size() != k)
                throw ParseError("wrong number of fields for '" + op + "'",
                                 no);
        };
        auto wire = [&](std::size_t i) {
            return static_cast<int>(parse_int(toks[i], no));
        };
        if (op == "J") {
            arity(3);
            c.gates.push_back(Gate::j(wire(1), parse_angle(toks[2], no)));
        } else if (op == "CZ") {
            arity(3);
            c.gates.push_back(Gate::cz(wire(1), wire(2)));
        } else if (op == "H") {
            arity(2);
            c.gates.push_back(Gate::h(wire(1)));
        } else if (op == "ZP") {
            arity(3);
            c.gates.push_back(Gate::zp(wire(1), parse_angle(toks[2], no)));
        } else if (op == "CX") {
            arity(3);
            c.gates.push_back(Gate::cx(wire(1), wire(2)));
        } else if (op == "MZ") {
            arity(2);
            c.gates.push_back(Gate::mz(wire(1)));
        } else {
            throw ParseError("unknown gate '" + op + "'", no);
        }
    }
    require_well_formed(c);
    return c;
}

std::string serialize_circuit(const Circuit& c) {
    std::string out = "circuit " + std::to_string(c.n) + " " +
                      (c.dialect == Circuit::Dialect::Source ? "source"
                                                             : "target") +
                      "\n";
    for (const Gate& g : c.gates) out += g.str() + "\n";
    return out;
}

std::string geometry_dot(const Geometry& g) {
    EdgeColoring col = preparation_schedule(g);
    std::ostringstream out;
    out << "graph geometry {\n";
    for (int v : g.vertices) {
        out << "  v" << v << " [label=\"" << v << "\"";
        if (g.is_input(v)) out << " shape=box";
        if (!g.is_output(v))
            out << " style=filled fillcolor=black fontcolor=white";
        out << "];\n";
    }
    for (const auto& e : g.edges) {
        out << "  v" << e.first << " -- v" << e.second << " [label=\""
            << col.color.at(e) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace mbqc
