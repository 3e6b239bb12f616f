// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#pragma once

#include <set>
#include <string>

namespace mbqc {

// A signal is a parity (XOR) of measurement outcomes, represented as the
// set of qubit ids whose outcomes are summed modulo 2.
class Signal {
public:
    Signal() = default;
    Signal(std::initializer_list<int> qs) : bits_(qs) {}
    explicit Signal(std::set<int> qs) : bits_(std::move(qs)) {}

    bool empty() const { return bits_.empty(); }
    std::size_t size() const { return bits_.size(); }
    bool contains(int q) const { return bits_.count(q) != 0; }
    const std::set<int>& qubits() const { return bits_; }

    void insert(int q) { bits_.insert(q); }
    void clear() { bits_.clear(); }

    // Symmetric difference: adding a signal twice cancels it.
    Signal& operator^=(const Signal& o) {
        if (&o == this) {
            bits_.clear();
            return *this;
        }
        for (int q : o.bits_) {
            auto it = bits_.find(q);
            if (it != bits_.end())
                bits_.erase(it);
            else
                bits_.insert(q);
        }
        return *this;
    }
    friend Signal operator^(Signal a, const Signal& b) {
        a ^= b;
        return a;
    }

    bool operator==(const Signal& o) const { return bits_ == o.bits_; }
    bool operator!=(const Signal& o) const { return bits_ != o.bits_; }
    bool operator<(const Signal& o) const { return bits_ < o.bits_; }

    // Rendered as a bracketed comma list of qubit ids, e.g. "[1,4]".
    std::string str() const {
        std::string out = "[";
        bool first = true;
        for (int q : bits_) {
            if (!first) out += ",";
            out += std::to_string(q);
            first = false;
        }
        return out + "]";
    }

private:
    std::set<int> bits_;
};

}  // namespace mbqc
