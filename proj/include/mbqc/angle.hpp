// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#pragma once

#include <cstdint>
#include <string>

namespace mbqc {

// Classification of measurement angles by the basis they induce on the
// equator of the Bloch sphere.
enum class PauliClass {
    X,     // angle 0 or pi
    Y,     // angle pi/2 or 3*pi/2
    None,  // any other angle
};

// An angle expressed as a reduced rational multiple of pi, normalized to
// the half-open interval [0, 2*pi).  Exact rational arithmetic keeps
// rewrite results and serialized artifacts byte-stable.
class Angle {
public:
    Angle() : num_(0), den_(1) {}
    // angle = (num/den) * pi; den must be nonzero.
    Angle(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double radians() const;

    Angle negated() const { return Angle(-num_, den_); }
    Angle plus_pi() const { return Angle(num_ + den_, den_); }

    // The effective angle (-1)^s * angle + t*pi used when dependent
    // measurements consume accumulated signals.
    Angle transformed(bool s, bool t) const;

    PauliClass pauli_class() const;
    bool is_pauli() const { return pauli_class() != PauliClass::None; }
    bool is_zero() const { return num_ == 0; }

    bool operator==(const Angle& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Angle& o) const { return !(*this == o); }
    bool operator<(const Angle& o) const {
        return num_ * o.den_ < o.num_ * den_;
    }

    // Rendered as "<num>/<den>" in units of pi, e.g. "3/2" for 3*pi/2.
    std::string str() const;

private:
    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace mbqc
