// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#include "mbqc/angle.hpp"

#include <cmath>
#include <numeric>

#include "mbqc/errors.hpp"

namespace mbqc {

Angle::Angle(std::int64_t num, std::int64_t den) {
    if (den == 0) throw PreconditionError("angle denominator must be nonzero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    // Normalize into [0, 2*pi), i.e. num into [0, 2*den).
    num %= 2 * den;
    if (num < 0) num += 2 * den;
    num_ = num;
    den_ = den;
}

double Angle::radians() const {
    return static_cast<double>(num_) * M_PI / static_cast<double>(den_);
}

Angle Angle::transformed(bool s, bool t) const {
    Angle a = s ? negated() : *this;
    return t ? a.plus_pi() : a;
}

PauliClass Angle::pauli_class() const {
    if (den_ == 1) return PauliClass::X;                      // 0 or pi
    if (den_ == 2) return PauliClass::Y;                      // pi/2 or 3*pi/2
    return PauliClass::None;
}

std::string Angle::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace mbqc
