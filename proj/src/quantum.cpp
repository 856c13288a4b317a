// Copyright 2026 The qlogic Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qlogic/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qlogic/error.hpp"

namespace qlogic::quantum {

std::string_view to_string(BasisIndex index) noexcept {
    return index == BasisIndex::First ? "first" : "second";
}

double norm(const StateVector &v) noexcept {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
}

Amplitude inner(const StateVector &bra, const StateVector &ket) noexcept {
    return std::conj(bra[0]) * ket[0] + std::conj(bra[1]) * ket[1];
}

bool is_finite(Amplitude z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

double max_abs_diff(const StateVector &lhs, const StateVector &rhs) noexcept {
    return std::max(std::abs(lhs[0] - rhs[0]), std::abs(lhs[1] - rhs[1]));
}

double max_abs_diff(const Matrix2 &lhs, const Matrix2 &rhs) noexcept {
    double worst = 0.0;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            worst = std::max(worst, std::abs(lhs[r][c] - rhs[r][c]));
        }
    }
    return worst;
}

bool approx_equal(const StateVector &lhs, const StateVector &rhs, double tolerance,
                  bool up_to_phase) {
    if (!up_to_phase) {
        return max_abs_diff(lhs, rhs) <= tolerance;
    }
    // Rotate lhs by the phase of <lhs|rhs>; for parallel vectors this is the
    // exact relative phase.
    const Amplitude overlap = inner(lhs, rhs);
    const double magnitude = std::abs(overlap);
    if (magnitude == 0.0) {
        return max_abs_diff(lhs, rhs) <= tolerance;
    }
    const Amplitude phase = overlap / magnitude;
    const StateVector rotated{lhs[0] * phase, lhs[1] * phase};
    return max_abs_diff(rotated, rhs) <= tolerance;
}

bool approx_equal(const Matrix2 &lhs, const Matrix2 &rhs, double tolerance) noexcept {
    return max_abs_diff(lhs, rhs) <= tolerance;
}

Matrix2 identity_matrix() noexcept { return {{{1.0, 0.0}, {0.0, 1.0}}}; }

Matrix2 zero_matrix() noexcept { return {{{0.0, 0.0}, {0.0, 0.0}}}; }

Matrix2 conjugate_transpose(const Matrix2 &m) noexcept {
    return {{{std::conj(m[0][0]), std::conj(m[1][0])},
             {std::conj(m[0][1]), std::conj(m[1][1])}}};
}

Matrix2 operator*(const Matrix2 &lhs, const Matrix2 &rhs) noexcept {
    Matrix2 out = zero_matrix();
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            out[r][c] = lhs[r][0] * rhs[0][c] + lhs[r][1] * rhs[1][c];
        }
    }
    return out;
}

Matrix2 operator+(const Matrix2 &lhs, const Matrix2 &rhs) noexcept {
    return {{{lhs[0][0] + rhs[0][0], lhs[0][1] + rhs[0][1]},
             {lhs[1][0] + rhs[1][0], lhs[1][1] + rhs[1][1]}}};
}

Matrix2 operator*(Amplitude scale, const Matrix2 &m) noexcept {
    return {{{scale * m[0][0], scale * m[0][1]}, {scale * m[1][0], scale * m[1][1]}}};
}

StateVector operator*(const Matrix2 &m, const StateVector &v) noexcept {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

Matrix2 outer(const StateVector &ket, const StateVector &bra) noexcept {
    return {{{ket[0] * std::conj(bra[0]), ket[0] * std::conj(bra[1])},
             {ket[1] * std::conj(bra[0]), ket[1] * std::conj(bra[1])}}};
}

// -- Basis --------------------------------------------------------------------

bool is_identifier(std::string_view text) noexcept {
    if (text.empty()) {
        return false;
    }
    auto alpha = [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(text.front())) {
        return false;
    }
    return std::all_of(text.begin(), text.end(), [&](char c) { return alpha(c) || digit(c); });
}

Basis::Basis(double gamma, double phi, std::string atom)
    : gamma_(gamma), phi_(phi), atom_(std::move(atom)) {
    const double c = std::cos(gamma);
    const double s = std::sin(gamma);
    const Amplitude e = std::polar(1.0, phi);
    first_ = {Amplitude{c, 0.0}, e * s};
    second_ = {-std::conj(e) * s, Amplitude{c, 0.0}};
}

Basis Basis::computational(std::string atom) { return make_basis(0.0, 0.0, std::move(atom)); }

std::string Basis::label(BasisIndex index) const {
    return index == BasisIndex::First ? atom_ : atom_ + "^";
}

Basis make_basis(double gamma, double phi, std::string atom) {
    if (!std::isfinite(gamma) || !std::isfinite(phi)) {
        throw InvalidStateError("basis angles must be finite");
    }
    if (!is_identifier(atom)) {
        throw InvalidStateError("invalid atom name '" + atom + "'");
    }
    Basis basis(gamma, phi, std::move(atom));
    if (std::abs(inner(basis.first(), basis.second())) > kValidationTolerance ||
        std::abs(norm(basis.first()) - 1.0) > kValidationTolerance ||
        std::abs(norm(basis.second()) - 1.0) > kValidationTolerance) {
        throw NumericError("basis construction lost orthonormality");
    }
    return basis;
}

// -- Gates --------------------------------------------------------------------

Gate Gate::from_matrix(const Matrix2 &m) {
    for (const auto &row : m) {
        for (const auto &z : row) {
            if (!is_finite(z)) {
                throw NumericError("gate has a non-finite entry");
            }
        }
    }
    if (!approx_equal(conjugate_transpose(m) * m, identity_matrix(), kValidationTolerance)) {
        throw NumericError("gate is not unitary");
    }
    return Gate(m);
}

Gate Gate::identity() noexcept { return Gate(identity_matrix()); }

Gate operator*(const Gate &lhs, const Gate &rhs) {
    return Gate::from_matrix(lhs.matrix() * rhs.matrix());
}

Gate adjoint(const Gate &g) { return Gate::from_matrix(conjugate_transpose(g.matrix())); }

Matrix2 projector(const Basis &basis, BasisIndex index) {
    const StateVector &v = basis.vector(index);
    return outer(v, v);
}

Gate basic_measurement_gate(const Basis &basis, double theta0, double theta1) {
    return Gate::from_matrix(std::polar(1.0, theta0) * projector(basis, BasisIndex::First) +
                             std::polar(1.0, theta1) * projector(basis, BasisIndex::Second));
}

Gate basic_measurement_gate(const Basis &basis, Phases phases) {
    return basic_measurement_gate(basis, phases.first, phases.second);
}

Gate not_gate(const Basis &basis) {
    return Gate::from_matrix(outer(basis.first(), basis.second()) +
                             outer(basis.second(), basis.first()));
}

Gate liar_gate(const Basis &basis, Phases phases) {
    return not_gate(basis) * basic_measurement_gate(basis, phases);
}

// -- Qubit --------------------------------------------------------------------

Qubit::Qubit(const StateVector &state, Basis frame) noexcept
    : state_(state), frame_(std::move(frame)) {}

Qubit::Qubit(Qubit &&other) noexcept
    : state_(other.state_), frame_(other.frame_), consumed_(other.consumed_) {
    other.consumed_ = true;
}

Qubit &Qubit::operator=(Qubit &&other) noexcept {
    if (this != &other) {
        state_ = other.state_;
        frame_ = other.frame_;
        consumed_ = other.consumed_;
        other.consumed_ = true;
    }
    return *this;
}

void Qubit::ensure_live() const {
    if (consumed_) {
        throw ConsumedQubitError(
            "qubit was already consumed; an unknown state cannot be recovered or cloned");
    }
}

StateVector Qubit::take() {
    ensure_live();
    consumed_ = true;
    return state_;
}

const StateVector &Qubit::state() const {
    ensure_live();
    return state_;
}

const Basis &Qubit::frame() const {
    ensure_live();
    return frame_;
}

Amplitude Qubit::a() const { return coordinates(frame())[0]; }

Amplitude Qubit::b() const { return coordinates(frame())[1]; }

StateVector Qubit::coordinates(const Basis &basis) const {
    ensure_live();
    return {inner(basis.first(), state_), inner(basis.second(), state_)};
}

Qubit Qubit::reframed(const Basis &frame) && {
    const StateVector state = take();
    return Qubit(state, frame);
}

Qubit make_qubit(Amplitude a, Amplitude b) { return make_qubit(Basis::computational(), a, b); }

Qubit make_qubit(const Basis &frame, Amplitude a, Amplitude b) {
    if (!is_finite(a) || !is_finite(b)) {
        throw InvalidStateError("amplitudes must be finite");
    }
    const double length = std::sqrt(std::norm(a) + std::norm(b));
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw InvalidStateError("amplitudes must not both be zero");
    }
    a /= length;
    b /= length;
    const StateVector &u = frame.first();
    const StateVector &v = frame.second();
    return Qubit({a * u[0] + b * v[0], a * u[1] + b * v[1]}, frame);
}

Qubit apply(const Gate &g, Qubit &&q) {
    Basis frame = q.frame();
    const StateVector out = g.matrix() * q.take();
    if (std::abs(norm(out) - 1.0) > kValidationTolerance) {
        throw NumericError("normalization drift after gate application");
    }
    return Qubit(out, std::move(frame));
}

BornProbabilities born_probabilities(const Qubit &q, const Basis &basis) {
    const StateVector c = q.coordinates(basis);
    return {std::norm(c[0]), std::norm(c[1])};
}

Measurement measure_standard(Qubit &&q, const Basis &basis, Rng &rng) {
    const BornProbabilities p = born_probabilities(q, basis);
    const double total = p.first + p.second;
    if (std::abs(total - 1.0) > kValidationTolerance) {
        throw NumericError("Born probabilities do not sum to one");
    }
    q.take();
    const BasisIndex index = rng.uniform() < p.first / total ? BasisIndex::First
                                                             : BasisIndex::Second;
    Outcome outcome{basis, index, p[index]};
    return Measurement{std::move(outcome), Qubit(basis.vector(index), basis)};
}

} // namespace qlogic::quantum
