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
#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

#include "qlogic/random.hpp"

/**
 * @file quantum.hpp
 * Pure-state single-qubit mathematics.
 *
 * States are column vectors in computational coordinates. A Basis is an
 * orthonormal pair (first, second) whose vectors carry the labels `atom` and
 * `atom^`. A Qubit is a move-only resource: destructive measurement and gate
 * application consume it, and reading a moved-from Qubit throws.
 */
namespace qlogic::quantum {

using Amplitude = std::complex<double>;
using StateVector = std::array<Amplitude, 2>;
/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<std::array<Amplitude, 2>, 2>;

/// Input validation (normalization, orthonormality, unitarity).
inline constexpr double kValidationTolerance = 1e-9;
/// Round-trip identities such as U^dagger U q = q.
inline constexpr double kRoundTripTolerance = 1e-12;

enum class BasisIndex { First, Second };

[[nodiscard]] constexpr BasisIndex other(BasisIndex index) noexcept {
    return index == BasisIndex::First ? BasisIndex::Second : BasisIndex::First;
}

[[nodiscard]] std::string_view to_string(BasisIndex index) noexcept;

// -- vector / matrix helpers ------------------------------------------------

[[nodiscard]] double norm(const StateVector &v) noexcept;
/// <bra|ket>, conjugate-linear in the first argument.
[[nodiscard]] Amplitude inner(const StateVector &bra, const StateVector &ket) noexcept;
[[nodiscard]] bool is_finite(Amplitude z) noexcept;

/// Entrywise comparison. With `up_to_phase`, `lhs` is first rotated by the
/// global phase that best aligns it with `rhs`.
[[nodiscard]] bool approx_equal(const StateVector &lhs, const StateVector &rhs,
                                double tolerance, bool up_to_phase = false);
[[nodiscard]] bool approx_equal(const Matrix2 &lhs, const Matrix2 &rhs,
                                double tolerance) noexcept;
/// Largest entrywise modulus of lhs - rhs.
[[nodiscard]] double max_abs_diff(const Matrix2 &lhs, const Matrix2 &rhs) noexcept;
[[nodiscard]] double max_abs_diff(const StateVector &lhs, const StateVector &rhs) noexcept;

[[nodiscard]] Matrix2 identity_matrix() noexcept;
[[nodiscard]] Matrix2 zero_matrix() noexcept;
[[nodiscard]] Matrix2 conjugate_transpose(const Matrix2 &m) noexcept;
[[nodiscard]] Matrix2 operator*(const Matrix2 &lhs, const Matrix2 &rhs) noexcept;
[[nodiscard]] Matrix2 operator+(const Matrix2 &lhs, const Matrix2 &rhs) noexcept;
[[nodiscard]] Matrix2 operator*(Amplitude scale, const Matrix2 &m) noexcept;
[[nodiscard]] StateVector operator*(const Matrix2 &m, const StateVector &v) noexcept;
/// |ket><bra|
[[nodiscard]] Matrix2 outer(const StateVector &ket, const StateVector &bra) noexcept;

// -- Basis --------------------------------------------------------------------

/// Ordered orthonormal pair (A, A^) obtained by rotating the computational
/// basis by angles (gamma, phi):
///   first  = (cos g,  e^{i phi} sin g)
///   second = (-e^{-i phi} sin g, cos g)
class Basis {
  public:
    /// Computational basis |0>, |1> labeled `atom`, `atom^`.
    static Basis computational(std::string atom = "A");

    [[nodiscard]] const StateVector &first() const noexcept { return first_; }
    [[nodiscard]] const StateVector &second() const noexcept { return second_; }
    [[nodiscard]] const StateVector &vector(BasisIndex index) const noexcept {
        return index == BasisIndex::First ? first_ : second_;
    }
    [[nodiscard]] double gamma() const noexcept { return gamma_; }
    [[nodiscard]] double phi() const noexcept { return phi_; }
    [[nodiscard]] const std::string &atom() const noexcept { return atom_; }

    /// ASCII label of a basis vector: "A" or "A^".
    [[nodiscard]] std::string label(BasisIndex index) const;

    /// Same angles and atom. Vectors are a function of the angles.
    friend bool operator==(const Basis &lhs, const Basis &rhs) noexcept {
        return lhs.gamma_ == rhs.gamma_ && lhs.phi_ == rhs.phi_ && lhs.atom_ == rhs.atom_;
    }

  private:
    friend Basis make_basis(double gamma, double phi, std::string atom);
    Basis(double gamma, double phi, std::string atom);

    double gamma_;
    double phi_;
    std::string atom_;
    StateVector first_;
    StateVector second_;
};

/// Throws InvalidStateError on non-finite angles or an atom that is not an
/// identifier ([A-Za-z_][A-Za-z0-9_]*).
[[nodiscard]] Basis make_basis(double gamma, double phi, std::string atom);

[[nodiscard]] bool is_identifier(std::string_view text) noexcept;

// -- Gates --------------------------------------------------------------------

/// Unitary 2x2 operator. Unitarity is checked on construction.
class Gate {
  public:
    /// Throws NumericError when adjoint(m) * m differs from the identity by
    /// more than kValidationTolerance in any entry.
    static Gate from_matrix(const Matrix2 &m);
    static Gate identity() noexcept;

    [[nodiscard]] const Matrix2 &matrix() const noexcept { return m_; }
    [[nodiscard]] Amplitude operator()(std::size_t row, std::size_t col) const noexcept {
        return m_[row][col];
    }

    /// Composition: (lhs * rhs) applies rhs first.
    friend Gate operator*(const Gate &lhs, const Gate &rhs);

  private:
    explicit Gate(const Matrix2 &m) noexcept : m_(m) {}
    Matrix2 m_;
};

/// Conjugate transpose, which is also the inverse.
[[nodiscard]] Gate adjoint(const Gate &g);

/// |v><v| for the selected basis vector. Hermitian and idempotent, not unitary.
[[nodiscard]] Matrix2 projector(const Basis &basis, BasisIndex index);

/// Relative phases of a basic measurement.
struct Phases {
    double first = 0.0;
    double second = 0.0;

    friend bool operator==(const Phases &, const Phases &) = default;
};

/// e^{i theta0} P_first + e^{i theta1} P_second. Diagonal in `basis`; the
/// identity when both phases are zero.
[[nodiscard]] Gate basic_measurement_gate(const Basis &basis, double theta0, double theta1);
[[nodiscard]] Gate basic_measurement_gate(const Basis &basis, Phases phases = {});

/// |first><second| + |second><first|: exchanges the two basis components.
[[nodiscard]] Gate not_gate(const Basis &basis);

/// not_gate(basis) applied after basic_measurement_gate(basis, phases).
[[nodiscard]] Gate liar_gate(const Basis &basis, Phases phases = {});

// -- Qubit --------------------------------------------------------------------

struct Measurement;

/// Normalized single-qubit state, expressed against a reference frame.
///
/// There is no copy: an unknown state cannot be duplicated. Moving out of a
/// Qubit leaves the source consumed, and every accessor on a consumed Qubit
/// throws ConsumedQubitError.
class Qubit {
  public:
    Qubit(const Qubit &) = delete;
    Qubit &operator=(const Qubit &) = delete;
    Qubit(Qubit &&other) noexcept;
    Qubit &operator=(Qubit &&other) noexcept;
    ~Qubit() = default;

    [[nodiscard]] bool consumed() const noexcept { return consumed_; }

    /// Computational-basis amplitudes.
    [[nodiscard]] const StateVector &state() const;
    [[nodiscard]] const Basis &frame() const;
    /// Coefficient of frame().first().
    [[nodiscard]] Amplitude a() const;
    /// Coefficient of frame().second().
    [[nodiscard]] Amplitude b() const;
    /// Coordinates (<first|q>, <second|q>) against any basis.
    [[nodiscard]] StateVector coordinates(const Basis &basis) const;

    /// Same physical state, reported against another frame. Consumes *this.
    [[nodiscard]] Qubit reframed(const Basis &frame) &&;

  private:
    friend Qubit make_qubit(const Basis &frame, Amplitude a, Amplitude b);
    friend Qubit apply(const Gate &g, Qubit &&q);
    friend Measurement measure_standard(Qubit &&q, const Basis &basis, Rng &rng);

    Qubit(const StateVector &state, Basis frame) noexcept;
    void ensure_live() const;
    /// Marks *this consumed and hands back the state.
    StateVector take();

    StateVector state_;
    Basis frame_;
    bool consumed_ = false;
};

/// a|0> + b|1>, normalized. Throws InvalidStateError on zero norm or
/// non-finite input.
[[nodiscard]] Qubit make_qubit(Amplitude a, Amplitude b);
/// a|first> + b|second>, normalized, with `frame` as the reference frame.
[[nodiscard]] Qubit make_qubit(const Basis &frame, Amplitude a, Amplitude b);

/// g q. Consumes q; the result keeps q's frame. Throws NumericError if the
/// result drifts from unit norm by more than kValidationTolerance.
[[nodiscard]] Qubit apply(const Gate &g, Qubit &&q);

struct BornProbabilities {
    double first;
    double second;

    [[nodiscard]] double operator[](BasisIndex index) const noexcept {
        return index == BasisIndex::First ? first : second;
    }
};

/// |<basis_i|q>|^2. Does not consume q.
[[nodiscard]] BornProbabilities born_probabilities(const Qubit &q, const Basis &basis);

struct Outcome {
    Basis basis;
    BasisIndex index;
    /// Born probability of `index` at measurement time.
    double probability;
};

struct Measurement {
    Outcome outcome;
    /// Collapsed onto the observed basis vector, framed in the measured basis.
    Qubit qubit;
};

/// Destructive measurement: samples an outcome with Born probabilities and
/// collapses. Consumes q.
[[nodiscard]] Measurement measure_standard(Qubit &&q, const Basis &basis, Rng &rng);

} // namespace qlogic::quantum
