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
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <type_traits>

#include "qlogic/error.hpp"
#include "qlogic/quantum.hpp"
#include "support/generators.hpp"

using namespace qlogic;
using namespace qlogic::quantum;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

StateVector snapshot(const Qubit &q) { return q.state(); }

} // namespace

TEST_SUITE("make_qubit") {
    TEST_CASE("basis state is returned exactly") {
        const Qubit q = make_qubit(1.0, 0.0);
        CHECK(q.state()[0] == Amplitude(1.0, 0.0));
        CHECK(q.state()[1] == Amplitude(0.0, 0.0));
        CHECK(q.frame() == Basis::computational());
    }

    TEST_CASE("equal amplitudes normalize to 1/sqrt2") {
        const Qubit q = make_qubit(1.0, 1.0);
        CHECK(q.a().real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        CHECK(q.b().real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        CHECK(norm(q.state()) == doctest::Approx(1.0).epsilon(1e-15));
    }

    TEST_CASE("(3, 4i) normalizes to (0.6, 0.8i)") {
        // Oracle: |(3, 4i)| = sqrt(3*3 + 4*4) = 5.
        const double length = std::sqrt(3.0 * 3.0 + 4.0 * 4.0);
        REQUIRE(length == 5.0);
        const Qubit q = make_qubit(3.0, Amplitude(0.0, 4.0));
        CHECK(std::abs(q.a() - Amplitude(3.0 / length, 0.0)) < 1e-15);
        CHECK(std::abs(q.b() - Amplitude(0.0, 4.0 / length)) < 1e-15);
    }

    TEST_CASE("zero and non-finite inputs are invalid states") {
        CHECK_THROWS_AS((void)make_qubit(0.0, 0.0), InvalidStateError);
        CHECK_THROWS_AS((void)make_qubit(kNaN, 1.0), InvalidStateError);
        CHECK_THROWS_AS((void)make_qubit(1.0, Amplitude(0.0, kInf)), InvalidStateError);
    }

    TEST_CASE("framed qubit has the given coordinates in its frame") {
        const Basis b = make_basis(0.3, 1.1, "A");
        const Qubit q = make_qubit(b, 0.6, Amplitude(0.0, 0.8));
        CHECK(std::abs(q.a() - 0.6) < 1e-12);
        CHECK(std::abs(q.b() - Amplitude(0.0, 0.8)) < 1e-12);
    }
}

TEST_SUITE("make_basis") {
    TEST_CASE("zero angles give the computational basis") {
        const Basis b = make_basis(0.0, 0.0, "A");
        CHECK(b.first() == StateVector{1.0, 0.0});
        CHECK(b.second() == StateVector{0.0, 1.0});
        CHECK(b.label(BasisIndex::First) == "A");
        CHECK(b.label(BasisIndex::Second) == "A^");
    }

    TEST_CASE("quarter-pi rotation is the Hadamard basis") {
        const Basis b = make_basis(std::numbers::pi / 4, 0.0, "A");
        const double h = 1.0 / std::sqrt(2.0);
        CHECK(approx_equal(b.first(), {h, h}, 1e-15));
        CHECK(approx_equal(b.second(), {-h, h}, 1e-15));
        CHECK(std::abs(inner(b.first(), b.second())) < 1e-9);
        CHECK(std::abs(norm(b.first()) - 1.0) < 1e-9);
        CHECK(std::abs(norm(b.second()) - 1.0) < 1e-9);
    }

    TEST_CASE("half-pi rotation swaps the vectors up to sign") {
        const Basis b = make_basis(std::numbers::pi / 2, 0.0, "A");
        CHECK(approx_equal(b.first(), {0.0, 1.0}, 1e-15));
        CHECK(approx_equal(b.second(), {-1.0, 0.0}, 1e-15));
        CHECK(approx_equal(b.second(), {1.0, 0.0}, 1e-15, /*up_to_phase=*/true));
    }

    TEST_CASE("random bases are orthonormal") {
        testing::Gen g(11);
        for (int i = 0; i < 200; ++i) {
            const Basis b = testing::basis(g);
            CHECK(std::abs(inner(b.first(), b.second())) < kValidationTolerance);
            CHECK(std::abs(norm(b.first()) - 1.0) < kValidationTolerance);
            CHECK(std::abs(norm(b.second()) - 1.0) < kValidationTolerance);
        }
    }

    TEST_CASE("non-finite angles and bad atom names are rejected") {
        CHECK_THROWS_AS((void)make_basis(kNaN, 0.0, "A"), InvalidStateError);
        CHECK_THROWS_AS((void)make_basis(0.0, kInf, "A"), InvalidStateError);
        CHECK_THROWS_AS((void)make_basis(0.0, 0.0, ""), InvalidStateError);
        CHECK_THROWS_AS((void)make_basis(0.0, 0.0, "1A"), InvalidStateError);
        CHECK_THROWS_AS((void)make_basis(0.0, 0.0, "A^"), InvalidStateError);
    }
}

TEST_SUITE("projector") {
    TEST_CASE("computational first projector") {
        const Matrix2 expected{{{1.0, 0.0}, {0.0, 0.0}}};
        CHECK(projector(Basis::computational(), BasisIndex::First) == expected);
    }

    TEST_CASE("completeness, orthogonality, idempotence, hermiticity") {
        testing::Gen g(12);
        for (int i = 0; i < 200; ++i) {
            const Basis b = testing::basis(g);
            const Matrix2 p = projector(b, BasisIndex::First);
            const Matrix2 q = projector(b, BasisIndex::Second);
            CHECK(approx_equal(p + q, identity_matrix(), kRoundTripTolerance));
            CHECK(approx_equal(p * q, zero_matrix(), kRoundTripTolerance));
            CHECK(approx_equal(p * p, p, kRoundTripTolerance));
            CHECK(approx_equal(conjugate_transpose(q), q, kRoundTripTolerance));
        }
    }
}

TEST_SUITE("gates") {
    TEST_CASE("basic measurement with zero phases is the identity") {
        testing::Gen g(13);
        for (int i = 0; i < 20; ++i) {
            const Gate u = basic_measurement_gate(testing::basis(g), 0.0, 0.0);
            CHECK(approx_equal(u.matrix(), identity_matrix(), kRoundTripTolerance));
        }
    }

    TEST_CASE("computational basic measurement with (0, pi) is a phase flip") {
        const Gate u = basic_measurement_gate(Basis::computational(), 0.0, std::numbers::pi);
        const Matrix2 expected{{{1.0, 0.0}, {0.0, -1.0}}};
        CHECK(approx_equal(u.matrix(), expected, 1e-15));
    }

    TEST_CASE("basic measurement gates are unitary over 100 random samples") {
        testing::Gen g(14);
        for (int i = 0; i < 100; ++i) {
            const Basis b = testing::basis(g);
            const Phases p = testing::phases(g);
            const Gate u = basic_measurement_gate(b, p);
            CHECK(max_abs_diff(conjugate_transpose(u.matrix()) * u.matrix(), identity_matrix()) <
                  kRoundTripTolerance);
            // Diagonal in its own basis: each basis vector is an eigenvector.
            CHECK(approx_equal(u.matrix() * b.first(), b.first(), kRoundTripTolerance, true));
            CHECK(approx_equal(u.matrix() * b.second(), b.second(), kRoundTripTolerance, true));
        }
    }

    TEST_CASE("adjoint of a basic measurement negates its phases") {
        testing::Gen g(15);
        for (int i = 0; i < 100; ++i) {
            const Basis b = testing::basis(g);
            const Phases p = testing::phases(g);
            const Gate lhs = adjoint(basic_measurement_gate(b, p.first, p.second));
            const Gate rhs = basic_measurement_gate(b, -p.first, -p.second);
            CHECK(max_abs_diff(lhs.matrix(), rhs.matrix()) < kRoundTripTolerance);
        }
    }

    TEST_CASE("adjoint of identity and involution") {
        CHECK(adjoint(Gate::identity()).matrix() == identity_matrix());
        testing::Gen g(16);
        for (int i = 0; i < 50; ++i) {
            const Gate u = liar_gate(testing::basis(g), testing::phases(g));
            CHECK(adjoint(adjoint(u)).matrix() == u.matrix());
        }
    }

    TEST_CASE("NOT gate in the computational basis is Pauli-X") {
        const Matrix2 expected{{{0.0, 1.0}, {1.0, 0.0}}};
        CHECK(not_gate(Basis::computational()).matrix() == expected);
    }

    TEST_CASE("NOT sends A to A^ and is an involution") {
        testing::Gen g(17);
        for (int i = 0; i < 50; ++i) {
            const Basis b = testing::basis(g);
            const Gate x = not_gate(b);
            CHECK(approx_equal(x.matrix() * b.first(), b.second(), kRoundTripTolerance));
            CHECK(approx_equal(x.matrix() * b.second(), b.first(), kRoundTripTolerance));
            CHECK(approx_equal((x * x).matrix(), identity_matrix(), kRoundTripTolerance));
        }
    }

    TEST_CASE("non-unitary matrices are rejected") {
        const Matrix2 m{{{1.0, 1.0}, {0.0, 1.0}}};
        CHECK_THROWS_AS((void)Gate::from_matrix(m), NumericError);
        CHECK_THROWS_AS((void)Gate::from_matrix(projector(Basis::computational(), BasisIndex::First)),
                        NumericError);
        const Matrix2 nan{{{kNaN, 0.0}, {0.0, 1.0}}};
        CHECK_THROWS_AS((void)Gate::from_matrix(nan), NumericError);
    }
}

TEST_SUITE("apply") {
    TEST_CASE("identity leaves the state unchanged") {
        Qubit q = make_qubit(0.6, Amplitude(0.0, 0.8));
        const StateVector before = snapshot(q);
        const Qubit out = apply(Gate::identity(), std::move(q));
        CHECK(out.state() == before);
    }

    TEST_CASE("NOT exchanges the coordinates in its basis") {
        testing::Gen g(18);
        for (int i = 0; i < 50; ++i) {
            const Basis b = testing::basis(g);
            const Amplitude x = testing::amplitude(g);
            const Amplitude y = testing::amplitude(g);
            Qubit q = make_qubit(b, x, y);
            const Amplitude a = q.a();
            const Amplitude c = q.b();
            const Qubit out = apply(not_gate(b), std::move(q));
            CHECK(std::abs(out.a() - c) < kRoundTripTolerance);
            CHECK(std::abs(out.b() - a) < kRoundTripTolerance);
        }
    }

    TEST_CASE("U then adjoint(U) restores the state") {
        testing::Gen g(19);
        for (int i = 0; i < 200; ++i) {
            const Basis b = testing::basis(g);
            const Gate u = i % 2 == 0 ? basic_measurement_gate(b, testing::phases(g))
                                      : liar_gate(b, testing::phases(g));
            Qubit q = testing::qubit(g);
            const StateVector before = snapshot(q);
            const Qubit back = apply(adjoint(u), apply(u, std::move(q)));
            CHECK(max_abs_diff(back.state(), before) < kRoundTripTolerance);
        }
    }

    TEST_CASE("normalization is preserved by random gate sequences") {
        testing::Gen g(20);
        for (int i = 0; i < 100; ++i) {
            Qubit q = testing::qubit(g);
            for (int k = 0; k < 10; ++k) {
                const Basis b = testing::basis(g);
                const Gate u = k % 3 == 0   ? not_gate(b)
                               : k % 3 == 1 ? basic_measurement_gate(b, testing::phases(g))
                                            : liar_gate(b, testing::phases(g));
                q = apply(u, std::move(q));
                CHECK(std::abs(norm(q.state()) - 1.0) < kValidationTolerance);
            }
        }
    }

    TEST_CASE("result keeps the input frame") {
        const Basis b = make_basis(0.4, 0.2, "Q");
        Qubit q = make_qubit(b, 1.0, 2.0);
        const Qubit out = apply(not_gate(b), std::move(q));
        CHECK(out.frame() == b);
    }
}

TEST_SUITE("born_probabilities") {
    TEST_CASE("basis state") {
        const Qubit q = make_qubit(1.0, 0.0);
        const auto p = born_probabilities(q, Basis::computational());
        CHECK(p.first == 1.0);
        CHECK(p.second == 0.0);
    }

    TEST_CASE("symmetric superposition") {
        const Qubit q = make_qubit(1.0, 1.0);
        const auto p = born_probabilities(q, Basis::computational());
        CHECK(p.first == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(p.second == doctest::Approx(0.5).epsilon(1e-15));
    }

    TEST_CASE("(sqrt 0.3, sqrt 0.7) gives (0.3, 0.7)") {
        // Oracle: |sqrt(0.3)|^2 = 0.3.
        const Qubit q = make_qubit(std::sqrt(0.3), std::sqrt(0.7));
        const auto p = born_probabilities(q, Basis::computational());
        CHECK(std::abs(p.first - 0.3) < 1e-12);
        CHECK(std::abs(p.second - 0.7) < 1e-12);
        CHECK_FALSE(q.consumed());
    }

    TEST_CASE("probabilities sum to one and ignore global phase") {
        testing::Gen g(21);
        for (int i = 0; i < 200; ++i) {
            const Basis b = testing::basis(g);
            const Amplitude x = testing::amplitude(g);
            const Amplitude y = testing::amplitude(g);
            const Amplitude phase = std::polar(1.0, testing::uniform(g, -3.0, 3.0));
            const Qubit q = make_qubit(x, y);
            const Qubit r = make_qubit(phase * x, phase * y);
            const auto p = born_probabilities(q, b);
            const auto s = born_probabilities(r, b);
            CHECK(std::abs(p.first + p.second - 1.0) < kValidationTolerance);
            CHECK(std::abs(p.first - s.first) < kRoundTripTolerance);
            // Phase-distinct states compare unequal unless asked otherwise.
            if (std::abs(phase - 1.0) > 1e-6) {
                CHECK_FALSE(approx_equal(q.state(), r.state(), kValidationTolerance));
            }
            CHECK(approx_equal(q.state(), r.state(), kValidationTolerance, true));
        }
    }
}

TEST_SUITE("measure_standard") {
    TEST_CASE("eigenstate is deterministic for every seed") {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            Rng rng(seed);
            auto m = measure_standard(make_qubit(1.0, 0.0), Basis::computational(), rng);
            CHECK(m.outcome.index == BasisIndex::First);
            CHECK(m.outcome.probability == 1.0);
            CHECK(m.qubit.state() == StateVector{1.0, 0.0});
        }
    }

    TEST_CASE("repeated measurement in the same basis repeats the outcome") {
        testing::Gen g(22);
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            Rng rng(seed);
            const Basis b = testing::basis(g);
            auto first = measure_standard(testing::qubit(g), b, rng);
            auto second = measure_standard(std::move(first.qubit), b, rng);
            CHECK(second.outcome.index == first.outcome.index);
            CHECK(std::abs(second.outcome.probability - 1.0) < kValidationTolerance);
        }
    }

    TEST_CASE("outcome probability is the Born value") {
        testing::Gen g(23);
        Rng rng(5);
        for (int i = 0; i < 100; ++i) {
            const Basis b = testing::basis(g);
            Qubit q = testing::qubit(g);
            const auto p = born_probabilities(q, b);
            const auto m = measure_standard(std::move(q), b, rng);
            CHECK(std::abs(m.outcome.probability - p[m.outcome.index]) < kValidationTolerance);
            CHECK(m.outcome.basis == b);
        }
    }

    TEST_CASE("frequencies follow the Born rule over 100000 trials") {
        // Oracle: p = |sqrt(0.3)|^2 = 0.3, sigma = sqrt(p(1-p)/N).
        constexpr int kTrials = 100000;
        const double p = 0.3;
        const double bound = 4.0 * std::sqrt(p * (1.0 - p) / kTrials);
        Rng rng(2026);
        int hits = 0;
        for (int i = 0; i < kTrials; ++i) {
            auto m = measure_standard(make_qubit(std::sqrt(0.3), std::sqrt(0.7)),
                                      Basis::computational(), rng);
            hits += m.outcome.index == BasisIndex::First ? 1 : 0;
        }
        const double freq = static_cast<double>(hits) / kTrials;
        CHECK(freq >= 0.29);
        CHECK(freq <= 0.31);
        CHECK(std::abs(freq - p) < bound);
    }

    TEST_CASE("same seed, same outcomes") {
        Rng r1(99);
        Rng r2(99);
        for (int i = 0; i < 100; ++i) {
            const auto a = measure_standard(make_qubit(1.0, 1.0), Basis::computational(), r1);
            const auto b = measure_standard(make_qubit(1.0, 1.0), Basis::computational(), r2);
            CHECK(a.outcome.index == b.outcome.index);
        }
    }
}

TEST_SUITE("resource contract") {
    static_assert(!std::is_copy_constructible_v<Qubit>);
    static_assert(!std::is_copy_assignable_v<Qubit>);
    static_assert(std::is_nothrow_move_constructible_v<Qubit>);

    TEST_CASE("measured qubit cannot be measured again") {
        Rng rng(1);
        Qubit q = make_qubit(1.0, 1.0);
        auto m = measure_standard(std::move(q), Basis::computational(), rng);
        CHECK(q.consumed()); // NOLINT(bugprone-use-after-move)
        CHECK_THROWS_AS((void)measure_standard(std::move(q), Basis::computational(), rng),
                        ConsumedQubitError);
        CHECK_THROWS_AS((void)q.state(), ConsumedQubitError);
        CHECK_FALSE(m.qubit.consumed());
    }

    TEST_CASE("gate application consumes its input") {
        Qubit q = make_qubit(1.0, 0.0);
        Qubit out = apply(Gate::identity(), std::move(q));
        CHECK(q.consumed()); // NOLINT(bugprone-use-after-move)
        CHECK_THROWS_AS((void)apply(Gate::identity(), std::move(q)), ConsumedQubitError);
        CHECK_THROWS_AS((void)born_probabilities(q, Basis::computational()), ConsumedQubitError);
        CHECK_FALSE(out.consumed());
    }

    TEST_CASE("reframing consumes the source") {
        Qubit q = make_qubit(1.0, 0.0);
        const Basis b = make_basis(std::numbers::pi / 4, 0.0, "H");
        Qubit r = std::move(q).reframed(b);
        CHECK(q.consumed()); // NOLINT(bugprone-use-after-move)
        CHECK(r.frame() == b);
        const double h = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(r.a() - h) < 1e-15);
        CHECK(std::abs(r.b() + h) < 1e-15);
    }
}
