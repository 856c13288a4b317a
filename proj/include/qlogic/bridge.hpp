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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qlogic/logic.hpp"
#include "qlogic/quantum.hpp"
#include "qlogic/random.hpp"

/**
 * @file bridge.hpp
 * Turns measurement events into judgements.
 *
 * An outside observer measures destructively and records one literal: |- A
 * or |- A^ after a plain measurement, and the falsity of the NOT-ed label
 * after a measurement followed by a classical NOT. An inside observer acts
 * with a unitary and keeps the superposition: the basic measurement yields
 * the pair |- A, |- A^ (reflected as |- A & A^), the liar measurement yields
 * A^ |-, A |- (reflected as A^ (+) A |-). Insider judgements do not depend on
 * the amplitudes and involve no sampling.
 */
namespace qlogic::bridge {

enum class EventKind { StandardMeasurement, NotAfterStandard, BasicMeasurement, LiarMeasurement };

/// Scenario directive spelling: "outsider-measure", "outsider-not-measure",
/// "insider-basic", "insider-liar".
[[nodiscard]] std::string_view to_string(EventKind kind) noexcept;

[[nodiscard]] constexpr bool is_reversible(EventKind kind) noexcept {
    return kind == EventKind::BasicMeasurement || kind == EventKind::LiarMeasurement;
}

[[nodiscard]] constexpr logic::Observer observer_of(EventKind kind) noexcept {
    return is_reversible(kind) ? logic::Observer::Inside : logic::Observer::Outside;
}

/// Immutable record of one observation.
///
/// Standard kinds carry `outcome` and `seed`; reversible kinds carry the
/// phases plus the state before and after, as coordinates in `basis`.
struct ObservationEvent {
    EventKind kind;
    quantum::Basis basis;
    std::optional<quantum::Outcome> outcome;
    std::optional<std::uint64_t> seed;
    std::optional<quantum::Phases> phases;
    std::optional<quantum::StateVector> input_state;
    std::optional<quantum::StateVector> resulting_state;
};

/// Literal naming a basis vector: A for first, A^ for second.
[[nodiscard]] logic::Formula literal(const quantum::Basis &basis, quantum::BasisIndex index);

/// Judgements the observer obtains directly from the event, before any
/// reflection: one literal judgement for standard kinds, the pair for
/// reversible kinds.
[[nodiscard]] std::vector<logic::Judgement> primitive_judgements(const ObservationEvent &event);

/// The event's single resulting judgement: the primitive one for standard
/// kinds, the reflected pair for reversible kinds.
[[nodiscard]] logic::Judgement judgement_of(const ObservationEvent &event);

/// Adds the event's primitive judgements to ctx as axioms. Throws
/// ContextError when the event's observer differs from ctx's, or when an
/// outside context would end up asserting both A and A^.
void record(logic::Context &ctx, const ObservationEvent &event);

struct OutsiderObservation {
    ObservationEvent event;
    logic::Judgement judgement;
};

struct InsiderObservation {
    ObservationEvent event;
    quantum::Qubit qubit;
    logic::Judgement judgement;
};

/// Standard measurement in `basis`; |- A or |- A^ by outcome. Consumes q.
[[nodiscard]] OutsiderObservation outsider_measure(quantum::Qubit &&q, const quantum::Basis &basis,
                                                   Rng &rng);

/// Standard measurement followed by a classical NOT on the label. The NOT-ed
/// label is asserted false: outcome A gives A^ |-, outcome A^ gives A |-.
/// Consumes q.
[[nodiscard]] OutsiderObservation outsider_not_measure(quantum::Qubit &&q,
                                                       const quantum::Basis &basis, Rng &rng);

/// Applies basic_measurement_gate(basis, phases). Always yields |- A & A^.
[[nodiscard]] InsiderObservation insider_basic_measure(quantum::Qubit &&q,
                                                       const quantum::Basis &basis,
                                                       quantum::Phases phases = {});

/// Applies liar_gate(basis, phases); with zero phases the amplitudes are
/// exchanged. Always yields A^ (+) A |-.
[[nodiscard]] InsiderObservation insider_liar_measure(quantum::Qubit &&q,
                                                      const quantum::Basis &basis,
                                                      quantum::Phases phases = {});

} // namespace qlogic::bridge
