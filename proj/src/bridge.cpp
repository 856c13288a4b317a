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
#include "qlogic/bridge.hpp"

#include <string>

#include "qlogic/error.hpp"

namespace qlogic::bridge {

using logic::Formula;
using logic::Judgement;
using quantum::Basis;
using quantum::BasisIndex;

std::string_view to_string(EventKind kind) noexcept {
    switch (kind) {
    case EventKind::StandardMeasurement:
        return "outsider-measure";
    case EventKind::NotAfterStandard:
        return "outsider-not-measure";
    case EventKind::BasicMeasurement:
        return "insider-basic";
    case EventKind::LiarMeasurement:
        return "insider-liar";
    }
    return "?";
}

Formula literal(const Basis &basis, BasisIndex index) {
    return index == BasisIndex::First ? Formula::atom(basis.atom())
                                      : Formula::dual_atom(basis.atom());
}

std::vector<Judgement> primitive_judgements(const ObservationEvent &event) {
    const Formula a = literal(event.basis, BasisIndex::First);
    const Formula a_dual = literal(event.basis, BasisIndex::Second);
    switch (event.kind) {
    case EventKind::StandardMeasurement:
        return {Judgement::assertion(literal(event.basis, event.outcome.value().index))};
    case EventKind::NotAfterStandard: {
        const BasisIndex flipped = quantum::other(event.outcome.value().index);
        return {Judgement::falsity(literal(event.basis, flipped))};
    }
    case EventKind::BasicMeasurement:
        return {Judgement::assertion(a), Judgement::assertion(a_dual)};
    case EventKind::LiarMeasurement:
        // The NOT after the basic measurement turns each assertion into the
        // falsity of the exchanged label: (|- A) -> A^ |-, (|- A^) -> A |-.
        return {Judgement::falsity(a_dual), Judgement::falsity(a)};
    }
    return {};
}

Judgement judgement_of(const ObservationEvent &event) {
    const std::vector<Judgement> parts = primitive_judgements(event);
    switch (event.kind) {
    case EventKind::StandardMeasurement:
    case EventKind::NotAfterStandard:
        return parts.front();
    case EventKind::BasicMeasurement:
        return logic::reflect_conjunction(parts[0], parts[1]);
    case EventKind::LiarMeasurement:
        return logic::reflect_disjunction(parts[0], parts[1]);
    }
    return parts.front();
}

void record(logic::Context &ctx, const ObservationEvent &event) {
    if (ctx.observer() != observer_of(event.kind)) {
        throw ContextError(std::string(to_string(event.kind)) + " is an " +
                           std::string(to_string(observer_of(event.kind))) +
                           " event and cannot be recorded in an " +
                           std::string(to_string(ctx.observer())) + " context");
    }
    for (const Judgement &j : primitive_judgements(event)) {
        ctx.add_axiom(j);
    }
}

namespace {

OutsiderObservation observe_outside(EventKind kind, quantum::Qubit &&q, const Basis &basis,
                                    Rng &rng) {
    quantum::Measurement m = quantum::measure_standard(std::move(q), basis, rng);
    ObservationEvent event{kind, basis, std::move(m.outcome), rng.seed(), {}, {}, {}};
    Judgement j = judgement_of(event);
    return {std::move(event), std::move(j)};
}

InsiderObservation observe_inside(EventKind kind, quantum::Qubit &&q, const Basis &basis,
                                  quantum::Phases phases) {
    const quantum::Gate gate = kind == EventKind::BasicMeasurement
                                   ? quantum::basic_measurement_gate(basis, phases)
                                   : quantum::liar_gate(basis, phases);
    const quantum::StateVector before = q.coordinates(basis);
    quantum::Qubit out = quantum::apply(gate, std::move(q));
    const quantum::StateVector after = out.coordinates(basis);
    ObservationEvent event{kind, basis, {}, {}, phases, before, after};
    Judgement j = judgement_of(event);
    return {std::move(event), std::move(out), std::move(j)};
}

} // namespace

OutsiderObservation outsider_measure(quantum::Qubit &&q, const Basis &basis, Rng &rng) {
    return observe_outside(EventKind::StandardMeasurement, std::move(q), basis, rng);
}

OutsiderObservation outsider_not_measure(quantum::Qubit &&q, const Basis &basis, Rng &rng) {
    return observe_outside(EventKind::NotAfterStandard, std::move(q), basis, rng);
}

InsiderObservation insider_basic_measure(quantum::Qubit &&q, const Basis &basis,
                                         quantum::Phases phases) {
    return observe_inside(EventKind::BasicMeasurement, std::move(q), basis, phases);
}

InsiderObservation insider_liar_measure(quantum::Qubit &&q, const Basis &basis,
                                        quantum::Phases phases) {
    return observe_inside(EventKind::LiarMeasurement, std::move(q), basis, phases);
}

} // namespace qlogic::bridge
