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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qlogic/logic.hpp"

namespace qlogic {

struct AxiomCheckOptions {
    std::uint64_t seed = 1;
    /// Random bases to sample; ignored when `basis` is set.
    std::size_t bases = 20;
    /// Random qubits measured in each basis.
    std::size_t qubits = 20;
    /// Fixed (gamma, phi) instead of random bases.
    std::optional<std::pair<double, double>> basis;
    std::string atom = "A";
};

struct AxiomCheck {
    AxiomCheckOptions options;
    std::size_t basic_events = 0;
    std::size_t liar_events = 0;
    /// Every basic event produced axiom1 and every liar event axiom2.
    bool basic_agree = true;
    bool liar_agree = true;
    /// Every event's axiom was derivable in the Inside context the event
    /// populated, and the derivation checked.
    bool derivations_ok = true;
    logic::Judgement axiom1;
    logic::Judgement axiom2;
    logic::Derivation derivation1;
    logic::Derivation derivation2;
    /// dual_judgement(axiom1) == axiom2.
    bool symmetry = false;
    logic::ClassicalStatus status1;
    logic::ClassicalStatus status2;
    logic::ClassicalStatus status_atom;
    logic::ClassicalStatus status_dual_atom;

    [[nodiscard]] bool ok() const noexcept;
};

/// Runs insider basic and liar measurements over random qubits and bases,
/// derives both axioms from the recorded events, and checks their duality
/// and classical status. Deterministic in options.seed.
[[nodiscard]] AxiomCheck check_axioms(const AxiomCheckOptions &options = {});

/// Human-readable summary. The axiom lines read exactly
/// "axiom 1: ⊢ A & A⊥" and "axiom 2: A⊥ ⊕ A ⊢" in Unicode notation.
[[nodiscard]] std::string render_axiom_check(const AxiomCheck &check,
                                             logic::Notation notation = logic::Notation::Unicode);

} // namespace qlogic
