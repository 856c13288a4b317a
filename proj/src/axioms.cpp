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
#include "qlogic/axioms.hpp"

#include <numbers>

#include "qlogic/bridge.hpp"
#include "qlogic/random.hpp"
#include "qlogic/scenario.hpp"

namespace qlogic {

using logic::Formula;
using logic::Judgement;

bool AxiomCheck::ok() const noexcept {
    return basic_agree && liar_agree && derivations_ok && symmetry &&
           status1 == logic::ClassicalStatus::ClassicallyUnsatisfiable &&
           status2 == logic::ClassicalStatus::ClassicallyUnsatisfiable &&
           status_atom == logic::ClassicalStatus::Contingent &&
           status_dual_atom == logic::ClassicalStatus::Contingent;
}

namespace {

quantum::Amplitude random_amplitude(Rng &rng) {
    return {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
}

// Records one insider event in a fresh Inside context and derives its
// judgement there.
std::optional<logic::Derivation> derive_from_event(const bridge::ObservationEvent &event,
                                                   const Judgement &judgement) {
    logic::Context ctx(logic::Observer::Inside);
    bridge::record(ctx, event);
    auto d = logic::derive(ctx, judgement);
    if (d && !logic::check_derivation(ctx, *d)) {
        return std::nullopt;
    }
    return d;
}

} // namespace

AxiomCheck check_axioms(const AxiomCheckOptions &options) {
    const Formula a = Formula::atom(options.atom);
    const Formula a_dual = Formula::dual_atom(options.atom);
    const Judgement expected1 =
        logic::reflect_conjunction(Judgement::assertion(a), Judgement::assertion(a_dual));
    const Judgement expected2 =
        logic::reflect_disjunction(Judgement::falsity(a_dual), Judgement::falsity(a));

    Rng rng(options.seed);
    std::size_t basic_events = 0;
    std::size_t liar_events = 0;
    bool basic_agree = true;
    bool liar_agree = true;
    bool derivations_ok = true;
    std::optional<logic::Derivation> first1;
    std::optional<logic::Derivation> first2;

    const std::size_t n_bases = options.basis ? 1 : options.bases;
    for (std::size_t i = 0; i < n_bases; ++i) {
        const double gamma = options.basis ? options.basis->first : rng.uniform() * std::numbers::pi;
        const double phi =
            options.basis ? options.basis->second : (2.0 * rng.uniform() - 1.0) * std::numbers::pi;
        const quantum::Basis basis = quantum::make_basis(gamma, phi, options.atom);
        for (std::size_t k = 0; k < options.qubits; ++k) {
            quantum::Amplitude x = random_amplitude(rng);
            quantum::Amplitude y = random_amplitude(rng);
            while (std::norm(x) + std::norm(y) < 1e-6) {
                x = random_amplitude(rng);
                y = random_amplitude(rng);
            }

            auto basic = bridge::insider_basic_measure(quantum::make_qubit(x, y), basis);
            ++basic_events;
            basic_agree = basic_agree && basic.judgement == expected1;
            auto d1 = derive_from_event(basic.event, basic.judgement);
            derivations_ok = derivations_ok && d1.has_value();
            if (!first1 && d1) {
                first1 = std::move(d1);
            }

            auto liar = bridge::insider_liar_measure(quantum::make_qubit(x, y), basis);
            ++liar_events;
            liar_agree = liar_agree && liar.judgement == expected2;
            auto d2 = derive_from_event(liar.event, liar.judgement);
            derivations_ok = derivations_ok && d2.has_value();
            if (!first2 && d2) {
                first2 = std::move(d2);
            }
        }
    }
    if (!first1 || !first2) {
        derivations_ok = false;
    }
    const logic::Derivation missing1{expected1, logic::Rule::AxiomUse, {}};
    const logic::Derivation missing2{expected2, logic::Rule::AxiomUse, {}};

    return AxiomCheck{
        .options = options,
        .basic_events = basic_events,
        .liar_events = liar_events,
        .basic_agree = basic_agree,
        .liar_agree = liar_agree,
        .derivations_ok = derivations_ok,
        .axiom1 = expected1,
        .axiom2 = expected2,
        .derivation1 = first1.value_or(missing1),
        .derivation2 = first2.value_or(missing2),
        .symmetry = logic::dual_judgement(expected1) == expected2,
        .status1 = logic::check_classical_status(expected1),
        .status2 = logic::check_classical_status(expected2),
        .status_atom = logic::check_classical_status(Judgement::assertion(a)),
        .status_dual_atom = logic::check_classical_status(Judgement::assertion(a_dual)),
    };
}

std::string render_axiom_check(const AxiomCheck &check, logic::Notation notation) {
    using logic::to_string;
    const AxiomCheckOptions &o = check.options;
    std::string out = "check-axioms seed=" + std::to_string(o.seed);
    if (o.basis) {
        out += " basis=(" + scenario::format_real(o.basis->first) + ", " +
               scenario::format_real(o.basis->second) + ")";
    } else {
        out += " bases=" + std::to_string(o.bases);
    }
    out += " qubits=" + std::to_string(o.qubits) + "\n";

    auto section = [&](int n, const Judgement &axiom, const logic::Derivation &d,
                       std::string_view source, std::size_t events, bool agree,
                       logic::ClassicalStatus status) {
        out += "axiom " + std::to_string(n) + ": " + to_string(axiom, notation) + "\n";
        out += "  source: " + std::string(source) + ", " + std::to_string(events) + " events, " +
               (agree ? "all agree" : "DISAGREEMENT") + "\n";
        out += "  derivation:\n" + logic::render_derivation(d, notation, 4);
        out += "  classical status: " + std::string(to_string(status)) + "\n";
    };
    section(1, check.axiom1, check.derivation1, "insider-basic", check.basic_events,
            check.basic_agree, check.status1);
    section(2, check.axiom2, check.derivation2, "insider-liar", check.liar_events,
            check.liar_agree, check.status2);

    out += "symmetry: dual(" + to_string(check.axiom1, notation) +
           ") = " + to_string(logic::dual_judgement(check.axiom1), notation) +
           (check.symmetry ? "  ok" : "  MISMATCH") + "\n";
    const Formula a = Formula::atom(o.atom);
    const Formula a_dual = Formula::dual_atom(o.atom);
    out += "literals: " + to_string(Judgement::assertion(a), notation) + " " +
           std::string(to_string(check.status_atom)) + ", " +
           to_string(Judgement::assertion(a_dual), notation) + " " +
           std::string(to_string(check.status_dual_atom)) + "\n";
    out += std::string("result: ") + (check.ok() ? "ok" : "FAILED") + "\n";
    return out;
}

} // namespace qlogic
