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
#include <map>
#include <optional>
#include <utility>

#include "qlogic/error.hpp"
#include "qlogic/random.hpp"
#include "qlogic/scenario.hpp"

namespace qlogic::scenario {

namespace {

using logic::Context;
using logic::Observer;

// Everything a StepRecord holds besides index, kind and judgement.
struct Details {
    std::optional<BasisSpec> basis;
    std::optional<quantum::Phases> phases;
    std::optional<OutcomeRecord> outcome;
    std::optional<std::uint64_t> seed;
    std::optional<quantum::StateVector> input_state;
    std::optional<quantum::StateVector> state;
    std::optional<Observer> observer;
    std::optional<std::optional<logic::Derivation>> derivation;
    std::optional<logic::ClassicalStatus> classical_status;
};

class Trial {
  public:
    Trial(const Scenario &s, const quantum::Basis &basis, std::uint64_t seed)
        : scenario_(s), basis_(basis), rng_(seed), qubit_(s.qubit.prepare()) {}

    /// Runs step k and returns its judgement; fills `details` when given.
    logic::Judgement run_step(std::size_t k, Details *details) {
        const Step &step = scenario_.steps[k];
        switch (step.kind) {
        case StepKind::OutsiderMeasure:
        case StepKind::OutsiderNotMeasure: {
            auto obs = step.kind == StepKind::OutsiderMeasure
                           ? bridge::outsider_measure(std::move(qubit_), basis_, rng_)
                           : bridge::outsider_not_measure(std::move(qubit_), basis_, rng_);
            observed(obs.event, obs.judgement, details);
            return obs.judgement;
        }
        case StepKind::InsiderBasic:
        case StepKind::InsiderLiar: {
            const quantum::Phases phases = step.phases.value_or(quantum::Phases{});
            auto obs = step.kind == StepKind::InsiderBasic
                           ? bridge::insider_basic_measure(std::move(qubit_), basis_, phases)
                           : bridge::insider_liar_measure(std::move(qubit_), basis_, phases);
            qubit_ = std::move(obs.qubit);
            observed(obs.event, obs.judgement, details);
            return obs.judgement;
        }
        case StepKind::Derive: {
            const Observer observer = step.observer.value_or(last_observer_);
            const logic::Judgement &goal = step.judgement.value();
            if (details != nullptr) {
                details->observer = observer;
                details->derivation = logic::derive(context(observer), goal);
            }
            return goal;
        }
        case StepKind::ClassicalStatus: {
            const logic::Judgement &subject = step.judgement.value();
            if (details != nullptr) {
                details->classical_status = logic::check_classical_status(subject);
            }
            return subject;
        }
        }
        throw ScenarioError("unhandled step", step.line);
    }

  private:
    Context &context(Observer observer) {
        return observer == Observer::Inside ? inside_ : outside_;
    }

    void observed(const bridge::ObservationEvent &event, const logic::Judgement &j,
                  Details *details) {
        last_observer_ = bridge::observer_of(event.kind);
        Context &ctx = context(last_observer_);
        bridge::record(ctx, event);
        if (details == nullptr) {
            return;
        }
        details->basis = scenario_.basis;
        details->phases = event.phases;
        if (event.outcome) {
            details->outcome = OutcomeRecord{event.basis.label(event.outcome->index),
                                             event.outcome->index, event.outcome->probability};
        }
        details->seed = event.seed;
        details->input_state = event.input_state;
        details->state = event.resulting_state;
        details->observer = last_observer_;
        details->derivation = logic::derive(ctx, j);
    }

    const Scenario &scenario_;
    const quantum::Basis &basis_;
    Rng rng_;
    quantum::Qubit qubit_;
    Context inside_{Observer::Inside};
    Context outside_{Observer::Outside};
    // A derive step before any observation looks at the (empty) outside context.
    Observer last_observer_ = Observer::Outside;
};

logic::Judgement guarded(const Step &step, std::size_t k, Trial &trial, Details *details) {
    try {
        return trial.run_step(k, details);
    } catch (const NumericError &e) {
        throw NumericError("step " + std::to_string(k + 1) + " (" +
                           std::string(to_string(step.kind)) + "): " + e.what());
    } catch (const Error &e) {
        throw ScenarioError("step " + std::to_string(k + 1) + " (" +
                                std::string(to_string(step.kind)) + "): " + e.what(),
                            step.line);
    }
}

} // namespace

Report run_scenario(const Scenario &s, const RunOptions &options) {
    Report report;
    report.seed = options.seed.value_or(s.seed.value_or(kDefaultSeed));
    report.trials = options.trials.value_or(s.trials.value_or(1));
    if (report.trials == 0) {
        throw ScenarioError("trials must be positive", 0);
    }
    const quantum::Basis basis = [&] {
        try {
            return s.basis.make();
        } catch (const Error &e) {
            throw ScenarioError(std::string("basis: ") + e.what(), 0);
        }
    }();

    std::map<std::pair<std::size_t, std::string>, std::uint64_t> counts;
    for (std::uint64_t t = 0; t < report.trials; ++t) {
        std::optional<Trial> trial;
        try {
            trial.emplace(s, basis, trial_seed(report.seed, t));
        } catch (const Error &e) {
            throw ScenarioError(std::string("qubit: ") + e.what(), 0);
        }
        for (std::size_t k = 0; k < s.steps.size(); ++k) {
            const Step &step = s.steps[k];
            Details details;
            logic::Judgement j = guarded(step, k, *trial, t == 0 ? &details : nullptr);
            if (report.trials > 1 && is_quantum(step.kind)) {
                ++counts[{k + 1, logic::to_string(j)}];
            }
            if (t == 0) {
                report.steps.push_back(StepRecord{
                    k + 1, step.kind, std::move(details.basis), details.phases,
                    std::move(details.outcome), details.seed, details.input_state,
                    details.state, std::move(j), details.observer,
                    std::move(details.derivation), details.classical_status});
            }
        }
    }
    for (const auto &[key, count] : counts) {
        report.frequencies.push_back(Frequency{
            key.first, key.second, count,
            static_cast<double>(count) / static_cast<double>(report.trials)});
    }
    return report;
}

} // namespace qlogic::scenario
