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
#include <string_view>
#include <vector>

#include "qlogic/bridge.hpp"
#include "qlogic/logic.hpp"
#include "qlogic/quantum.hpp"

/**
 * @file scenario.hpp
 * Line-oriented scenario scripts and their execution.
 *
 * One directive per line, `#` starts a comment:
 *
 *     seed <uint64>                      optional, overridden by --seed
 *     trials <n>                         optional, overridden by --trials
 *     qubit <a> <b> | qubit <preset>     required, exactly once
 *     basis <gamma> <phi> <atom>         optional, default 0 0 A
 *     outsider-measure
 *     outsider-not-measure
 *     insider-basic [theta0 theta1]
 *     insider-liar [theta0 theta1]
 *     derive [inside|outside] <judgement>
 *     classical-status <formula | judgement>
 *
 * Reals accept decimal literals, `pi`, `sqrt(x)`, unary sign, `*` and `/`
 * (e.g. `pi/4`, `1/sqrt(2)`). Amplitudes are complex: `0.6`, `0.8i`, `-i`,
 * `0.6-0.8i`. Qubit amplitudes are computational-basis coordinates. Presets:
 * zero, one, plus, minus, plus-i, minus-i.
 */
namespace qlogic::scenario {

/// Shortest text that parses back to the same double.
[[nodiscard]] std::string format_real(double value);
/// `re`, `imi`, or `re+imi` / `re-imi`, each part via format_real.
[[nodiscard]] std::string format_amplitude(quantum::Amplitude z);
/// Throws SyntaxError on malformed or non-finite input.
[[nodiscard]] double parse_real(std::string_view text);
[[nodiscard]] quantum::Amplitude parse_amplitude(std::string_view text);

struct QubitSpec {
    /// Amplitudes as written (or as defined by the preset), before
    /// normalization.
    quantum::Amplitude a{1.0, 0.0};
    quantum::Amplitude b{0.0, 0.0};
    std::optional<std::string> preset;

    /// Builds a fresh qubit from the description. A spec is a classical
    /// description and can be reused; the qubit it prepares cannot.
    [[nodiscard]] quantum::Qubit prepare() const;
    /// Normalized amplitudes.
    [[nodiscard]] quantum::StateVector normalized() const;

    friend bool operator==(const QubitSpec &, const QubitSpec &) = default;
};

/// Throws ScenarioError (line 0) for an unknown preset name.
[[nodiscard]] QubitSpec preset_qubit(std::string_view name);

struct BasisSpec {
    double gamma = 0.0;
    double phi = 0.0;
    std::string atom = "A";

    [[nodiscard]] quantum::Basis make() const;

    friend bool operator==(const BasisSpec &, const BasisSpec &) = default;
};

enum class StepKind {
    OutsiderMeasure,
    OutsiderNotMeasure,
    InsiderBasic,
    InsiderLiar,
    Derive,
    ClassicalStatus,
};

[[nodiscard]] std::string_view to_string(StepKind kind) noexcept;
[[nodiscard]] bool is_quantum(StepKind kind) noexcept;
[[nodiscard]] bool consumes_qubit(StepKind kind) noexcept;

struct Step {
    StepKind kind;
    /// Explicit phases of an insider step.
    std::optional<quantum::Phases> phases;
    /// Goal of `derive`, subject of `classical-status`.
    std::optional<logic::Judgement> judgement;
    /// Context selected by `derive inside|outside`.
    std::optional<logic::Observer> observer;
    /// 1-based source line; not part of equality.
    std::size_t line = 0;

    friend bool operator==(const Step &lhs, const Step &rhs) {
        return lhs.kind == rhs.kind && lhs.phases == rhs.phases &&
               lhs.judgement == rhs.judgement && lhs.observer == rhs.observer;
    }
};

struct Scenario {
    QubitSpec qubit;
    BasisSpec basis;
    std::vector<Step> steps;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;

    friend bool operator==(const Scenario &, const Scenario &) = default;
};

/// Parses and validates. Throws ScenarioError carrying the 1-based line for
/// syntax errors, a missing or repeated `qubit`, any quantum step after the
/// qubit was consumed by a standard measurement, and any request to
/// duplicate the state (`clone`, `copy`, `duplicate`).
[[nodiscard]] Scenario parse_scenario(std::string_view text);

/// Canonical script text; parse_scenario(render_scenario(s)) == s.
[[nodiscard]] std::string render_scenario(const Scenario &s);

// -- execution ------------------------------------------------------------------

inline constexpr std::uint64_t kDefaultSeed = 0;

struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
};

struct OutcomeRecord {
    std::string label;
    quantum::BasisIndex index;
    double probability;
};

struct StepRecord {
    std::size_t index;
    StepKind kind;
    std::optional<BasisSpec> basis;
    std::optional<quantum::Phases> phases;
    std::optional<OutcomeRecord> outcome;
    std::optional<std::uint64_t> seed;
    /// Coordinates in the scenario basis before/after a reversible step.
    std::optional<quantum::StateVector> input_state;
    std::optional<quantum::StateVector> state;
    logic::Judgement judgement;
    /// Context the judgement was derived in (quantum and derive steps).
    std::optional<logic::Observer> observer;
    /// Set for quantum and derive steps; nullopt inside means not derivable.
    std::optional<std::optional<logic::Derivation>> derivation;
    std::optional<logic::ClassicalStatus> classical_status;
};

struct Frequency {
    std::size_t step;
    std::string judgement;
    std::uint64_t count;
    double frequency;
};

struct Report {
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t trials = 1;
    /// Records of trial 0.
    std::vector<StepRecord> steps;
    /// Per quantum step, how often each judgement occurred over all trials.
    /// Empty when trials == 1.
    std::vector<Frequency> frequencies;
};

/// Executes the steps in order, `trials` times. Trial i prepares a fresh
/// qubit from the spec and draws from Rng(trial_seed(seed, i)). Pure function
/// of (scenario, options). Step failures are rethrown with the step number:
/// NumericError stays NumericError, other library errors become
/// ScenarioError.
[[nodiscard]] Report run_scenario(const Scenario &s, const RunOptions &options = {});

enum class Format { Text, Json };

/// Text uses ASCII judgement notation ("|- A & A^"); JSON carries the same
/// fields under the schema
///   {seed, trials, steps: [{index, kind, basis?, phases?, outcome?, seed?,
///    input?, state?, judgement, observer?, derivable?, derivation?,
///    classicalStatus?}], frequencies?}
[[nodiscard]] std::string emit_report(const Report &r, Format format);

} // namespace qlogic::scenario
