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
#include <array>
#include <charconv>
#include <cmath>
#include <utility>

#include "qlogic/error.hpp"
#include "qlogic/scenario.hpp"

namespace qlogic::scenario {

using quantum::Amplitude;

// -- specs ----------------------------------------------------------------------

quantum::Qubit QubitSpec::prepare() const { return quantum::make_qubit(a, b); }

quantum::StateVector QubitSpec::normalized() const { return prepare().state(); }

QubitSpec preset_qubit(std::string_view name) {
    const double h = 1.0 / std::sqrt(2.0);
    struct Entry {
        std::string_view name;
        Amplitude a;
        Amplitude b;
    };
    const std::array<Entry, 6> table{{
        {"zero", {1.0, 0.0}, {0.0, 0.0}},
        {"one", {0.0, 0.0}, {1.0, 0.0}},
        {"plus", {h, 0.0}, {h, 0.0}},
        {"minus", {h, 0.0}, {-h, 0.0}},
        {"plus-i", {h, 0.0}, {0.0, h}},
        {"minus-i", {h, 0.0}, {0.0, -h}},
    }};
    for (const Entry &e : table) {
        if (e.name == name) {
            return QubitSpec{e.a, e.b, std::string(name)};
        }
    }
    throw ScenarioError("unknown qubit preset '" + std::string(name) + "'", 0);
}

quantum::Basis BasisSpec::make() const { return quantum::make_basis(gamma, phi, atom); }

std::string_view to_string(StepKind kind) noexcept {
    switch (kind) {
    case StepKind::OutsiderMeasure:
        return "outsider-measure";
    case StepKind::OutsiderNotMeasure:
        return "outsider-not-measure";
    case StepKind::InsiderBasic:
        return "insider-basic";
    case StepKind::InsiderLiar:
        return "insider-liar";
    case StepKind::Derive:
        return "derive";
    case StepKind::ClassicalStatus:
        return "classical-status";
    }
    return "?";
}

bool is_quantum(StepKind kind) noexcept {
    return kind != StepKind::Derive && kind != StepKind::ClassicalStatus;
}

bool consumes_qubit(StepKind kind) noexcept {
    return kind == StepKind::OutsiderMeasure || kind == StepKind::OutsiderNotMeasure;
}

// -- parsing --------------------------------------------------------------------

namespace {

constexpr std::string_view kSpace = " \t\r\n";

std::string_view trim(std::string_view s) {
    const std::size_t begin = s.find_first_not_of(kSpace);
    if (begin == std::string_view::npos) {
        return {};
    }
    const std::size_t end = s.find_last_not_of(kSpace);
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
    std::vector<std::string_view> words;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const std::size_t begin = s.find_first_not_of(kSpace, pos);
        if (begin == std::string_view::npos) {
            break;
        }
        const std::size_t end = std::min(s.find_first_of(kSpace, begin), s.size());
        words.push_back(s.substr(begin, end - begin));
        pos = end;
    }
    return words;
}

// Splits off the directive word and returns the trimmed remainder.
std::pair<std::string_view, std::string_view> split_directive(std::string_view line) {
    const std::size_t end = std::min(line.find_first_of(kSpace), line.size());
    return {line.substr(0, end), trim(line.substr(end))};
}

std::uint64_t parse_count(std::string_view text, std::size_t line, std::string_view what) {
    std::uint64_t value = 0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || result.ec != std::errc() || result.ptr != text.data() + text.size()) {
        throw ScenarioError(std::string(what) + " must be a non-negative integer, got '" +
                                std::string(text) + "'",
                            line);
    }
    return value;
}

template <typename F>
auto with_line(std::size_t line, std::string_view what, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const SyntaxError &e) {
        throw ScenarioError(std::string(what) + ": " + e.what(), line);
    } catch (const InvalidStateError &e) {
        throw ScenarioError(std::string(what) + ": " + e.what(), line);
    }
}

struct ParseState {
    Scenario scenario;
    std::optional<std::size_t> qubit_line;
    std::optional<std::size_t> basis_line;
    std::optional<std::size_t> seed_line;
    std::optional<std::size_t> trials_line;
    // Line and directive of the standard measurement that consumed the qubit.
    std::optional<std::pair<std::size_t, StepKind>> consumed_by;
};

void once(std::optional<std::size_t> &seen, std::size_t line, std::string_view directive) {
    if (seen) {
        throw ScenarioError("'" + std::string(directive) + "' already given at line " +
                                std::to_string(*seen),
                            line);
    }
    seen = line;
}

std::optional<quantum::Phases> parse_phases(std::string_view args, std::size_t line,
                                            std::string_view directive) {
    const auto words = split_words(args);
    if (words.empty()) {
        return std::nullopt;
    }
    if (words.size() != 2) {
        throw ScenarioError(std::string(directive) + " takes no phases or exactly two", line);
    }
    return with_line(line, "phase", [&] {
        return quantum::Phases{parse_real(words[0]), parse_real(words[1])};
    });
}

logic::Judgement parse_subject(std::string_view text, std::size_t line) {
    const bool has_turnstile =
        text.find("|-") != std::string_view::npos || text.find("⊢") != std::string_view::npos;
    return with_line(line, "formula", [&] {
        return has_turnstile ? logic::parse_judgement(text)
                             : logic::Judgement::assertion(logic::parse_formula(text));
    });
}

void parse_line(ParseState &st, std::string_view directive, std::string_view args,
                std::size_t line) {
    Scenario &s = st.scenario;
    auto no_args = [&] {
        if (!args.empty()) {
            throw ScenarioError("'" + std::string(directive) + "' takes no arguments", line);
        }
    };

    if (directive == "seed") {
        once(st.seed_line, line, directive);
        s.seed = parse_count(args, line, "seed");
        return;
    }
    if (directive == "trials") {
        once(st.trials_line, line, directive);
        const std::uint64_t n = parse_count(args, line, "trials");
        if (n == 0) {
            throw ScenarioError("trials must be positive", line);
        }
        s.trials = n;
        return;
    }
    if (directive == "qubit") {
        once(st.qubit_line, line, directive);
        const auto words = split_words(args);
        if (words.size() == 1) {
            try {
                s.qubit = preset_qubit(words[0]);
            } catch (const ScenarioError &e) {
                throw ScenarioError(e.what(), line);
            }
        } else if (words.size() == 2) {
            s.qubit = with_line(line, "amplitude", [&] {
                return QubitSpec{parse_amplitude(words[0]), parse_amplitude(words[1]), {}};
            });
        } else {
            throw ScenarioError("expected 'qubit <a> <b>' or 'qubit <preset>'", line);
        }
        // Validates zero and non-finite vectors.
        with_line(line, "qubit", [&] { return s.qubit.normalized(); });
        return;
    }
    if (directive == "basis") {
        once(st.basis_line, line, directive);
        const auto words = split_words(args);
        if (words.size() != 3) {
            throw ScenarioError("expected 'basis <gamma> <phi> <atom>'", line);
        }
        s.basis = with_line(line, "basis", [&] {
            BasisSpec spec{parse_real(words[0]), parse_real(words[1]), std::string(words[2])};
            (void)spec.make();
            return spec;
        });
        return;
    }
    if (directive == "clone" || directive == "copy" || directive == "duplicate") {
        throw ScenarioError("'" + std::string(directive) +
                                "' rejected by no-cloning: an unknown quantum state cannot be "
                                "duplicated",
                            line);
    }

    Step step{StepKind::Derive, {}, {}, {}, line};
    if (directive == "outsider-measure") {
        no_args();
        step.kind = StepKind::OutsiderMeasure;
    } else if (directive == "outsider-not-measure") {
        no_args();
        step.kind = StepKind::OutsiderNotMeasure;
    } else if (directive == "insider-basic") {
        step.kind = StepKind::InsiderBasic;
        step.phases = parse_phases(args, line, directive);
    } else if (directive == "insider-liar") {
        step.kind = StepKind::InsiderLiar;
        step.phases = parse_phases(args, line, directive);
    } else if (directive == "derive") {
        std::string_view goal = args;
        const auto [first, rest] = split_directive(args);
        if (!rest.empty() && (first == "inside" || first == "outside")) {
            step.observer = first == "inside" ? logic::Observer::Inside : logic::Observer::Outside;
            goal = rest;
        }
        if (goal.empty()) {
            throw ScenarioError("'derive' needs a judgement", line);
        }
        step.judgement = with_line(line, "judgement", [&] { return logic::parse_judgement(goal); });
    } else if (directive == "classical-status") {
        if (args.empty()) {
            throw ScenarioError("'classical-status' needs a formula or judgement", line);
        }
        step.kind = StepKind::ClassicalStatus;
        step.judgement = parse_subject(args, line);
    } else {
        throw ScenarioError("unknown directive '" + std::string(directive) + "'", line);
    }

    if (is_quantum(step.kind)) {
        if (st.consumed_by) {
            throw ScenarioError(
                "'" + std::string(directive) + "' uses the qubit consumed by '" +
                    std::string(to_string(st.consumed_by->second)) + "' at line " +
                    std::to_string(st.consumed_by->first) +
                    "; rejected by no-cloning: the collapsed superposition cannot be recovered "
                    "and the original state cannot be copied",
                line);
        }
        if (consumes_qubit(step.kind)) {
            st.consumed_by = std::pair{line, step.kind};
        }
    }
    s.steps.push_back(std::move(step));
}

} // namespace

Scenario parse_scenario(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) {
        text.remove_prefix(3);
    }
    ParseState st;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto [directive, args] = split_directive(line);
        parse_line(st, directive, args, line_no);
    }
    if (!st.qubit_line) {
        throw ScenarioError("missing 'qubit' directive", 0);
    }
    return st.scenario;
}

std::string render_scenario(const Scenario &s) {
    std::string out;
    if (s.seed) {
        out += "seed " + std::to_string(*s.seed) + "\n";
    }
    if (s.trials) {
        out += "trials " + std::to_string(*s.trials) + "\n";
    }
    if (s.qubit.preset) {
        out += "qubit " + *s.qubit.preset + "\n";
    } else {
        out += "qubit " + format_amplitude(s.qubit.a) + " " + format_amplitude(s.qubit.b) + "\n";
    }
    out += "basis " + format_real(s.basis.gamma) + " " + format_real(s.basis.phi) + " " +
           s.basis.atom + "\n";
    for (const Step &step : s.steps) {
        out += to_string(step.kind);
        if (step.phases) {
            out += " " + format_real(step.phases->first) + " " + format_real(step.phases->second);
        }
        if (step.observer) {
            out += " ";
            out += logic::to_string(*step.observer);
        }
        if (step.judgement) {
            out += " " + logic::to_string(*step.judgement);
        }
        out += "\n";
    }
    return out;
}

} // namespace qlogic::scenario
