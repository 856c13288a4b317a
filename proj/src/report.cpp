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
#include <json.hpp>

#include "qlogic/scenario.hpp"

namespace qlogic::scenario {

namespace {

using Json = nlohmann::ordered_json;

std::string_view judgement_label(StepKind kind) {
    switch (kind) {
    case StepKind::OutsiderMeasure:
        return "assertion";
    case StepKind::OutsiderNotMeasure:
        return "falsity";
    case StepKind::InsiderBasic:
    case StepKind::InsiderLiar:
        return "axiom";
    case StepKind::Derive:
        return "goal";
    case StepKind::ClassicalStatus:
        return "judgement";
    }
    return "judgement";
}

// -- text -------------------------------------------------------------------------

std::string state_text(const quantum::StateVector &v) {
    return "a=" + format_amplitude(v[0]) + " b=" + format_amplitude(v[1]);
}

void text_step(const StepRecord &r, std::string &out) {
    out += "step " + std::to_string(r.index) + ": " + std::string(to_string(r.kind)) + "\n";
    if (r.basis) {
        out += "  basis: gamma=" + format_real(r.basis->gamma) +
               " phi=" + format_real(r.basis->phi) + " atom=" + r.basis->atom + "\n";
    }
    if (r.phases) {
        out += "  phases: " + format_real(r.phases->first) + " " +
               format_real(r.phases->second) + "\n";
    }
    if (r.outcome) {
        out += "  outcome: " + r.outcome->label + " (" +
               std::string(quantum::to_string(r.outcome->index)) +
               ") p=" + format_real(r.outcome->probability) + "\n";
    }
    if (r.seed) {
        out += "  seed: " + std::to_string(*r.seed) + "\n";
    }
    if (r.input_state) {
        out += "  input: " + state_text(*r.input_state) + "\n";
    }
    if (r.state) {
        out += "  state: " + state_text(*r.state) + "\n";
    }
    if (r.observer) {
        out += "  observer: ";
        out += logic::to_string(*r.observer);
        out += "\n";
    }
    out += "  ";
    out += judgement_label(r.kind);
    out += ": " + logic::to_string(r.judgement) + "\n";
    if (r.derivation) {
        if (*r.derivation) {
            out += "  derivation:\n";
            out += logic::render_derivation(**r.derivation, logic::Notation::Ascii, 4);
        } else {
            out += "  derivation: not derivable\n";
        }
    }
    if (r.classical_status) {
        out += "  classical status: ";
        out += logic::to_string(*r.classical_status);
        out += "\n";
    }
}

std::string emit_text(const Report &r) {
    std::string out = "qlogic report\n";
    out += "seed: " + std::to_string(r.seed) + "\n";
    if (r.trials > 1) {
        out += "trials: " + std::to_string(r.trials) + "\n";
    }
    for (const StepRecord &step : r.steps) {
        text_step(step, out);
    }
    if (!r.frequencies.empty()) {
        out += "frequencies:\n";
        for (const Frequency &f : r.frequencies) {
            out += "  step " + std::to_string(f.step) + ": " + f.judgement +
                   "  count=" + std::to_string(f.count) +
                   " frequency=" + format_real(f.frequency) + "\n";
        }
    }
    return out;
}

// -- json -------------------------------------------------------------------------

Json amplitude_json(quantum::Amplitude z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json state_json(const quantum::StateVector &v) {
    return Json{{"a", amplitude_json(v[0])}, {"b", amplitude_json(v[1])}};
}

Json derivation_json(const logic::Derivation &d) {
    Json premises = Json::array();
    for (const logic::Derivation &p : d.premises) {
        premises.push_back(derivation_json(p));
    }
    return Json{{"conclusion", logic::to_string(d.conclusion)},
                {"rule", logic::to_string(d.rule)},
                {"premises", std::move(premises)}};
}

Json step_json(const StepRecord &r) {
    Json j{{"index", r.index}, {"kind", to_string(r.kind)}};
    if (r.basis) {
        j["basis"] = Json{{"gamma", r.basis->gamma}, {"phi", r.basis->phi}, {"atom", r.basis->atom}};
    }
    if (r.phases) {
        j["phases"] = Json{{"first", r.phases->first}, {"second", r.phases->second}};
    }
    if (r.outcome) {
        j["outcome"] = Json{{"label", r.outcome->label},
                            {"index", quantum::to_string(r.outcome->index)},
                            {"probability", r.outcome->probability}};
    }
    if (r.seed) {
        j["seed"] = *r.seed;
    }
    if (r.input_state) {
        j["input"] = state_json(*r.input_state);
    }
    if (r.state) {
        j["state"] = state_json(*r.state);
    }
    j["judgement"] = logic::to_string(r.judgement);
    if (r.observer) {
        j["observer"] = logic::to_string(*r.observer);
    }
    if (r.derivation) {
        j["derivable"] = r.derivation->has_value();
        if (*r.derivation) {
            j["derivation"] = derivation_json(**r.derivation);
        }
    }
    if (r.classical_status) {
        j["classicalStatus"] = logic::to_string(*r.classical_status);
    }
    return j;
}

std::string emit_json(const Report &r) {
    Json steps = Json::array();
    for (const StepRecord &step : r.steps) {
        steps.push_back(step_json(step));
    }
    Json j{{"seed", r.seed}, {"trials", r.trials}, {"steps", std::move(steps)}};
    if (!r.frequencies.empty()) {
        Json freqs = Json::array();
        for (const Frequency &f : r.frequencies) {
            freqs.push_back(Json{{"step", f.step},
                                 {"judgement", f.judgement},
                                 {"count", f.count},
                                 {"frequency", f.frequency}});
        }
        j["frequencies"] = std::move(freqs);
    }
    return j.dump(2) + "\n";
}

} // namespace

std::string emit_report(const Report &r, Format format) {
    return format == Format::Json ? emit_json(r) : emit_text(r);
}

} // namespace qlogic::scenario
