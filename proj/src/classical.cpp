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
#include <cstdint>

#include "qlogic/error.hpp"
#include "qlogic/logic.hpp"

namespace qlogic::logic {

bool classical_eval(const Formula &f, const Valuation &v) {
    switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::DualAtom: {
        const auto it = v.find(f.name());
        if (it == v.end()) {
            throw ValuationError("no truth value for atom '" + f.name() + "'");
        }
        return f.kind() == Formula::Kind::Atom ? it->second : !it->second;
    }
    case Formula::Kind::Conj:
        return classical_eval(f.left(), v) && classical_eval(f.right(), v);
    case Formula::Kind::Disj:
        return classical_eval(f.left(), v) || classical_eval(f.right(), v);
    }
    return false;
}

std::string_view to_string(ClassicalStatus status) noexcept {
    switch (status) {
    case ClassicalStatus::ClassicallyValid:
        return "classically-valid";
    case ClassicalStatus::ClassicallyUnsatisfiable:
        return "classically-unsatisfiable";
    case ClassicalStatus::Contingent:
        return "contingent";
    }
    return "?";
}

ClassicalStatus check_classical_status(const Judgement &j) {
    const std::set<std::string> names = atoms(j.formula);
    if (names.size() > kMaxClassicalAtoms) {
        throw ValuationError("too many atoms for exhaustive search (" +
                             std::to_string(names.size()) + ")");
    }
    bool seen_true = false;
    bool seen_false = false;
    Valuation v;
    const std::uint64_t rows = std::uint64_t{1} << names.size();
    for (std::uint64_t row = 0; row < rows && !(seen_true && seen_false); ++row) {
        std::size_t bit = 0;
        for (const std::string &name : names) {
            v[name] = ((row >> bit++) & 1U) != 0;
        }
        (classical_eval(j.formula, v) ? seen_true : seen_false) = true;
    }
    const bool always = seen_true && !seen_false;
    const bool never = seen_false && !seen_true;
    if (!always && !never) {
        return ClassicalStatus::Contingent;
    }
    const bool holds = j.polarity == Polarity::Assertion ? always : never;
    return holds ? ClassicalStatus::ClassicallyValid : ClassicalStatus::ClassicallyUnsatisfiable;
}

} // namespace qlogic::logic
