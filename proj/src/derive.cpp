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
#include "qlogic/error.hpp"
#include "qlogic/logic.hpp"

namespace qlogic::logic {

Judgement reflect_conjunction(const Judgement &lhs, const Judgement &rhs) {
    if (lhs.polarity != Polarity::Assertion || rhs.polarity != Polarity::Assertion) {
        throw PolarityError("conjunction reflects two assertions, got '" + to_string(lhs) +
                            "' and '" + to_string(rhs) + "'");
    }
    return Judgement::assertion(Formula::conj(lhs.formula, rhs.formula));
}

Judgement reflect_disjunction(const Judgement &lhs, const Judgement &rhs) {
    if (lhs.polarity != Polarity::Falsity || rhs.polarity != Polarity::Falsity) {
        throw PolarityError("disjunction reflects two falsity judgements, got '" +
                            to_string(lhs) + "' and '" + to_string(rhs) + "'");
    }
    return Judgement::falsity(Formula::disj(lhs.formula, rhs.formula));
}

std::pair<Judgement, Judgement> unfold(const Judgement &j) {
    const Formula &f = j.formula;
    if (j.polarity == Polarity::Assertion && f.kind() == Formula::Kind::Conj) {
        return {Judgement::assertion(f.left()), Judgement::assertion(f.right())};
    }
    if (j.polarity == Polarity::Falsity && f.kind() == Formula::Kind::Disj) {
        return {Judgement::falsity(f.left()), Judgement::falsity(f.right())};
    }
    throw PolarityError("'" + to_string(j) + "' is not a reflected judgement");
}

std::string_view to_string(Observer observer) noexcept {
    return observer == Observer::Outside ? "outside" : "inside";
}

std::string_view to_string(Rule rule) noexcept {
    switch (rule) {
    case Rule::AxiomUse:
        return "axiom";
    case Rule::ReflectConj:
        return "reflect-conj";
    case Rule::ReflectDisj:
        return "reflect-disj";
    case Rule::Dualize:
        return "dualize";
    }
    return "?";
}

// -- Context ------------------------------------------------------------------

namespace {

// The assertion an outside literal judgement commits to: |- L is itself,
// L |- is |- dual(L).
Formula asserted_literal(const Judgement &j) {
    return j.polarity == Polarity::Assertion ? j.formula : dual_formula(j.formula);
}

} // namespace

void Context::add_axiom(const Judgement &axiom) {
    if (index_.contains(axiom)) {
        return;
    }
    if (observer_ == Observer::Outside) {
        if (!axiom.formula.is_literal()) {
            throw ContextError("an outside observer only records single assertions, not '" +
                               to_string(axiom) + "'");
        }
        const Formula committed = asserted_literal(axiom);
        for (const Judgement &existing : axioms_) {
            if (asserted_literal(existing) == dual_formula(committed)) {
                throw ContextError("an outside observer can assert only one of '|- " +
                                   committed.name() + "' and '|- " + committed.name() +
                                   "^'; '" + to_string(existing) + "' already recorded");
            }
        }
    }
    axioms_.push_back(axiom);
    index_.insert(axiom);
}

bool Context::has_axiom(const Judgement &j) const { return index_.contains(j); }

// -- derive -------------------------------------------------------------------

namespace {

std::optional<Derivation> search(const Context &ctx, const Judgement &goal,
                                 bool allow_dualize) {
    if (ctx.has_axiom(goal)) {
        return Derivation{goal, Rule::AxiomUse, {}};
    }
    const Formula &f = goal.formula;
    const bool conj = goal.polarity == Polarity::Assertion && f.kind() == Formula::Kind::Conj;
    const bool disj = goal.polarity == Polarity::Falsity && f.kind() == Formula::Kind::Disj;
    if (conj || disj) {
        auto [lhs, rhs] = unfold(goal);
        if (auto left = search(ctx, lhs, true)) {
            if (auto right = search(ctx, rhs, true)) {
                return Derivation{goal, conj ? Rule::ReflectConj : Rule::ReflectDisj,
                                  {std::move(*left), std::move(*right)}};
            }
        }
    }
    if (allow_dualize) {
        if (auto premise = search(ctx, dual_judgement(goal), false)) {
            return Derivation{goal, Rule::Dualize, {std::move(*premise)}};
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Derivation> derive(const Context &ctx, const Judgement &goal) {
    return search(ctx, goal, true);
}

bool check_derivation(const Context &ctx, const Derivation &d) {
    for (const Derivation &p : d.premises) {
        if (!check_derivation(ctx, p)) {
            return false;
        }
    }
    switch (d.rule) {
    case Rule::AxiomUse:
        return d.premises.empty() && ctx.has_axiom(d.conclusion);
    case Rule::ReflectConj:
    case Rule::ReflectDisj: {
        if (d.premises.size() != 2) {
            return false;
        }
        const Judgement &lhs = d.premises[0].conclusion;
        const Judgement &rhs = d.premises[1].conclusion;
        try {
            const Judgement expected = d.rule == Rule::ReflectConj
                                           ? reflect_conjunction(lhs, rhs)
                                           : reflect_disjunction(lhs, rhs);
            return expected == d.conclusion;
        } catch (const PolarityError &) {
            return false;
        }
    }
    case Rule::Dualize:
        return d.premises.size() == 1 &&
               dual_judgement(d.premises[0].conclusion) == d.conclusion;
    }
    return false;
}

std::string render_derivation(const Derivation &d, Notation notation, std::size_t indent) {
    std::string out(indent, ' ');
    out += to_string(d.conclusion, notation);
    out += "  [";
    out += to_string(d.rule);
    out += "]\n";
    for (const Derivation &p : d.premises) {
        out += render_derivation(p, notation, indent + 2);
    }
    return out;
}

} // namespace qlogic::logic
