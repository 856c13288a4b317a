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
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

/**
 * @file logic.hpp
 * Formulas in negation-normal form over atoms and their duals, closed under
 * the additive connectives `&` and `(+)`, together with assertion (`|- F`)
 * and falsity (`F |-`) judgements.
 *
 * Surface syntax (ASCII first, Unicode aliases accepted on input):
 *   dual       A^        A⊥
 *   and        A & B
 *   or         A (+) B   A ⊕ B
 *   judgement  |- F      F |-      (⊢ F, F ⊢)
 *
 * `&` and `(+)` share one precedence level and associate to the left; mixing
 * them without parentheses is rejected as ambiguous. Formulas compare
 * structurally, so `A & B` and `B & A` are different formulas.
 */
namespace qlogic::logic {

enum class Notation { Ascii, Unicode };

class Formula {
  public:
    enum class Kind { Atom, DualAtom, Conj, Disj };

    static Formula atom(std::string name);
    static Formula dual_atom(std::string name);
    static Formula conj(Formula left, Formula right);
    static Formula disj(Formula left, Formula right);

    [[nodiscard]] Kind kind() const noexcept;
    [[nodiscard]] bool is_literal() const noexcept {
        return kind() == Kind::Atom || kind() == Kind::DualAtom;
    }
    /// Atom name of a literal; empty for connectives.
    [[nodiscard]] const std::string &name() const noexcept;
    /// Operands of a connective. Precondition: !is_literal().
    [[nodiscard]] Formula left() const;
    [[nodiscard]] Formula right() const;
    /// Number of nodes.
    [[nodiscard]] std::size_t size() const noexcept;

    friend bool operator==(const Formula &lhs, const Formula &rhs) noexcept;
    /// Total order used for sets of judgements; not meaningful logically.
    friend bool operator<(const Formula &lhs, const Formula &rhs) noexcept;

  private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) noexcept : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

[[nodiscard]] std::string to_string(const Formula &f, Notation notation = Notation::Ascii);

/// Parses the grammar above, pushing duals down to atoms (A^^ = A,
/// (A & B)^ = A^ (+) B^). Throws SyntaxError, or AmbiguityError for mixed
/// connectives without parentheses.
[[nodiscard]] Formula parse_formula(std::string_view text);

/// Literal duality swaps A and A^; connective duality swaps & with (+) and
/// keeps operand order: dual(x & y) = dual(x) (+) dual(y), so
/// dual(A & A^) = A^ (+) A. Involution.
[[nodiscard]] Formula dual_formula(const Formula &f);

/// Distinct atom names occurring in f.
[[nodiscard]] std::set<std::string> atoms(const Formula &f);

// -- Judgements ---------------------------------------------------------------

enum class Polarity { Assertion, Falsity };

struct Judgement {
    Polarity polarity;
    Formula formula;

    static Judgement assertion(Formula f) { return {Polarity::Assertion, std::move(f)}; }
    static Judgement falsity(Formula f) { return {Polarity::Falsity, std::move(f)}; }

    friend bool operator==(const Judgement &lhs, const Judgement &rhs) noexcept {
        return lhs.polarity == rhs.polarity && lhs.formula == rhs.formula;
    }
    friend bool operator<(const Judgement &lhs, const Judgement &rhs) noexcept {
        if (lhs.polarity != rhs.polarity) {
            return lhs.polarity < rhs.polarity;
        }
        return lhs.formula < rhs.formula;
    }
};

/// "|- F" or "F |-" (Unicode: "⊢ F", "F ⊢").
[[nodiscard]] std::string to_string(const Judgement &j, Notation notation = Notation::Ascii);
[[nodiscard]] Judgement parse_judgement(std::string_view text);

/// Flips polarity and dualizes the formula: (|- A)^ = A^ |-. Involution.
[[nodiscard]] Judgement dual_judgement(const Judgement &j);

/// (|- F, |- G) -> |- F & G. Throws PolarityError unless both are assertions.
[[nodiscard]] Judgement reflect_conjunction(const Judgement &lhs, const Judgement &rhs);
/// (F |-, G |-) -> F (+) G |-. Throws PolarityError unless both are falsities.
[[nodiscard]] Judgement reflect_disjunction(const Judgement &lhs, const Judgement &rhs);
/// Inverse of the two reflections. Throws PolarityError for a judgement that
/// is not |- F & G or F (+) G |-.
[[nodiscard]] std::pair<Judgement, Judgement> unfold(const Judgement &j);

// -- Contexts and derivations ---------------------------------------------------

enum class Observer { Outside, Inside };

[[nodiscard]] std::string_view to_string(Observer observer) noexcept;

/// Axioms available to one observer.
///
/// An Outside context only accepts literal judgements, and never both |- A
/// and |- A^ for the same atom (falsities count through their dual, so A |-
/// stands for |- A^). Inside contexts accept any judgement.
class Context {
  public:
    explicit Context(Observer observer) noexcept : observer_(observer) {}

    /// Throws ContextError when the axiom breaks the Outside restrictions.
    /// Adding an axiom already present is a no-op.
    void add_axiom(const Judgement &axiom);

    [[nodiscard]] bool has_axiom(const Judgement &j) const;
    [[nodiscard]] Observer observer() const noexcept { return observer_; }
    [[nodiscard]] const std::vector<Judgement> &axioms() const noexcept { return axioms_; }

  private:
    Observer observer_;
    std::vector<Judgement> axioms_;
    std::set<Judgement> index_;
};

enum class Rule { AxiomUse, ReflectConj, ReflectDisj, Dualize };

[[nodiscard]] std::string_view to_string(Rule rule) noexcept;

struct Derivation {
    Judgement conclusion;
    Rule rule;
    std::vector<Derivation> premises;

    friend bool operator==(const Derivation &, const Derivation &) = default;
};

/// Bottom-up proof search with exactly four rules:
///   AxiomUse     goal is an axiom of ctx
///   ReflectConj  |- F & G  from |- F and |- G
///   ReflectDisj  F (+) G |- from F |- and G |-
///   Dualize      goal from a derivation of dual_judgement(goal) whose last
///                step is not itself Dualize
/// There is no weakening, cut or ex falso, so a contradictory Inside context
/// does not derive unrelated judgements. Returns nullopt when not derivable.
[[nodiscard]] std::optional<Derivation> derive(const Context &ctx, const Judgement &goal);

/// True when every leaf is an axiom of ctx and each inner node follows from
/// its premises by its rule.
[[nodiscard]] bool check_derivation(const Context &ctx, const Derivation &d);

/// Indented tree, conclusion first:
///   |- A & A^  [reflect-conj]
///     |- A  [axiom]
///     |- A^  [axiom]
[[nodiscard]] std::string render_derivation(const Derivation &d,
                                            Notation notation = Notation::Ascii,
                                            std::size_t indent = 0);

// -- Classical oracle ---------------------------------------------------------

/// Truth assignment: atom name -> value. `&`/`(+)` read as classical and/or,
/// a dual literal as negation. Only the oracle below uses this reading.
using Valuation = std::map<std::string, bool, std::less<>>;

/// Throws ValuationError if an atom of f is unassigned.
[[nodiscard]] bool classical_eval(const Formula &f, const Valuation &v);

enum class ClassicalStatus { ClassicallyValid, ClassicallyUnsatisfiable, Contingent };

[[nodiscard]] std::string_view to_string(ClassicalStatus status) noexcept;

/// Largest atom count check_classical_status will enumerate.
inline constexpr std::size_t kMaxClassicalAtoms = 20;

/// Exhaustive truth-table search. |- F is valid when F is a tautology and
/// unsatisfiable when F is never true; F |- (a refutation of F) is valid when
/// F is never true and unsatisfiable when F is a tautology. Throws
/// ValuationError beyond kMaxClassicalAtoms atoms.
[[nodiscard]] ClassicalStatus check_classical_status(const Judgement &j);

} // namespace qlogic::logic
