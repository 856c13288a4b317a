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
#include <doctest.h>

#include "qlogic/error.hpp"
#include "qlogic/logic.hpp"
#include "support/generators.hpp"

using namespace qlogic;
using namespace qlogic::logic;

namespace {

const Formula A = Formula::atom("A");
const Formula Ad = Formula::dual_atom("A");
const Formula B = Formula::atom("B");
const Formula C = Formula::atom("C");

// Independent dual used as an oracle: operates on printed ASCII text of
// literals and rebuilds the tree bottom-up.
Formula oracle_dual(const Formula &f) {
    switch (f.kind()) {
    case Formula::Kind::Atom:
        return Formula::dual_atom(f.name());
    case Formula::Kind::DualAtom:
        return Formula::atom(f.name());
    case Formula::Kind::Conj:
        return Formula::disj(oracle_dual(f.left()), oracle_dual(f.right()));
    case Formula::Kind::Disj:
        return Formula::conj(oracle_dual(f.left()), oracle_dual(f.right()));
    }
    return f;
}

std::size_t syntax_position(std::string_view text) {
    try {
        (void)parse_formula(text);
    } catch (const SyntaxError &e) {
        return e.position();
    }
    FAIL("expected a syntax error for '" << text << "'");
    return 0;
}

} // namespace

TEST_SUITE("parse_formula") {
    TEST_CASE("A & A^ is a conjunction of A and its dual") {
        CHECK(parse_formula("A & A^") == Formula::conj(A, Ad));
    }

    TEST_CASE("A^ (+) A is a disjunction of the dual and A") {
        CHECK(parse_formula("A^ (+) A") == Formula::disj(Ad, A));
    }

    TEST_CASE("double dual cancels") {
        CHECK(parse_formula("A^^") == A);
        CHECK(parse_formula("A^^^") == Ad);
    }

    TEST_CASE("Unicode aliases") {
        CHECK(parse_formula("A⊥ ⊕ A") == Formula::disj(Ad, A));
        CHECK(parse_formula("A & A⊥") == Formula::conj(A, Ad));
        CHECK(parse_formula("A⊥⊥") == A);
    }

    TEST_CASE("duals are pushed down to atoms") {
        CHECK(parse_formula("(A & B)^") == Formula::disj(Ad, Formula::dual_atom("B")));
        CHECK(parse_formula("(A (+) B^)^") == Formula::conj(Ad, B));
    }

    TEST_CASE("same connective associates to the left") {
        CHECK(parse_formula("A & B & C") == Formula::conj(Formula::conj(A, B), C));
        CHECK(parse_formula("A & (B & C)") == Formula::conj(A, Formula::conj(B, C)));
    }

    TEST_CASE("parenthesized mixtures are accepted") {
        CHECK(parse_formula("(A & B) (+) C") == Formula::disj(Formula::conj(A, B), C));
        CHECK(parse_formula("A & (B (+) C)") == Formula::conj(A, Formula::disj(B, C)));
    }

    TEST_CASE("mixing connectives without parentheses is ambiguous") {
        CHECK_THROWS_AS((void)parse_formula("A & B (+) C"), AmbiguityError);
        CHECK_THROWS_AS((void)parse_formula("A ⊕ B & C"), AmbiguityError);
        try {
            (void)parse_formula("A & B (+) C");
        } catch (const AmbiguityError &e) {
            CHECK(e.position() == 6);
        }
    }

    TEST_CASE("syntax errors carry positions") {
        CHECK(syntax_position("") == 0);
        CHECK(syntax_position("A &") == 3);
        CHECK(syntax_position("(A & B") == 6);
        CHECK(syntax_position("A B") == 2);
        CHECK(syntax_position("A $ B") == 2);
        CHECK(syntax_position("A & )") == 4);
        CHECK(syntax_position("^A") == 0);
    }
}

TEST_SUITE("printing") {
    TEST_CASE("ASCII and Unicode renderings") {
        const Formula f = Formula::conj(A, Ad);
        CHECK(to_string(f) == "A & A^");
        CHECK(to_string(f, Notation::Unicode) == "A & A⊥");
        CHECK(to_string(Formula::disj(Ad, A)) == "A^ (+) A");
        CHECK(to_string(Formula::disj(Ad, A), Notation::Unicode) == "A⊥ ⊕ A");
        CHECK(to_string(Formula::conj(A, Formula::conj(B, C))) == "A & (B & C)");
        CHECK(to_string(Formula::conj(Formula::conj(A, B), C)) == "A & B & C");
        CHECK(to_string(Formula::disj(Formula::conj(A, B), C)) == "(A & B) (+) C");
    }

    TEST_CASE("parse after print is the identity on random formulas") {
        testing::Gen g(31);
        for (int i = 0; i < 1000; ++i) {
            const Formula f = testing::formula(g, 5);
            CHECK(parse_formula(to_string(f)) == f);
            CHECK(parse_formula(to_string(f, Notation::Unicode)) == f);
        }
    }

    TEST_CASE("judgement rendering and parsing") {
        const Judgement j1 = Judgement::assertion(Formula::conj(A, Ad));
        const Judgement j2 = Judgement::falsity(Formula::disj(Ad, A));
        CHECK(to_string(j1) == "|- A & A^");
        CHECK(to_string(j2) == "A^ (+) A |-");
        CHECK(to_string(j1, Notation::Unicode) == "⊢ A & A⊥");
        CHECK(to_string(j2, Notation::Unicode) == "A⊥ ⊕ A ⊢");
        CHECK(parse_judgement("|- A & A^") == j1);
        CHECK(parse_judgement("A⊥ ⊕ A ⊢") == j2);
        CHECK(parse_judgement("  ⊢A  ") == Judgement::assertion(A));
        CHECK_THROWS_AS((void)parse_judgement("A & B"), SyntaxError);
        CHECK_THROWS_AS((void)parse_judgement("|-"), SyntaxError);
    }

    TEST_CASE("judgement round trip on random judgements") {
        testing::Gen g(32);
        for (int i = 0; i < 500; ++i) {
            const Judgement j = testing::judgement(g, 4);
            CHECK(parse_judgement(to_string(j)) == j);
            CHECK(parse_judgement(to_string(j, Notation::Unicode)) == j);
        }
    }
}

TEST_SUITE("duality") {
    TEST_CASE("examples") {
        CHECK(dual_formula(A) == Ad);
        CHECK(dual_formula(Ad) == A);
        CHECK(dual_formula(Formula::conj(A, Ad)) == Formula::disj(Ad, A));
        CHECK(to_string(dual_formula(Formula::conj(A, Ad)), Notation::Unicode) == "A⊥ ⊕ A");
    }

    TEST_CASE("dual_formula matches the oracle and is an involution") {
        testing::Gen g(33);
        for (int i = 0; i < 1000; ++i) {
            const Formula f = testing::formula(g, 6);
            CHECK(dual_formula(f) == oracle_dual(f));
            CHECK(dual_formula(dual_formula(f)) == f);
            CHECK(dual_formula(f).size() == f.size());
            CHECK(atoms(dual_formula(f)) == atoms(f));
        }
    }

    TEST_CASE("dual_judgement examples") {
        CHECK(dual_judgement(Judgement::assertion(A)) == Judgement::falsity(Ad));
        CHECK(dual_judgement(Judgement::assertion(Ad)) == Judgement::falsity(A));
        CHECK(to_string(dual_judgement(Judgement::assertion(Formula::conj(A, Ad))),
                        Notation::Unicode) == "A⊥ ⊕ A ⊢");
    }

    TEST_CASE("dual_judgement is an involution that flips polarity") {
        testing::Gen g(34);
        for (int i = 0; i < 1000; ++i) {
            const Judgement j = testing::judgement(g, 5);
            const Judgement d = dual_judgement(j);
            CHECK(d.polarity != j.polarity);
            CHECK(dual_judgement(d) == j);
        }
    }

    TEST_CASE("duality commutes with reflection") {
        testing::Gen g(35);
        for (int i = 0; i < 300; ++i) {
            const Judgement x = Judgement::assertion(testing::formula(g, 3));
            const Judgement y = Judgement::assertion(testing::formula(g, 3));
            CHECK(dual_judgement(reflect_conjunction(x, y)) ==
                  reflect_disjunction(dual_judgement(x), dual_judgement(y)));
        }
    }
}

TEST_SUITE("reflection") {
    TEST_CASE("conjunction examples") {
        CHECK(reflect_conjunction(Judgement::assertion(A), Judgement::assertion(Ad)) ==
              Judgement::assertion(Formula::conj(A, Ad)));
        CHECK(reflect_conjunction(Judgement::assertion(A), Judgement::assertion(B)) ==
              Judgement::assertion(Formula::conj(A, B)));
        CHECK_THROWS_AS(
            (void)reflect_conjunction(Judgement::falsity(A), Judgement::assertion(B)),
            PolarityError);
    }

    TEST_CASE("disjunction examples") {
        CHECK(reflect_disjunction(Judgement::falsity(Ad), Judgement::falsity(A)) ==
              Judgement::falsity(Formula::disj(Ad, A)));
        CHECK(reflect_disjunction(Judgement::falsity(B), Judgement::falsity(C)) ==
              Judgement::falsity(Formula::disj(B, C)));
        CHECK_THROWS_AS(
            (void)reflect_disjunction(Judgement::assertion(A), Judgement::falsity(A)),
            PolarityError);
    }

    TEST_CASE("unfold inverts reflection in order") {
        testing::Gen g(36);
        for (int i = 0; i < 500; ++i) {
            const Formula f = testing::formula(g, 3);
            const Formula h = testing::formula(g, 3);
            const auto [x, y] = unfold(reflect_conjunction(Judgement::assertion(f),
                                                           Judgement::assertion(h)));
            CHECK(x == Judgement::assertion(f));
            CHECK(y == Judgement::assertion(h));
            const auto [u, v] =
                unfold(reflect_disjunction(Judgement::falsity(f), Judgement::falsity(h)));
            CHECK(u == Judgement::falsity(f));
            CHECK(v == Judgement::falsity(h));
        }
    }

    TEST_CASE("unfold rejects judgements that are not reflections") {
        CHECK_THROWS_AS((void)unfold(Judgement::assertion(A)), PolarityError);
        CHECK_THROWS_AS((void)unfold(Judgement::falsity(Formula::conj(A, B))), PolarityError);
        CHECK_THROWS_AS((void)unfold(Judgement::assertion(Formula::disj(A, B))), PolarityError);
    }
}

TEST_SUITE("classical oracle") {
    TEST_CASE("evaluation examples") {
        for (bool a : {false, true}) {
            const Valuation v{{"A", a}};
            CHECK_FALSE(classical_eval(Formula::conj(A, Ad), v));
            CHECK(classical_eval(Formula::disj(Ad, A), v));
        }
        CHECK(classical_eval(Formula::conj(A, B), {{"A", true}, {"B", true}}));
        CHECK_FALSE(classical_eval(Formula::conj(A, B), {{"A", true}, {"B", false}}));
        CHECK_THROWS_AS((void)classical_eval(Formula::conj(A, B), {{"A", true}}),
                        ValuationError);
    }

    TEST_CASE("status examples") {
        CHECK(check_classical_status(Judgement::assertion(Formula::conj(A, Ad))) ==
              ClassicalStatus::ClassicallyUnsatisfiable);
        CHECK(check_classical_status(Judgement::falsity(Formula::disj(Ad, A))) ==
              ClassicalStatus::ClassicallyUnsatisfiable);
        CHECK(check_classical_status(Judgement::assertion(A)) == ClassicalStatus::Contingent);
        CHECK(check_classical_status(Judgement::assertion(Ad)) == ClassicalStatus::Contingent);
        CHECK(check_classical_status(Judgement::assertion(Formula::disj(Ad, A))) ==
              ClassicalStatus::ClassicallyValid);
        CHECK(check_classical_status(Judgement::falsity(Formula::conj(A, Ad))) ==
              ClassicalStatus::ClassicallyValid);
        CHECK(to_string(ClassicalStatus::ClassicallyUnsatisfiable) ==
              "classically-unsatisfiable");
    }

    TEST_CASE("status agrees with a brute-force count and flips under duality") {
        testing::Gen g(37);
        for (int i = 0; i < 300; ++i) {
            const Judgement j = testing::judgement(g, 4);
            const auto names = atoms(j.formula);
            const std::vector<std::string> list(names.begin(), names.end());
            std::size_t truths = 0;
            const std::size_t rows = std::size_t{1} << list.size();
            for (std::size_t mask = 0; mask < rows; ++mask) {
                Valuation v;
                for (std::size_t k = 0; k < list.size(); ++k) {
                    v[list[k]] = ((mask >> k) & 1U) != 0;
                }
                truths += classical_eval(j.formula, v) ? 1 : 0;
            }
            // A falsity judgement holds where its formula is false.
            const std::size_t holds = j.polarity == Polarity::Assertion ? truths : rows - truths;
            const ClassicalStatus expected = holds == rows ? ClassicalStatus::ClassicallyValid
                                             : holds == 0  ? ClassicalStatus::ClassicallyUnsatisfiable
                                                           : ClassicalStatus::Contingent;
            CHECK(check_classical_status(j) == expected);
            CHECK(check_classical_status(dual_judgement(j)) == expected);
        }
    }

    TEST_CASE("too many atoms is rejected") {
        Formula f = Formula::atom("X0");
        for (std::size_t k = 1; k <= kMaxClassicalAtoms; ++k) {
            f = Formula::conj(f, Formula::atom("X" + std::to_string(k)));
        }
        CHECK_THROWS_AS((void)check_classical_status(Judgement::assertion(f)), ValuationError);
    }
}
