#pragma once

#include <optional>
#include <string>
#include <vector>

#include "defeasance/aba.hpp"
#include "defeasance/adaptive.hpp"
#include "defeasance/aspic.hpp"
#include "defeasance/translate.hpp"

namespace defeasance {

// Line-oriented problem description; see the grammar in the README. Formula
// lists are ';'-separated, '#' starts a comment, unknown sections are errors.
struct ProblemFile {
    enum class Kind { Al, Da, Aba, Aspic };

    Kind kind = Kind::Al;
    std::optional<LogicKind> logic;
    std::vector<std::string> atoms;  // explicit signature atoms (optional)
    std::vector<Formula> premises;
    std::vector<Formula> abnormalities;  // contradictions(...) already expanded
    std::vector<Formula> assumptions;
    bool contraries_classical = false;
    std::vector<std::pair<Formula, Formula>> contraries;
    bool rules_classical = false;
    std::vector<Rule> rules;
    std::vector<NamedRule> aspic_rules;  // strict first, then defeasible, file order
    std::vector<Formula> axioms;
    std::vector<Formula> plausible;
    std::optional<Formula> query;
    std::optional<Strategy> strategy;
    std::optional<Semantics> semantics;
    std::optional<Mode> mode;

    std::string kind_str() const;
};

ProblemFile parse_problem(const std::string& text);
std::string print_problem(const ProblemFile& pf);

// Section-to-object conversions; each validates the sections it needs.
AdaptiveTheory to_adaptive(const ProblemFile& pf);
DefaultTheory to_default(const ProblemFile& pf);
Abf to_abf(const ProblemFile& pf);
AspicTheory to_aspic(const ProblemFile& pf);

// Problem files for translated objects (used by the translate command and
// the counterexample printer).
ProblemFile problem_of_adaptive(const AdaptiveTheory& theory);
ProblemFile problem_of_abf(const Abf& abf);
ProblemFile problem_of_aspic(const AspicTheory& theory);
ProblemFile problem_of_default(const DefaultTheory& theory);

}  // namespace defeasance
