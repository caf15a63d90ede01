#pragma once

#include <optional>
#include <string>
#include <vector>

#include "defeasance/aba.hpp"
#include "defeasance/adaptive.hpp"
#include "defeasance/aspic.hpp"

namespace defeasance {

// Symbol bookkeeping emitted alongside a translated object.
struct TranslationReport {
    std::string direction;
    std::vector<std::pair<std::string, std::string>> name_table;         // rule -> fresh name / contrary
    std::vector<std::pair<std::string, std::string>> abnormality_table;  // source -> target sentence
    std::vector<std::string> notes;
    std::string str() const;
};

// Adaptive theory to assumption-based framework: oracle-backed rule universe
// of the core logic, assumptions are negated abnormalities, the contrary of
// -A is A. Rejects an empty abnormality set.
Abf al_to_aba(const AdaptiveTheory& theory, TranslationReport* report = nullptr);

// ASPIC+ theory to assumption-based framework: fresh names n__k / nc__k per
// defeasible rule, rules n(r),A1,...,An -> A and contrary(A) -> nc(r),
// assumptions K_a plus the rule names. Sentences whose contrariness set is
// not a singleton get a fresh contrary token with bridging rules.
Abf aspic_to_aba(const ArgumentationSystem& as, const KnowledgeBase& kb,
                 TranslationReport* report = nullptr);

// Token assumption-based framework to an adaptive theory over the 3-valued
// logic: premises are the theory plus one clause ~A1 | ... | ~An | B per
// rule, abnormalities are ~A per assumption, the framework's contrariness
// becomes the logic's atom pairing. Rejects non-atomic sentences and
// compound contraries (the translatable fragment).
AdaptiveTheory aba_to_al(const Abf& abf, TranslationReport* report = nullptr);

struct AspicTheory {
    ArgumentationSystem as;
    KnowledgeBase kb;
};

// Composition through the assumption-based framework, with the oracle-backed
// rule universe materialized as finite strict rules over the subformula
// closure of gamma, omega, the assumptions and the query (up to three
// antecedents). Adequate at enumeration scale; checked differentially.
AspicTheory al_to_aspic(const AdaptiveTheory& theory,
                        const std::optional<Formula>& query = std::nullopt,
                        TranslationReport* report = nullptr);

}  // namespace defeasance
