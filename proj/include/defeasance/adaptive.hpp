#pragma once

#include <optional>
#include <string>
#include <vector>

#include "defeasance/logic.hpp"

namespace defeasance {

enum class Strategy { Reliability, MinimalAbnormality, NormalSelections };

std::string strategy_str(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& s);  // "r" | "ma" | "ns"

// A core logic, a premise set and a finite abnormality set.
struct AdaptiveTheory {
    CoreLogic logic;
    std::vector<Formula> gamma;
    std::vector<Formula> omega;

    FormulaSet gamma_set() const { return FormulaSet(gamma.begin(), gamma.end()); }
    FormulaSet omega_set() const { return FormulaSet(omega.begin(), omega.end()); }
};

// {a & ~a | a in atoms}, the usual inconsistency abnormalities.
std::vector<Formula> contradiction_abnormalities(const std::vector<std::string>& atoms);

// Minimal disjunctions of abnormalities: all subset-minimal nonempty D
// within omega with gamma |- \/D.
SetFamily sigma_of(const AdaptiveTheory& theory, EntailCache* cache = nullptr);

// Subset-minimal choice (hitting) sets over the family; {{}} for the empty
// family. Members of the family containing the empty set cannot be hit.
SetFamily phi_of(const SetFamily& sigma);

// Search witnesses for a positive answer, and the failing choice set for a
// negative minimal-abnormality answer.
struct AlWitness {
    // one entry per relevant choice set: (theta, delta) with gamma |- goal \/ \/delta
    std::vector<std::pair<FormulaSet, FormulaSet>> picks;
    std::optional<FormulaSet> failed_theta;  // ma only, on a false verdict
};

// Adaptive consequence via the representation theorems: delta ranges over
// subsets of the stated complement, searched smallest first.
//   r : some delta within omega \ U sigma with gamma |- goal \/ \/delta
//   ma: for every theta in phi such a delta within omega \ theta
//   ns: for some theta in phi such a delta within omega \ theta
bool al_consequence(const AdaptiveTheory& theory, Strategy strategy, const Formula& goal,
                    EntailCache* cache = nullptr, AlWitness* witness = nullptr);

// Independent oracle: enumerates models of gamma, ranks them by their set of
// designated abnormalities, and applies the preferential-semantics clauses
// for the strategy literally.
bool al_consequence_semantic(const AdaptiveTheory& theory, Strategy strategy,
                             const Formula& goal);

// A premise set plus defeasible background assumptions.
struct DefaultTheory {
    CoreLogic logic;
    std::vector<Formula> gamma;
    std::vector<Formula> delta;
};

// All maximal gamma-consistent subsets of delta. Consistency of a set means
// it has a model, equivalently it does not entail everything.
SetFamily mcs_of(const DefaultTheory& theory);

// Skeptical consequence over all maximal gamma-consistent subsets.
bool da_consequence(const DefaultTheory& theory, const Formula& goal,
                    FormulaSet* failing_mcs = nullptr);

}  // namespace defeasance
