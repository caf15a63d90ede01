#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "defeasance/logic.hpp"

namespace defeasance {

enum class Semantics { Naive, Preferred, Stable };
enum class Mode { Cup, Cap, Dcap };

std::string semantics_str(Semantics s);
std::string mode_str(Mode m);
std::optional<Semantics> parse_semantics(const std::string& s);  // "niv" | "prf" | "stb"
std::optional<Mode> parse_mode(const std::string& s);            // "cup" | "cap" | "dcap"

// An inference rule A1, ..., An -> A; empty antecedents make an axiom rule.
struct Rule {
    std::vector<Formula> antecedents;
    Formula consequent;
    std::string str() const;
};

// Either a finite rule list or the oracle-backed rule universe
// { A1,...,An -> A | {A1,...,An} |-_L A } of a core logic.
class RuleSystem {
public:
    static RuleSystem extensional(std::vector<Rule> rules);
    static RuleSystem intensional(CoreLogic logic);

    bool is_intensional() const { return oracle_.has_value(); }
    const CoreLogic& oracle() const;
    const std::vector<Rule>& rules() const;

    // goal lies in the least forward-chain closure of base under the rules;
    // for the intensional system this is the oracle's entailment.
    bool derives(const FormulaSet& base, const Formula& goal, EntailCache* cache = nullptr) const;

    // Least fixed point of rule application; rejected for intensional rule
    // sets, whose closure is infinite (query per goal instead).
    FormulaSet closure(const FormulaSet& base) const;

private:
    std::optional<std::vector<Rule>> rules_;
    std::optional<CoreLogic> oracle_;
};

// Assumption-based framework: rules, theory, nonempty assumption set and a
// contrary mapping that is total on the assumptions.
struct Abf {
    RuleSystem rules;
    FormulaSet gamma;
    std::vector<Formula> assumptions;   // sorted, unique
    std::map<Formula, Formula> contrary;

    void validate() const;
    EntailCache make_cache() const;  // keyed to the oracle logic, or a dummy
};

bool set_attacks(const Abf& abf, const FormulaSet& attacker, const Formula& target,
                 EntailCache* cache = nullptr);
bool set_attacks(const Abf& abf, const FormulaSet& attacker, const FormulaSet& target,
                 EntailCache* cache = nullptr);

// All extensions under the chosen semantics, canonically ordered. Computed by
// a full subset scan with the closed / conflict-free / admissible flags of
// the assumption-level definitions.
std::vector<FormulaSet> aba_extensions(const Abf& abf, Semantics sem,
                                       EntailCache* cache = nullptr);

// cup: some extension derives the goal (with gamma); cap: all extensions do;
// dcap: gamma plus the intersection of all extensions derives it. With no
// extensions, cap holds vacuously and dcap intersects over Ab itself.
bool aba_consequence(const Abf& abf, Semantics sem, Mode mode, const Formula& goal,
                     EntailCache* cache = nullptr, FormulaSet* witness = nullptr);

// (EX): every naive set derives the contrary of every excluded assumption.
bool satisfies_ex(const Abf& abf, EntailCache* cache = nullptr);

// Normal framework: every naive set is stable.
bool is_normal(const Abf& abf, EntailCache* cache = nullptr);

}  // namespace defeasance
