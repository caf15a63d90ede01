#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "defeasance/formula.hpp"

namespace defeasance {

enum class LogicKind { Cpl, Lp, L3r };

std::string logic_kind_str(LogicKind k);

// Three truth values. Middle is LP's "b" and L3r's "u"; CPL never uses it.
enum class TruthValue : unsigned char { False = 0, Middle = 1, True = 2 };

bool designated(LogicKind kind, TruthValue v);

// A concrete decidable core logic: a tag, a finite signature, and for L3r a
// partial contrary pairing on atoms (v(second) is the flip of v(first);
// unpaired atoms are unconstrained).
struct CoreLogic {
    LogicKind kind = LogicKind::Cpl;
    std::vector<std::string> signature;                            // sorted, unique
    std::vector<std::pair<std::string, std::string>> contraries;   // L3r only

    static CoreLogic cpl(const std::set<std::string>& atoms);
    static CoreLogic lp(const std::set<std::string>& atoms);
    static CoreLogic l3r(const std::set<std::string>& atoms,
                         const std::vector<std::pair<std::string, std::string>>& contraries);

    // Stable fingerprint used for memo keys and reports.
    std::string cache_key() const;
};

// Total assignment over a logic's signature, in signature order.
struct Valuation {
    std::vector<std::string> atoms;
    std::vector<TruthValue> values;
    TruthValue at(const std::string& atom) const;
    std::string str(LogicKind kind) const;  // e.g. "{p:1, q:0}" / "{p:b}"
};

// True iff every valuation over the signature that designates all premises
// designates the goal; decided by exhaustive valuation enumeration.
// Throws Error on atoms outside the signature or weak negation under CPL.
bool entails(const CoreLogic& logic, const std::vector<Formula>& premises,
             const Formula& goal);
bool entails(const CoreLogic& logic, const FormulaSet& premises, const Formula& goal);

// All valuations designating every premise, in enumeration order (atoms in
// signature order, value order 0 < u/b < 1, first atom most significant).
std::vector<Valuation> models_of(const CoreLogic& logic,
                                 const std::vector<Formula>& premises);

bool has_model(const CoreLogic& logic, const std::vector<Formula>& premises);
bool has_model(const CoreLogic& logic, const FormulaSet& premises);

// Evaluates f under the given valuation and reports designation.
bool valuation_designates(const CoreLogic& logic, const Valuation& v, const Formula& f);

// Memoizing wrapper around entails for one fixed logic. Not thread-safe;
// intended for the tight subset-scan loops.
class EntailCache {
public:
    explicit EntailCache(CoreLogic logic) : logic_(std::move(logic)) {}
    bool entails(const FormulaSet& premises, const Formula& goal);
    const CoreLogic& logic() const { return logic_; }

private:
    CoreLogic logic_;
    std::unordered_map<std::string, bool> memo_;
};

}  // namespace defeasance
