#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "defeasance/aba.hpp"
#include "defeasance/logic.hpp"

namespace defeasance {

// A strict or defeasible rule with its name sentence. Names are injective
// across a theory; the display label doubles as the name atom when it was
// given by the user.
struct NamedRule {
    std::vector<Formula> antecedents;
    Formula consequent;
    bool defeasible = false;
    Formula name;        // sentence naming the rule
    std::string label;   // display id, e.g. "r1"
    std::string str() const;  // "r1: -p => s" / "-q -> -p"
};

struct DefeasibleTheory {
    std::vector<NamedRule> rules;
    void validate() const;  // name injectivity
    std::vector<const NamedRule*> strict() const;
    std::vector<const NamedRule*> defeasible() const;
};

// Contrariness function into the powerset of the language. Classical mode
// approximates "everything equivalent to -A" by double-negation stripping.
struct ContraryMap {
    bool classical = false;
    std::map<Formula, std::vector<Formula>> entries;

    std::vector<Formula> of(const Formula& a) const;
    bool matches(const Formula& a, const Formula& candidate) const;  // candidate in contrary(a)
};

struct ArgumentationSystem {
    DefeasibleTheory theory;
    ContraryMap contrary;
};

struct KnowledgeBase {
    std::vector<Formula> axioms;     // K_n
    std::vector<Formula> plausible;  // K_a
    void validate() const;           // disjointness
    bool is_plausible(const Formula& f) const;
};

// Tree-shaped argument, stored as an index node inside an ArgumentSet.
struct Argument {
    enum class Kind { Premise, Strict, Defeasible };
    Kind kind = Kind::Premise;
    Formula conclusion;
    int rule = -1;               // index into theory.rules for rule arguments
    std::vector<int> children;   // indices of immediate subarguments
    std::vector<int> sub;        // all subargument indices including self
    FormulaSet premises;         // leaf premises
    FormulaSet path_conclusions; // every conclusion in the subtree (cycle guard)
};

struct ArgumentSet {
    std::vector<Argument> args;
    std::string name(int i) const { return "a" + std::to_string(i + 1); }
    std::string describe(int i, const DefeasibleTheory& theory) const;
};

// All arguments constructible from the knowledge base, subject to the guard
// that no conclusion repeats along a root-to-leaf path. Deterministic order.
ArgumentSet build_arguments(const ArgumentationSystem& as, const KnowledgeBase& kb);

enum class AttackKind { Undermine, Rebut, Undercut };
std::string attack_kind_str(AttackKind k);

struct Attack {
    int from = 0, to = 0;
    AttackKind kind = AttackKind::Undermine;
    friend bool operator<(const Attack& a, const Attack& b) {
        return std::tie(a.from, a.to, a.kind) < std::tie(b.from, b.to, b.kind);
    }
    friend bool operator==(const Attack& a, const Attack& b) {
        return a.from == b.from && a.to == b.to && a.kind == b.kind;
    }
};

// All undermining / rebutting / undercutting attacks between the arguments.
std::vector<Attack> compute_attacks(const ArgumentationSystem& as, const KnowledgeBase& kb,
                                    const ArgumentSet& args);

struct StructuredAf {
    ArgumentSet args;
    std::vector<Attack> attacks;
};

StructuredAf build_af(const ArgumentationSystem& as, const KnowledgeBase& kb);

// Dung semantics over the argument graph by subset enumeration.
std::vector<std::vector<int>> argument_extensions(const StructuredAf& af, Semantics sem);

// cup: some extension holds an argument concluding the goal; cap: every
// extension does; dcap: the intersection of all extensions does. Same
// empty-family conventions as the assumption-level consequence.
bool aspic_consequence(const StructuredAf& af, Semantics sem, Mode mode, const Formula& goal,
                       std::vector<int>* witness = nullptr);

}  // namespace defeasance
