#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace defeasance {

// Base error type for all domain-level failures (signature violations,
// fragment restrictions, malformed inputs).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax error with a byte offset into the offending text.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

enum class Conn : unsigned char { Var, WeakNeg, ClassNeg, And, Or };

// Immutable propositional formula over named atoms.
// Connectives: ~ (weak negation), - (classical negation, printed -), &, |.
// Structural equality; ordering follows the canonical printed form.
class Formula {
public:
    Formula() = default;  // null handle; only valid as a container placeholder

    static Formula var(const std::string& name);
    static Formula weak_neg(Formula a);
    static Formula class_neg(Formula a);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);

    Conn kind() const;
    const std::string& atom_name() const;  // Var only
    Formula child() const;                 // unary connectives
    Formula left() const;                  // binary connectives
    Formula right() const;

    // Canonical rendering: minimal parentheses under precedence ~,- > & > |
    // with left associativity. Injective on formulas.
    const std::string& str() const;

    bool is_var() const { return kind() == Conn::Var; }
    bool null() const { return node_ == nullptr; }
    bool contains_weak_neg() const;
    void collect_atoms(std::set<std::string>& out) const;
    std::set<std::string> atoms() const;

    friend bool operator==(const Formula& a, const Formula& b) {
        return a.str() == b.str();
    }
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
    friend bool operator<(const Formula& a, const Formula& b) {
        return a.str() < b.str();
    }

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

using FormulaSet = std::set<Formula>;
using SetFamily = std::set<FormulaSet>;

// Grammar (UTF-8): atoms [a-z][a-zA-Z0-9_]*, '~' weak negation, '-' classical
// negation, '&', '|', parentheses. Throws ParseError on malformed input.
Formula parse_formula(const std::string& text);

// Disjunction of the given formulas, folded left to right. Requires nonempty.
Formula big_or(const std::vector<Formula>& disjuncts);

// goal | f1 | f2 | ... (just goal when rest is empty).
Formula or_with(const Formula& goal, const std::vector<Formula>& rest);

// Recursively removes stacked classical double negations: --A becomes A.
Formula strip_double_neg(const Formula& f);

// All subformulas of f, including f itself.
void collect_subformulas(const Formula& f, FormulaSet& out);

std::string set_str(const FormulaSet& set);          // "{a, b & c}"
std::string family_str(const SetFamily& family);     // "{{a}, {b}}"

}  // namespace defeasance
