#include "defeasance/formula.hpp"

#include <cctype>
#include <sstream>

namespace defeasance {

struct Formula::Node {
    Conn kind;
    std::string repr;   // canonical printed form, computed at construction
    std::string atom;   // Var only
    std::shared_ptr<const Node> a, b;
};

namespace {

// Parenthesize a child when its connective binds less tightly than the
// parent, or equally on the right of a left-associative operator.
std::string child_repr(const Formula& f, Conn parent, bool right_operand) {
    Conn k = f.kind();
    bool parens = false;
    switch (parent) {
        case Conn::WeakNeg:
        case Conn::ClassNeg:
            parens = (k == Conn::And || k == Conn::Or);
            break;
        case Conn::And:
            parens = (k == Conn::Or) || (right_operand && k == Conn::And);
            break;
        case Conn::Or:
            parens = right_operand && k == Conn::Or;
            break;
        default:
            break;
    }
    if (parens) return "(" + f.str() + ")";
    return f.str();
}

bool valid_atom_name(const std::string& s) {
    if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

Formula Formula::var(const std::string& name) {
    if (!valid_atom_name(name)) throw Error("invalid atom name: '" + name + "'");
    auto n = std::make_shared<Node>();
    n->kind = Conn::Var;
    n->atom = name;
    n->repr = name;
    return Formula(std::move(n));
}

Formula Formula::weak_neg(Formula a) {
    auto n = std::make_shared<Node>();
    n->kind = Conn::WeakNeg;
    n->repr = "~" + child_repr(a, Conn::WeakNeg, false);
    n->a = std::move(a.node_);
    return Formula(std::move(n));
}

Formula Formula::class_neg(Formula a) {
    auto n = std::make_shared<Node>();
    n->kind = Conn::ClassNeg;
    n->repr = "-" + child_repr(a, Conn::ClassNeg, false);
    n->a = std::move(a.node_);
    return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) {
    auto n = std::make_shared<Node>();
    n->kind = Conn::And;
    n->repr = child_repr(a, Conn::And, false) + " & " + child_repr(b, Conn::And, true);
    n->a = std::move(a.node_);
    n->b = std::move(b.node_);
    return Formula(std::move(n));
}

Formula Formula::disj(Formula a, Formula b) {
    auto n = std::make_shared<Node>();
    n->kind = Conn::Or;
    n->repr = child_repr(a, Conn::Or, false) + " | " + child_repr(b, Conn::Or, true);
    n->a = std::move(a.node_);
    n->b = std::move(b.node_);
    return Formula(std::move(n));
}

Conn Formula::kind() const { return node_->kind; }
const std::string& Formula::atom_name() const { return node_->atom; }

Formula Formula::child() const { return Formula(node_->a); }
Formula Formula::left() const { return Formula(node_->a); }
Formula Formula::right() const { return Formula(node_->b); }

const std::string& Formula::str() const {
    static const std::string kNull = "<null>";
    return node_ ? node_->repr : kNull;
}

bool Formula::contains_weak_neg() const {
    switch (kind()) {
        case Conn::Var: return false;
        case Conn::WeakNeg: return true;
        case Conn::ClassNeg: return child().contains_weak_neg();
        case Conn::And:
        case Conn::Or: return left().contains_weak_neg() || right().contains_weak_neg();
    }
    return false;
}

void Formula::collect_atoms(std::set<std::string>& out) const {
    switch (kind()) {
        case Conn::Var: out.insert(atom_name()); break;
        case Conn::WeakNeg:
        case Conn::ClassNeg: child().collect_atoms(out); break;
        case Conn::And:
        case Conn::Or:
            left().collect_atoms(out);
            right().collect_atoms(out);
            break;
    }
}

std::set<std::string> Formula::atoms() const {
    std::set<std::string> out;
    collect_atoms(out);
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Formula parse() {
        Formula f = parse_or();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected input '" + std::string(1, text_[pos_]) + "'", pos_);
        return f;
    }

private:
    Formula parse_or() {
        Formula f = parse_and();
        while (peek('|')) {
            ++pos_;
            f = Formula::disj(f, parse_and());
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (peek('&')) {
            ++pos_;
            f = Formula::conj(f, parse_unary());
        }
        return f;
    }

    Formula parse_unary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("expected formula", pos_);
        char c = text_[pos_];
        if (c == '~') {
            ++pos_;
            return Formula::weak_neg(parse_unary());
        }
        if (c == '-') {
            ++pos_;
            return Formula::class_neg(parse_unary());
        }
        if (c == '(') {
            ++pos_;
            Formula f = parse_or();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return f;
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return Formula::var(text_.substr(start, pos_ - start));
        }
        throw ParseError("expected formula", pos_);
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

Formula big_or(const std::vector<Formula>& disjuncts) {
    if (disjuncts.empty()) throw Error("big_or over empty set");
    Formula f = disjuncts.front();
    for (std::size_t i = 1; i < disjuncts.size(); ++i) f = Formula::disj(f, disjuncts[i]);
    return f;
}

Formula or_with(const Formula& goal, const std::vector<Formula>& rest) {
    Formula f = goal;
    for (const Formula& g : rest) f = Formula::disj(f, g);
    return f;
}

Formula strip_double_neg(const Formula& f) {
    switch (f.kind()) {
        case Conn::Var: return f;
        case Conn::ClassNeg: {
            const Formula& c = f.child();
            if (c.kind() == Conn::ClassNeg) return strip_double_neg(c.child());
            return Formula::class_neg(strip_double_neg(c));
        }
        case Conn::WeakNeg: return Formula::weak_neg(strip_double_neg(f.child()));
        case Conn::And: return Formula::conj(strip_double_neg(f.left()), strip_double_neg(f.right()));
        case Conn::Or: return Formula::disj(strip_double_neg(f.left()), strip_double_neg(f.right()));
    }
    return f;
}

void collect_subformulas(const Formula& f, FormulaSet& out) {
    if (!out.insert(f).second) return;
    switch (f.kind()) {
        case Conn::Var: break;
        case Conn::WeakNeg:
        case Conn::ClassNeg: collect_subformulas(f.child(), out); break;
        case Conn::And:
        case Conn::Or:
            collect_subformulas(f.left(), out);
            collect_subformulas(f.right(), out);
            break;
    }
}

std::string set_str(const FormulaSet& set) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const Formula& f : set) {
        if (!first) os << ", ";
        os << f.str();
        first = false;
    }
    os << "}";
    return os.str();
}

std::string family_str(const SetFamily& family) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const FormulaSet& s : family) {
        if (!first) os << ", ";
        os << set_str(s);
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace defeasance
