#include "defeasance/aspic.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

#include "bits.hpp"

namespace defeasance {

std::string NamedRule::str() const {
    std::ostringstream os;
    if (!label.empty()) os << label << ": ";
    for (std::size_t i = 0; i < antecedents.size(); ++i) {
        if (i) os << ", ";
        os << antecedents[i].str();
    }
    if (!antecedents.empty()) os << ' ';
    os << (defeasible ? "=> " : "-> ") << consequent.str();
    return os.str();
}

void DefeasibleTheory::validate() const {
    FormulaSet names;
    for (const NamedRule& r : rules) {
        if (r.name.null()) throw Error("rule without a name sentence: " + r.str());
        if (!names.insert(r.name).second)
            throw Error("rule name " + r.name.str() + " is not injective");
    }
}

std::vector<const NamedRule*> DefeasibleTheory::strict() const {
    std::vector<const NamedRule*> out;
    for (const NamedRule& r : rules)
        if (!r.defeasible) out.push_back(&r);
    return out;
}

std::vector<const NamedRule*> DefeasibleTheory::defeasible() const {
    std::vector<const NamedRule*> out;
    for (const NamedRule& r : rules)
        if (r.defeasible) out.push_back(&r);
    return out;
}

std::vector<Formula> ContraryMap::of(const Formula& a) const {
    std::vector<Formula> out;
    if (classical) out.push_back(strip_double_neg(Formula::class_neg(a)));
    auto it = entries.find(a);
    if (it != entries.end())
        for (const Formula& c : it->second)
            if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    return out;
}

bool ContraryMap::matches(const Formula& a, const Formula& candidate) const {
    if (classical &&
        strip_double_neg(candidate) == strip_double_neg(Formula::class_neg(a)))
        return true;
    auto it = entries.find(a);
    if (it == entries.end()) return false;
    return std::find(it->second.begin(), it->second.end(), candidate) != it->second.end();
}

void KnowledgeBase::validate() const {
    FormulaSet ax(axioms.begin(), axioms.end());
    for (const Formula& p : plausible)
        if (ax.count(p))
            throw Error("knowledge base not disjoint: " + p.str() +
                        " is both an axiom and plausible");
}

bool KnowledgeBase::is_plausible(const Formula& f) const {
    return std::find(plausible.begin(), plausible.end(), f) != plausible.end();
}

std::string ArgumentSet::describe(int i, const DefeasibleTheory& theory) const {
    const Argument& a = args[static_cast<std::size_t>(i)];
    std::ostringstream os;
    os << name(i) << " = ";
    switch (a.kind) {
        case Argument::Kind::Premise:
            os << "<" << a.conclusion.str() << ">";
            break;
        case Argument::Kind::Strict:
        case Argument::Kind::Defeasible: {
            os << "<";
            for (std::size_t c = 0; c < a.children.size(); ++c) {
                if (c) os << ", ";
                os << name(a.children[c]);
            }
            if (!a.children.empty()) os << ' ';
            os << (a.kind == Argument::Kind::Strict ? "-> " : "=> ");
            os << a.conclusion.str() << ">";
            if (a.rule >= 0 && !theory.rules[static_cast<std::size_t>(a.rule)].label.empty())
                os << "  [" << theory.rules[static_cast<std::size_t>(a.rule)].label << "]";
            break;
        }
    }
    return os.str();
}

ArgumentSet build_arguments(const ArgumentationSystem& as, const KnowledgeBase& kb) {
    as.theory.validate();
    kb.validate();

    ArgumentSet set;
    std::map<std::string, int> seen;  // structural key -> index

    auto add = [&](Argument a, const std::string& key) -> bool {
        if (seen.count(key)) return false;
        seen[key] = static_cast<int>(set.args.size());
        set.args.push_back(std::move(a));
        return true;
    };

    // premise arguments first, in canonical formula order
    std::vector<Formula> k(kb.axioms.begin(), kb.axioms.end());
    k.insert(k.end(), kb.plausible.begin(), kb.plausible.end());
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    for (const Formula& f : k) {
        Argument a;
        a.kind = Argument::Kind::Premise;
        a.conclusion = f;
        a.premises.insert(f);
        a.path_conclusions.insert(f);
        a.sub = {static_cast<int>(set.args.size())};
        add(std::move(a), "P:" + f.str());
    }

    auto key_of = [&](int rule_index, const std::vector<int>& children) {
        std::string key = "R" + std::to_string(rule_index) + "(";
        for (int c : children) key += std::to_string(c) + ",";
        key += ")";
        return key;
    };

    // saturate: apply every rule to every tuple of existing arguments whose
    // conclusions match the antecedents in order
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t ri = 0; ri < as.theory.rules.size(); ++ri) {
            const NamedRule& rule = as.theory.rules[ri];
            std::size_t arity = rule.antecedents.size();
            std::vector<std::vector<int>> options(arity);
            bool feasible = true;
            for (std::size_t j = 0; j < arity && feasible; ++j) {
                for (std::size_t i = 0; i < set.args.size(); ++i)
                    if (set.args[i].conclusion == rule.antecedents[j])
                        options[j].push_back(static_cast<int>(i));
                if (options[j].empty()) feasible = false;
            }
            if (!feasible) continue;

            std::vector<std::size_t> pick(arity, 0);
            while (true) {
                std::vector<int> children(arity);
                for (std::size_t j = 0; j < arity; ++j) children[j] = options[j][pick[j]];

                bool guard_ok = true;
                for (int c : children)
                    if (set.args[static_cast<std::size_t>(c)].path_conclusions.count(
                            rule.consequent)) {
                        guard_ok = false;
                        break;
                    }
                if (guard_ok) {
                    std::string key = key_of(static_cast<int>(ri), children);
                    if (!seen.count(key)) {
                        Argument a;
                        a.kind = rule.defeasible ? Argument::Kind::Defeasible
                                                 : Argument::Kind::Strict;
                        a.conclusion = rule.consequent;
                        a.rule = static_cast<int>(ri);
                        a.children = children;
                        std::set<int> sub;
                        sub.insert(static_cast<int>(set.args.size()));
                        a.path_conclusions.insert(rule.consequent);
                        for (int c : children) {
                            const Argument& ca = set.args[static_cast<std::size_t>(c)];
                            sub.insert(ca.sub.begin(), ca.sub.end());
                            a.premises.insert(ca.premises.begin(), ca.premises.end());
                            a.path_conclusions.insert(ca.path_conclusions.begin(),
                                                      ca.path_conclusions.end());
                        }
                        a.sub.assign(sub.begin(), sub.end());
                        add(std::move(a), key);
                        grew = true;
                        if (set.args.size() > 4000)
                            throw Error("argument construction exceeded 4000 arguments");
                    }
                }

                // next tuple
                std::size_t j = arity;
                bool advanced = false;
                while (j > 0) {
                    --j;
                    if (pick[j] + 1 < options[j].size()) {
                        ++pick[j];
                        for (std::size_t l = j + 1; l < arity; ++l) pick[l] = 0;
                        advanced = true;
                        break;
                    }
                }
                if (!advanced) break;
            }
        }
        if (set.args.size() > 4000)
            throw Error("argument construction exceeded 4000 arguments");
    }
    return set;
}

std::string attack_kind_str(AttackKind k) {
    switch (k) {
        case AttackKind::Undermine: return "undermine";
        case AttackKind::Rebut: return "rebut";
        case AttackKind::Undercut: return "undercut";
    }
    return "?";
}

std::vector<Attack> compute_attacks(const ArgumentationSystem& as, const KnowledgeBase& kb,
                                    const ArgumentSet& args) {
    std::vector<Attack> out;
    int n = static_cast<int>(args.args.size());
    for (int ai = 0; ai < n; ++ai) {
        const Formula& conc = args.args[static_cast<std::size_t>(ai)].conclusion;
        for (int bi = 0; bi < n; ++bi) {
            const Argument& b = args.args[static_cast<std::size_t>(bi)];

            bool undermine = false;
            for (const Formula& p : b.premises)
                if (kb.is_plausible(p) && as.contrary.matches(p, conc)) {
                    undermine = true;
                    break;
                }
            if (undermine) out.push_back({ai, bi, AttackKind::Undermine});

            bool rebut = false, undercut = false;
            for (int si : b.sub) {
                const Argument& bsub = args.args[static_cast<std::size_t>(si)];
                if (bsub.kind != Argument::Kind::Defeasible) continue;
                if (!rebut && as.contrary.matches(bsub.conclusion, conc)) rebut = true;
                const Formula& rule_name =
                    as.theory.rules[static_cast<std::size_t>(bsub.rule)].name;
                if (!undercut && as.contrary.matches(rule_name, conc)) undercut = true;
                if (rebut && undercut) break;
            }
            if (rebut) out.push_back({ai, bi, AttackKind::Rebut});
            if (undercut) out.push_back({ai, bi, AttackKind::Undercut});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

StructuredAf build_af(const ArgumentationSystem& as, const KnowledgeBase& kb) {
    StructuredAf af;
    af.args = build_arguments(as, kb);
    af.attacks = compute_attacks(as, kb, af.args);
    return af;
}

namespace {

struct Graph {
    std::size_t n;
    std::vector<std::uint64_t> attacks_of;   // mask of arguments attacked by i
    std::vector<std::uint64_t> attackers_of; // mask of arguments attacking i
};

Graph make_graph(const StructuredAf& af) {
    std::size_t n = af.args.args.size();
    if (n > 22) throw Error("argument set too large for extension enumeration");
    Graph g{n, std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, 0)};
    for (const Attack& at : af.attacks) {
        g.attacks_of[static_cast<std::size_t>(at.from)] |= std::uint64_t{1} << at.to;
        g.attackers_of[static_cast<std::size_t>(at.to)] |= std::uint64_t{1} << at.from;
    }
    return g;
}

bool conflict_free(const Graph& g, std::uint64_t m) {
    for (std::size_t i = 0; i < g.n; ++i)
        if ((m & (std::uint64_t{1} << i)) && (g.attackers_of[i] & m)) return false;
    return true;
}

bool admissible(const Graph& g, std::uint64_t m) {
    if (!conflict_free(g, m)) return false;
    std::uint64_t attacked_by_m = 0;
    for (std::size_t i = 0; i < g.n; ++i)
        if (m & (std::uint64_t{1} << i)) attacked_by_m |= g.attacks_of[i];
    for (std::size_t i = 0; i < g.n; ++i)
        if ((m & (std::uint64_t{1} << i)) && (g.attackers_of[i] & ~attacked_by_m))
            return false;  // an attacker of i is not counter-attacked
    return true;
}

}  // namespace

std::vector<std::vector<int>> argument_extensions(const StructuredAf& af, Semantics sem) {
    Graph g = make_graph(af);
    std::uint64_t total = std::uint64_t{1} << g.n;
    std::uint64_t full = total - 1;
    std::vector<std::uint64_t> masks;

    switch (sem) {
        case Semantics::Naive:
            masks = bits::maximal_masks(g.n, [&](std::uint64_t m) { return conflict_free(g, m); });
            break;
        case Semantics::Preferred:
            masks = bits::maximal_masks(g.n, [&](std::uint64_t m) { return admissible(g, m); });
            break;
        case Semantics::Stable:
            for (std::uint64_t m = 0; m < total; ++m) {
                if (!conflict_free(g, m)) continue;
                std::uint64_t attacked = 0;
                for (std::size_t i = 0; i < g.n; ++i)
                    if (m & (std::uint64_t{1} << i)) attacked |= g.attacks_of[i];
                if ((attacked | m) == full) masks.push_back(m);
            }
            break;
    }

    std::vector<std::vector<int>> out;
    for (std::uint64_t m : masks) {
        std::vector<int> ext;
        for (std::size_t i = 0; i < g.n; ++i)
            if (m & (std::uint64_t{1} << i)) ext.push_back(static_cast<int>(i));
        out.push_back(std::move(ext));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool aspic_consequence(const StructuredAf& af, Semantics sem, Mode mode, const Formula& goal,
                       std::vector<int>* witness) {
    std::vector<std::vector<int>> exts = argument_extensions(af, sem);

    auto concludes_goal = [&](const std::vector<int>& ext) {
        for (int i : ext)
            if (af.args.args[static_cast<std::size_t>(i)].conclusion == goal) return true;
        return false;
    };

    switch (mode) {
        case Mode::Cup:
            for (const auto& e : exts)
                if (concludes_goal(e)) {
                    if (witness) *witness = e;
                    return true;
                }
            return false;
        case Mode::Cap:
            for (const auto& e : exts)
                if (!concludes_goal(e)) {
                    if (witness) *witness = e;
                    return false;
                }
            return true;
        case Mode::Dcap: {
            std::vector<int> core;
            if (exts.empty()) {
                for (std::size_t i = 0; i < af.args.args.size(); ++i)
                    core.push_back(static_cast<int>(i));
            } else {
                core = exts.front();
                for (std::size_t i = 1; i < exts.size(); ++i) {
                    std::vector<int> next;
                    std::set_intersection(core.begin(), core.end(), exts[i].begin(),
                                          exts[i].end(), std::back_inserter(next));
                    core = next;
                }
            }
            if (witness) *witness = core;
            return concludes_goal(core);
        }
    }
    return false;
}

}  // namespace defeasance
