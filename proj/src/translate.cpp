#include "defeasance/translate.hpp"

#include <algorithm>
#include <sstream>

namespace defeasance {

std::string TranslationReport::str() const {
    std::ostringstream os;
    os << "direction: " << direction << "\n";
    for (const auto& [from, to] : name_table) os << "name: " << from << " => " << to << "\n";
    for (const auto& [from, to] : abnormality_table)
        os << "abnormality: " << from << " => " << to << "\n";
    for (const std::string& n : notes) os << "note: " << n << "\n";
    return os.str();
}

Abf al_to_aba(const AdaptiveTheory& theory, TranslationReport* report) {
    if (theory.omega.empty())
        throw Error("abnormality set is empty; the assumption set of the target framework "
                    "must be nonempty");
    Abf abf;
    abf.rules = RuleSystem::intensional(theory.logic);
    abf.gamma = theory.gamma_set();
    for (const Formula& a : theory.omega_set()) {
        Formula neg = Formula::class_neg(a);
        abf.assumptions.push_back(neg);
        abf.contrary.emplace(neg, a);
        if (report) report->abnormality_table.emplace_back(a.str(), neg.str());
    }
    std::sort(abf.assumptions.begin(), abf.assumptions.end());
    abf.assumptions.erase(std::unique(abf.assumptions.begin(), abf.assumptions.end()),
                          abf.assumptions.end());
    abf.validate();
    if (report) report->direction = "al2aba";
    return abf;
}

namespace {

std::string fresh_atom(const std::string& base, const std::set<std::string>& used) {
    if (!used.count(base)) return base;
    for (int k = 0;; ++k) {
        std::string candidate = base + "_" + std::to_string(k);
        if (!used.count(candidate)) return candidate;
    }
}

void collect_used_atoms(const ArgumentationSystem& as, const KnowledgeBase& kb,
                        std::set<std::string>& used) {
    for (const NamedRule& r : as.theory.rules) {
        for (const Formula& a : r.antecedents) a.collect_atoms(used);
        r.consequent.collect_atoms(used);
        r.name.collect_atoms(used);
    }
    for (const Formula& f : kb.axioms) f.collect_atoms(used);
    for (const Formula& f : kb.plausible) f.collect_atoms(used);
    for (const auto& [key, values] : as.contrary.entries) {
        key.collect_atoms(used);
        for (const Formula& v : values) v.collect_atoms(used);
    }
}

}  // namespace

Abf aspic_to_aba(const ArgumentationSystem& as, const KnowledgeBase& kb,
                 TranslationReport* report) {
    as.theory.validate();
    kb.validate();

    std::set<std::string> used;
    collect_used_atoms(as, kb, used);

    std::vector<Rule> rules;
    std::vector<Formula> assumptions(kb.plausible.begin(), kb.plausible.end());
    std::map<Formula, Formula> contrary;

    // Unique ABA contrary per sentence that needs one; the footnote encoding
    // (fresh token plus bridging rules) covers non-singleton contrariness.
    int token_index = 0;
    std::map<Formula, Formula> aba_contrary;
    auto contrary_of = [&](const Formula& s) -> Formula {
        auto it = aba_contrary.find(s);
        if (it != aba_contrary.end()) return it->second;
        std::vector<Formula> cs = as.contrary.of(s);
        Formula result;
        if (cs.size() == 1) {
            result = cs.front();
        } else {
            std::string name = fresh_atom("ctr__" + std::to_string(token_index++), used);
            used.insert(name);
            result = Formula::var(name);
            for (const Formula& c : cs) rules.push_back(Rule{{c}, result});
            if (report)
                report->notes.push_back("contrariness of " + s.str() + " is not a singleton (" +
                                        std::to_string(cs.size()) + " members); encoded via token " +
                                        name + " with one bridging rule per member");
        }
        aba_contrary.emplace(s, result);
        return result;
    };

    for (std::size_t i = 0; i < as.theory.rules.size(); ++i) {
        const NamedRule& r = as.theory.rules[i];
        if (!r.defeasible) {
            rules.push_back(Rule{r.antecedents, r.consequent});
            continue;
        }
        std::string n_name = fresh_atom("n__" + std::to_string(i), used);
        used.insert(n_name);
        std::string nc_name = fresh_atom("nc__" + std::to_string(i), used);
        used.insert(nc_name);
        Formula n_tok = Formula::var(n_name);
        Formula nc_tok = Formula::var(nc_name);

        std::vector<Formula> ants;
        ants.push_back(n_tok);
        ants.insert(ants.end(), r.antecedents.begin(), r.antecedents.end());
        rules.push_back(Rule{ants, r.consequent});
        rules.push_back(Rule{{contrary_of(r.consequent)}, nc_tok});

        assumptions.push_back(n_tok);
        contrary.emplace(n_tok, nc_tok);
        if (report) {
            std::string label = r.label.empty() ? r.str() : r.label;
            report->name_table.emplace_back(label, n_name + " (contrary " + nc_name + ")");
        }
    }

    for (const Formula& p : kb.plausible) contrary.emplace(p, contrary_of(p));

    Abf abf;
    abf.rules = RuleSystem::extensional(std::move(rules));
    abf.gamma = FormulaSet(kb.axioms.begin(), kb.axioms.end());
    std::sort(assumptions.begin(), assumptions.end());
    assumptions.erase(std::unique(assumptions.begin(), assumptions.end()), assumptions.end());
    abf.assumptions = std::move(assumptions);
    abf.contrary = std::move(contrary);
    abf.validate();
    if (report) report->direction = "aspic2aba";
    return abf;
}

namespace {

std::string require_atom(const Formula& f, const std::string& role) {
    if (!f.is_var())
        throw Error("outside the translatable fragment: " + role + " " + f.str() +
                    " is not an atom");
    return f.atom_name();
}

}  // namespace

AdaptiveTheory aba_to_al(const Abf& abf, TranslationReport* report) {
    abf.validate();
    if (abf.rules.is_intensional())
        throw Error("only a finite extensional rule set can be translated");

    std::set<std::string> atoms;
    for (const Rule& r : abf.rules.rules()) {
        for (const Formula& a : r.antecedents) atoms.insert(require_atom(a, "rule antecedent"));
        atoms.insert(require_atom(r.consequent, "rule consequent"));
    }
    for (const Formula& g : abf.gamma) atoms.insert(require_atom(g, "premise"));
    std::vector<std::pair<std::string, std::string>> pairing;
    for (const Formula& a : abf.assumptions) {
        std::string an = require_atom(a, "assumption");
        std::string cn = require_atom(abf.contrary.at(a), "contrary of " + a.str());
        atoms.insert(an);
        atoms.insert(cn);
        pairing.emplace_back(an, cn);
    }

    AdaptiveTheory theory;
    theory.logic = CoreLogic::l3r(atoms, pairing);
    theory.gamma.assign(abf.gamma.begin(), abf.gamma.end());
    for (const Rule& r : abf.rules.rules()) {
        Formula clause = r.consequent;
        // fold right to left so the clause reads ~A1 | ... | ~An | B
        for (std::size_t i = r.antecedents.size(); i-- > 0;)
            clause = Formula::disj(Formula::weak_neg(r.antecedents[i]), clause);
        theory.gamma.push_back(clause);
        if (report) report->name_table.emplace_back(r.str(), clause.str());
    }
    for (const Formula& a : abf.assumptions) {
        theory.omega.push_back(Formula::weak_neg(a));
        if (report)
            report->abnormality_table.emplace_back(a.str(), Formula::weak_neg(a).str());
    }
    if (report) report->direction = "aba2al";
    return theory;
}

AspicTheory al_to_aspic(const AdaptiveTheory& theory, const std::optional<Formula>& query,
                        TranslationReport* report) {
    Abf abf = al_to_aba(theory, nullptr);

    // Materialize a finite strict-rule slice of the oracle-backed universe.
    FormulaSet candidates;
    for (const Formula& f : theory.gamma) collect_subformulas(f, candidates);
    for (const Formula& f : theory.omega) collect_subformulas(f, candidates);
    for (const Formula& a : abf.assumptions) collect_subformulas(a, candidates);
    if (query) collect_subformulas(*query, candidates);

    std::vector<Formula> pool(candidates.begin(), candidates.end());
    std::set<std::string> used;
    for (const Formula& f : pool) f.collect_atoms(used);

    EntailCache oracle(theory.logic);
    std::vector<NamedRule> rules;
    std::size_t n = pool.size();
    if (n > 24) throw Error("candidate sentence pool too large to materialize rules");

    auto add_rule = [&](const std::vector<Formula>& ants, const Formula& head) {
        FormulaSet base(ants.begin(), ants.end());
        if (base.count(head)) return;
        if (!oracle.entails(base, head)) return;
        NamedRule r;
        r.antecedents = ants;
        r.consequent = head;
        r.defeasible = false;
        std::string label = "rn_" + std::to_string(rules.size());
        r.name = Formula::var(fresh_atom(label, used));
        r.label = "";
        rules.push_back(std::move(r));
    };

    for (std::size_t i = 0; i < n; ++i) add_rule({}, pool[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t h = 0; h < n; ++h)
            if (h != i) add_rule({pool[i]}, pool[h]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t h = 0; h < n; ++h)
                if (h != i && h != j) add_rule({pool[i], pool[j]}, pool[h]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l)
                for (std::size_t h = 0; h < n; ++h)
                    if (h != i && h != j && h != l)
                        add_rule({pool[i], pool[j], pool[l]}, pool[h]);

    AspicTheory out;
    out.as.theory.rules = std::move(rules);
    out.as.contrary.classical = false;
    for (const Formula& a : abf.assumptions)
        out.as.contrary.entries[a] = {abf.contrary.at(a)};

    out.kb.axioms.assign(theory.gamma.begin(), theory.gamma.end());
    std::sort(out.kb.axioms.begin(), out.kb.axioms.end());
    out.kb.axioms.erase(std::unique(out.kb.axioms.begin(), out.kb.axioms.end()),
                        out.kb.axioms.end());
    FormulaSet gamma = theory.gamma_set();
    for (const Formula& a : abf.assumptions)
        if (!gamma.count(a)) out.kb.plausible.push_back(a);
        else if (report)
            report->notes.push_back("assumption " + a.str() +
                                    " already occurs among the premises; kept as an axiom only");

    if (report) {
        report->direction = "al2aspic";
        for (const Formula& a : abf.assumptions)
            report->abnormality_table.emplace_back(abf.contrary.at(a).str(), a.str());
        report->notes.push_back(std::to_string(out.as.theory.rules.size()) +
                                " strict rules materialized over " + std::to_string(n) +
                                " candidate sentences");
    }
    return out;
}

}  // namespace defeasance
