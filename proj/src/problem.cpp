#include "defeasance/problem.hpp"

#include <algorithm>
#include <sstream>

namespace defeasance {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

std::vector<Formula> parse_formula_list(const std::string& value, const std::string& section) {
    std::vector<Formula> out;
    for (const std::string& part : split(value, ';')) {
        std::string item = trim(part);
        if (item.empty()) continue;
        try {
            out.push_back(parse_formula(item));
        } catch (const ParseError& e) {
            throw Error("in section '" + section + "', entry '" + item + "': " + e.what());
        }
    }
    return out;
}

std::vector<Formula> parse_abnormalities(const std::string& value) {
    std::vector<Formula> out;
    for (const std::string& part : split(value, ';')) {
        std::string item = trim(part);
        if (item.empty()) continue;
        if (item.rfind("contradictions(", 0) == 0 && item.back() == ')') {
            std::string inner = item.substr(15, item.size() - 16);
            std::vector<std::string> names;
            for (const std::string& n : split(inner, ','))
                if (!trim(n).empty()) names.push_back(trim(n));
            for (const Formula& f : contradiction_abnormalities(names)) out.push_back(f);
        } else {
            out.push_back(parse_formula(item));
        }
    }
    return out;
}

Rule parse_rule(const std::string& text) {
    std::size_t arrow = text.find("->");
    if (arrow == std::string::npos) throw Error("rule '" + text + "' has no '->'");
    std::string lhs = trim(text.substr(0, arrow));
    std::string rhs = trim(text.substr(arrow + 2));
    Rule r;
    if (!lhs.empty())
        for (const std::string& a : split(lhs, ','))
            r.antecedents.push_back(parse_formula(trim(a)));
    r.consequent = parse_formula(rhs);
    return r;
}

// "label: body" or just "body"; the label, when present, is the name atom.
NamedRule parse_named_rule(const std::string& text, bool defeasible) {
    std::string body = text;
    std::string label;
    std::size_t colon = text.find(':');
    if (colon != std::string::npos) {
        label = trim(text.substr(0, colon));
        body = trim(text.substr(colon + 1));
    }
    const std::string arrow = defeasible ? "=>" : "->";
    std::size_t pos = body.find(arrow);
    if (pos == std::string::npos)
        throw Error("rule '" + text + "' has no '" + arrow + "'");
    NamedRule r;
    r.defeasible = defeasible;
    r.label = label;
    std::string lhs = trim(body.substr(0, pos));
    if (!lhs.empty())
        for (const std::string& a : split(lhs, ','))
            r.antecedents.push_back(parse_formula(trim(a)));
    r.consequent = parse_formula(trim(body.substr(pos + 2)));
    if (!label.empty()) r.name = Formula::var(label);
    return r;
}

std::vector<std::pair<Formula, Formula>> parse_contraries(const std::string& value) {
    std::vector<std::pair<Formula, Formula>> out;
    for (const std::string& part : split(value, ';')) {
        std::string item = trim(part);
        if (item.empty()) continue;
        std::size_t arrow = item.find("->");
        if (arrow == std::string::npos)
            throw Error("contrary entry '" + item + "' has no '->'");
        out.emplace_back(parse_formula(trim(item.substr(0, arrow))),
                         parse_formula(trim(item.substr(arrow + 2))));
    }
    return out;
}

}  // namespace

std::string ProblemFile::kind_str() const {
    switch (kind) {
        case Kind::Al: return "al";
        case Kind::Da: return "da";
        case Kind::Aba: return "aba";
        case Kind::Aspic: return "aspic";
    }
    return "?";
}

ProblemFile parse_problem(const std::string& text) {
    ProblemFile pf;
    bool have_kind = false;
    std::vector<NamedRule> strict, defeasible;

    std::istringstream is(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw Error("line " + std::to_string(line_no) + ": expected 'section: value'");
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));

        try {
            if (key == "kind") {
                if (value == "al") pf.kind = ProblemFile::Kind::Al;
                else if (value == "da") pf.kind = ProblemFile::Kind::Da;
                else if (value == "aba") pf.kind = ProblemFile::Kind::Aba;
                else if (value == "aspic") pf.kind = ProblemFile::Kind::Aspic;
                else throw Error("unknown kind '" + value + "'");
                have_kind = true;
            } else if (key == "logic") {
                if (value == "cpl") pf.logic = LogicKind::Cpl;
                else if (value == "lp") pf.logic = LogicKind::Lp;
                else if (value == "l3r") pf.logic = LogicKind::L3r;
                else throw Error("unknown logic '" + value + "'");
            } else if (key == "atoms") {
                pf.atoms = split_ws(value);
            } else if (key == "premises") {
                pf.premises = parse_formula_list(value, key);
            } else if (key == "abnormalities") {
                pf.abnormalities = parse_abnormalities(value);
            } else if (key == "assumptions") {
                pf.assumptions = parse_formula_list(value, key);
            } else if (key == "contraries") {
                if (value == "classical") pf.contraries_classical = true;
                else pf.contraries = parse_contraries(value);
            } else if (key == "rules") {
                if (value == "classical") pf.rules_classical = true;
                else
                    for (const std::string& part : split(value, ';'))
                        if (!trim(part).empty()) pf.rules.push_back(parse_rule(trim(part)));
            } else if (key == "strict_rules") {
                for (const std::string& part : split(value, ';'))
                    if (!trim(part).empty())
                        strict.push_back(parse_named_rule(trim(part), false));
            } else if (key == "defeasible_rules") {
                for (const std::string& part : split(value, ';'))
                    if (!trim(part).empty())
                        defeasible.push_back(parse_named_rule(trim(part), true));
            } else if (key == "axioms") {
                pf.axioms = parse_formula_list(value, key);
            } else if (key == "plausible") {
                pf.plausible = parse_formula_list(value, key);
            } else if (key == "query") {
                pf.query = parse_formula(value);
            } else if (key == "strategy") {
                auto s = parse_strategy(value);
                if (!s) throw Error("unknown strategy '" + value + "'");
                pf.strategy = *s;
            } else if (key == "semantics") {
                auto s = parse_semantics(value);
                if (!s) throw Error("unknown semantics '" + value + "'");
                pf.semantics = *s;
            } else if (key == "mode") {
                auto m = parse_mode(value);
                if (!m) throw Error("unknown mode '" + value + "'");
                pf.mode = *m;
            } else {
                throw Error("unknown section '" + key + "'");
            }
        } catch (const ParseError& e) {
            throw Error("line " + std::to_string(line_no) + ": " + e.what());
        } catch (const Error& e) {
            throw Error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!have_kind) throw Error("problem file has no 'kind:' section");

    pf.aspic_rules = std::move(strict);
    pf.aspic_rules.insert(pf.aspic_rules.end(), defeasible.begin(), defeasible.end());

    // auto-name unlabeled rules with fresh rn_<k> atoms
    std::set<std::string> used(pf.atoms.begin(), pf.atoms.end());
    for (const NamedRule& r : pf.aspic_rules) {
        for (const Formula& a : r.antecedents) a.collect_atoms(used);
        r.consequent.collect_atoms(used);
        if (!r.label.empty()) used.insert(r.label);
    }
    for (const Formula& f : pf.axioms) f.collect_atoms(used);
    for (const Formula& f : pf.plausible) f.collect_atoms(used);
    for (std::size_t i = 0; i < pf.aspic_rules.size(); ++i) {
        if (!pf.aspic_rules[i].name.null()) continue;
        std::string base = "rn_" + std::to_string(i);
        std::string name = base;
        for (int k = 0; used.count(name); ++k) name = base + "_" + std::to_string(k);
        used.insert(name);
        pf.aspic_rules[i].name = Formula::var(name);
    }
    return pf;
}

namespace {

std::string join_formulas(std::vector<Formula> fs, bool sorted) {
    if (sorted) std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    std::string out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out += "; ";
        out += fs[i].str();
    }
    return out;
}

}  // namespace

std::string print_problem(const ProblemFile& pf) {
    std::ostringstream os;
    os << "kind: " << pf.kind_str() << "\n";
    if (pf.logic) os << "logic: " << logic_kind_str(*pf.logic) << "\n";
    if (!pf.atoms.empty()) {
        os << "atoms:";
        for (const std::string& a : pf.atoms) os << ' ' << a;
        os << "\n";
    }
    if (!pf.premises.empty()) os << "premises: " << join_formulas(pf.premises, true) << "\n";
    if (!pf.abnormalities.empty())
        os << "abnormalities: " << join_formulas(pf.abnormalities, true) << "\n";
    if (!pf.assumptions.empty())
        os << "assumptions: " << join_formulas(pf.assumptions, true) << "\n";
    if (pf.contraries_classical) {
        os << "contraries: classical\n";
    } else if (!pf.contraries.empty()) {
        auto entries = pf.contraries;
        std::sort(entries.begin(), entries.end());
        os << "contraries: ";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i) os << "; ";
            os << entries[i].first.str() << " -> " << entries[i].second.str();
        }
        os << "\n";
    }
    if (pf.rules_classical) {
        os << "rules: classical\n";
    } else if (!pf.rules.empty()) {
        std::vector<std::string> lines;
        for (const Rule& r : pf.rules) lines.push_back(r.str());
        std::sort(lines.begin(), lines.end());
        lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
        os << "rules: ";
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (i) os << "; ";
            os << lines[i];
        }
        os << "\n";
    }
    auto print_named = [&](bool defeasible, const char* section) {
        std::vector<std::string> lines;
        for (const NamedRule& r : pf.aspic_rules)
            if (r.defeasible == defeasible) lines.push_back(r.str());
        if (lines.empty()) return;
        os << section << ": ";
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (i) os << "; ";
            os << lines[i];
        }
        os << "\n";
    };
    print_named(false, "strict_rules");
    print_named(true, "defeasible_rules");
    if (!pf.axioms.empty()) os << "axioms: " << join_formulas(pf.axioms, true) << "\n";
    if (!pf.plausible.empty()) os << "plausible: " << join_formulas(pf.plausible, true) << "\n";
    if (pf.query) os << "query: " << pf.query->str() << "\n";
    if (pf.strategy) os << "strategy: " << strategy_str(*pf.strategy) << "\n";
    if (pf.semantics) os << "semantics: " << semantics_str(*pf.semantics) << "\n";
    if (pf.mode) os << "mode: " << mode_str(*pf.mode) << "\n";
    return os.str();
}

namespace {

std::set<std::string> all_atoms(const ProblemFile& pf) {
    std::set<std::string> atoms(pf.atoms.begin(), pf.atoms.end());
    auto add = [&](const std::vector<Formula>& fs) {
        for (const Formula& f : fs) f.collect_atoms(atoms);
    };
    add(pf.premises);
    add(pf.abnormalities);
    add(pf.assumptions);
    add(pf.axioms);
    add(pf.plausible);
    for (const auto& [a, b] : pf.contraries) {
        a.collect_atoms(atoms);
        b.collect_atoms(atoms);
    }
    for (const Rule& r : pf.rules) {
        for (const Formula& a : r.antecedents) a.collect_atoms(atoms);
        r.consequent.collect_atoms(atoms);
    }
    for (const NamedRule& r : pf.aspic_rules) {
        for (const Formula& a : r.antecedents) a.collect_atoms(atoms);
        r.consequent.collect_atoms(atoms);
    }
    if (pf.query) pf.query->collect_atoms(atoms);
    return atoms;
}

CoreLogic logic_of(const ProblemFile& pf) {
    if (!pf.logic) throw Error("this problem needs a 'logic:' section");
    std::set<std::string> atoms = all_atoms(pf);
    switch (*pf.logic) {
        case LogicKind::Cpl: return CoreLogic::cpl(atoms);
        case LogicKind::Lp: return CoreLogic::lp(atoms);
        case LogicKind::L3r: {
            std::vector<std::pair<std::string, std::string>> pairing;
            for (const auto& [a, b] : pf.contraries) {
                if (!a.is_var() || !b.is_var())
                    throw Error("l3r contrary pairing must map atoms to atoms");
                pairing.emplace_back(a.atom_name(), b.atom_name());
            }
            return CoreLogic::l3r(atoms, pairing);
        }
    }
    throw Error("unreachable");
}

}  // namespace

AdaptiveTheory to_adaptive(const ProblemFile& pf) {
    if (pf.kind != ProblemFile::Kind::Al)
        throw Error("expected an 'al' problem, got kind " + pf.kind_str());
    AdaptiveTheory t;
    t.logic = logic_of(pf);
    t.gamma = pf.premises;
    t.omega = pf.abnormalities;
    return t;
}

DefaultTheory to_default(const ProblemFile& pf) {
    if (pf.kind != ProblemFile::Kind::Da)
        throw Error("expected a 'da' problem, got kind " + pf.kind_str());
    DefaultTheory t;
    t.logic = logic_of(pf);
    t.gamma = pf.premises;
    t.delta = pf.assumptions;  // background assumptions
    return t;
}

Abf to_abf(const ProblemFile& pf) {
    if (pf.kind != ProblemFile::Kind::Aba)
        throw Error("expected an 'aba' problem, got kind " + pf.kind_str());
    Abf abf;
    if (pf.rules_classical) {
        abf.rules = RuleSystem::intensional(logic_of(pf));
    } else {
        abf.rules = RuleSystem::extensional(pf.rules);
    }
    abf.gamma = FormulaSet(pf.premises.begin(), pf.premises.end());
    abf.assumptions = pf.assumptions;
    std::sort(abf.assumptions.begin(), abf.assumptions.end());
    abf.assumptions.erase(std::unique(abf.assumptions.begin(), abf.assumptions.end()),
                          abf.assumptions.end());
    if (pf.contraries_classical) {
        for (const Formula& a : abf.assumptions)
            abf.contrary.emplace(a, strip_double_neg(Formula::class_neg(a)));
    } else {
        for (const auto& [a, c] : pf.contraries) {
            auto [it, inserted] = abf.contrary.emplace(a, c);
            if (!inserted && it->second != c)
                throw Error("two different contraries declared for " + a.str());
        }
    }
    abf.validate();
    return abf;
}

AspicTheory to_aspic(const ProblemFile& pf) {
    if (pf.kind != ProblemFile::Kind::Aspic)
        throw Error("expected an 'aspic' problem, got kind " + pf.kind_str());
    AspicTheory t;
    t.as.theory.rules = pf.aspic_rules;
    t.as.theory.validate();
    t.as.contrary.classical = pf.contraries_classical;
    for (const auto& [a, c] : pf.contraries) t.as.contrary.entries[a].push_back(c);
    t.kb.axioms = pf.axioms;
    t.kb.plausible = pf.plausible;
    t.kb.validate();
    return t;
}

ProblemFile problem_of_adaptive(const AdaptiveTheory& theory) {
    ProblemFile pf;
    pf.kind = ProblemFile::Kind::Al;
    pf.logic = theory.logic.kind;
    pf.atoms = theory.logic.signature;
    pf.premises = theory.gamma;
    pf.abnormalities = theory.omega;
    for (const auto& [a, b] : theory.logic.contraries)
        pf.contraries.emplace_back(Formula::var(a), Formula::var(b));
    return pf;
}

ProblemFile problem_of_abf(const Abf& abf) {
    ProblemFile pf;
    pf.kind = ProblemFile::Kind::Aba;
    if (abf.rules.is_intensional()) {
        pf.rules_classical = true;
        pf.logic = abf.rules.oracle().kind;
        pf.atoms = abf.rules.oracle().signature;
    } else {
        pf.rules = abf.rules.rules();
    }
    pf.premises.assign(abf.gamma.begin(), abf.gamma.end());
    pf.assumptions = abf.assumptions;
    for (const auto& [a, c] : abf.contrary) pf.contraries.emplace_back(a, c);
    return pf;
}

ProblemFile problem_of_aspic(const AspicTheory& theory) {
    ProblemFile pf;
    pf.kind = ProblemFile::Kind::Aspic;
    pf.aspic_rules = theory.as.theory.rules;
    pf.contraries_classical = theory.as.contrary.classical;
    for (const auto& [a, cs] : theory.as.contrary.entries)
        for (const Formula& c : cs) pf.contraries.emplace_back(a, c);
    pf.axioms = theory.kb.axioms;
    pf.plausible = theory.kb.plausible;
    return pf;
}

ProblemFile problem_of_default(const DefaultTheory& theory) {
    ProblemFile pf;
    pf.kind = ProblemFile::Kind::Da;
    pf.logic = theory.logic.kind;
    pf.atoms = theory.logic.signature;
    pf.premises = theory.gamma;
    pf.assumptions = theory.delta;
    return pf;
}

}  // namespace defeasance
