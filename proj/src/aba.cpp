#include "defeasance/aba.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "bits.hpp"

namespace defeasance {

std::string semantics_str(Semantics s) {
    switch (s) {
        case Semantics::Naive: return "niv";
        case Semantics::Preferred: return "prf";
        case Semantics::Stable: return "stb";
    }
    return "?";
}

std::string mode_str(Mode m) {
    switch (m) {
        case Mode::Cup: return "cup";
        case Mode::Cap: return "cap";
        case Mode::Dcap: return "dcap";
    }
    return "?";
}

std::optional<Semantics> parse_semantics(const std::string& s) {
    if (s == "niv") return Semantics::Naive;
    if (s == "prf") return Semantics::Preferred;
    if (s == "stb") return Semantics::Stable;
    return std::nullopt;
}

std::optional<Mode> parse_mode(const std::string& s) {
    if (s == "cup") return Mode::Cup;
    if (s == "cap") return Mode::Cap;
    if (s == "dcap") return Mode::Dcap;
    return std::nullopt;
}

std::string Rule::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < antecedents.size(); ++i) {
        if (i) os << ", ";
        os << antecedents[i].str();
    }
    if (!antecedents.empty()) os << ' ';
    os << "-> " << consequent.str();
    return os.str();
}

RuleSystem RuleSystem::extensional(std::vector<Rule> rules) {
    RuleSystem rs;
    rs.rules_ = std::move(rules);
    return rs;
}

RuleSystem RuleSystem::intensional(CoreLogic logic) {
    RuleSystem rs;
    rs.oracle_ = std::move(logic);
    return rs;
}

const CoreLogic& RuleSystem::oracle() const {
    if (!oracle_) throw Error("rule system is extensional, no oracle logic");
    return *oracle_;
}

const std::vector<Rule>& RuleSystem::rules() const {
    if (!rules_) throw Error("rule system is intensional, no finite rule list");
    return *rules_;
}

bool RuleSystem::derives(const FormulaSet& base, const Formula& goal,
                         EntailCache* cache) const {
    if (oracle_) {
        if (cache) return cache->entails(base, goal);
        return entails(*oracle_, base, goal);
    }
    if (base.count(goal)) return true;
    return closure(base).count(goal) > 0;
}

FormulaSet RuleSystem::closure(const FormulaSet& base) const {
    if (oracle_)
        throw Error("closure of an oracle-backed rule system is not finite; query derives per goal");
    FormulaSet derived = base;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule& r : *rules_) {
            if (derived.count(r.consequent)) continue;
            bool fire = true;
            for (const Formula& a : r.antecedents)
                if (!derived.count(a)) {
                    fire = false;
                    break;
                }
            if (fire) {
                derived.insert(r.consequent);
                changed = true;
            }
        }
    }
    return derived;
}

void Abf::validate() const {
    if (assumptions.empty()) throw Error("assumption set must be nonempty");
    if (!std::is_sorted(assumptions.begin(), assumptions.end()))
        throw Error("assumptions must be sorted");
    for (const Formula& a : assumptions)
        if (!contrary.count(a))
            throw Error("no contrary declared for assumption " + a.str());
}

EntailCache Abf::make_cache() const {
    if (rules.is_intensional()) return EntailCache(rules.oracle());
    return EntailCache(CoreLogic{});
}

bool set_attacks(const Abf& abf, const FormulaSet& attacker, const Formula& target,
                 EntailCache* cache) {
    auto it = abf.contrary.find(target);
    if (it == abf.contrary.end()) throw Error("attack target is not an assumption");
    FormulaSet base = abf.gamma;
    base.insert(attacker.begin(), attacker.end());
    return abf.rules.derives(base, it->second, cache);
}

bool set_attacks(const Abf& abf, const FormulaSet& attacker, const FormulaSet& target,
                 EntailCache* cache) {
    for (const Formula& a : target)
        if (set_attacks(abf, attacker, a, cache)) return true;
    return false;
}

namespace {

// Per-subset derivability flags over the assumption lattice.
struct SubsetTable {
    std::size_t n = 0;
    std::vector<std::uint64_t> derived;   // assumptions derivable from gamma + subset
    std::vector<std::uint64_t> attacks;   // assumptions whose contrary is derivable
    std::vector<bool> closed;             // derived subset of mask
    std::vector<bool> conflict_free;      // no assumption with both flags
};

SubsetTable build_table(const Abf& abf, EntailCache* cache) {
    abf.validate();
    std::size_t n = abf.assumptions.size();
    if (n > 16) throw Error("assumption set too large for extension enumeration");
    SubsetTable t;
    t.n = n;
    std::size_t total = std::size_t{1} << n;
    t.derived.resize(total);
    t.attacks.resize(total);
    t.closed.resize(total);
    t.conflict_free.resize(total);

    EntailCache local = abf.make_cache();
    EntailCache* oracle = cache ? cache : &local;
    bool intensional = abf.rules.is_intensional();

    for (std::uint64_t mask = 0; mask < total; ++mask) {
        FormulaSet base = abf.gamma;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) base.insert(abf.assumptions[i]);

        std::uint64_t derived = 0, attacked = 0;
        if (intensional) {
            for (std::size_t i = 0; i < n; ++i) {
                if (oracle->entails(base, abf.assumptions[i]))
                    derived |= std::uint64_t{1} << i;
                if (oracle->entails(base, abf.contrary.at(abf.assumptions[i])))
                    attacked |= std::uint64_t{1} << i;
            }
        } else {
            FormulaSet cl = abf.rules.closure(base);
            for (std::size_t i = 0; i < n; ++i) {
                if (cl.count(abf.assumptions[i])) derived |= std::uint64_t{1} << i;
                if (cl.count(abf.contrary.at(abf.assumptions[i])))
                    attacked |= std::uint64_t{1} << i;
            }
        }
        t.derived[mask] = derived;
        t.attacks[mask] = attacked;
        t.closed[mask] = (derived & ~mask) == 0;
        t.conflict_free[mask] = (derived & attacked) == 0;
    }
    return t;
}

FormulaSet decode(const Abf& abf, std::uint64_t mask) {
    FormulaSet out;
    for (std::size_t i = 0; i < abf.assumptions.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) out.insert(abf.assumptions[i]);
    return out;
}

std::vector<std::uint64_t> extension_masks(const Abf& abf, const SubsetTable& t,
                                           Semantics sem) {
    std::size_t total = std::size_t{1} << t.n;
    std::uint64_t full = total - 1;
    std::vector<std::uint64_t> out;

    if (sem == Semantics::Naive)
        return bits::maximal_masks(
            t.n, [&](std::uint64_t m) { return t.closed[m] && t.conflict_free[m]; });

    if (sem == Semantics::Stable) {
        for (std::uint64_t m = 0; m < total; ++m)
            if (t.closed[m] && t.conflict_free[m] && (t.attacks[m] & ~m) == (full & ~m))
                out.push_back(m);
        return out;
    }

    // preferred: maximal admissible; admissibility quantifies over closed
    // attacking sets only.
    auto admissible = [&](std::uint64_t m) {
        if (!t.closed[m] || !t.conflict_free[m]) return false;
        for (std::uint64_t m2 = 0; m2 < total; ++m2) {
            if (!t.closed[m2]) continue;
            if ((t.attacks[m2] & m) != 0 && (t.attacks[m] & m2) == 0) return false;
        }
        return true;
    };
    return bits::maximal_masks(t.n, admissible);
}

}  // namespace

std::vector<FormulaSet> aba_extensions(const Abf& abf, Semantics sem, EntailCache* cache) {
    SubsetTable t = build_table(abf, cache);
    std::vector<FormulaSet> out;
    for (std::uint64_t m : extension_masks(abf, t, sem)) out.push_back(decode(abf, m));
    std::sort(out.begin(), out.end());
    return out;
}

bool aba_consequence(const Abf& abf, Semantics sem, Mode mode, const Formula& goal,
                     EntailCache* cache, FormulaSet* witness) {
    EntailCache local = abf.make_cache();
    EntailCache* oracle = cache ? cache : &local;
    std::vector<FormulaSet> exts = aba_extensions(abf, sem, oracle);

    auto derives_goal = [&](const FormulaSet& delta) {
        FormulaSet base = abf.gamma;
        base.insert(delta.begin(), delta.end());
        return abf.rules.derives(base, goal, abf.rules.is_intensional() ? oracle : nullptr);
    };

    switch (mode) {
        case Mode::Cup:
            for (const FormulaSet& d : exts)
                if (derives_goal(d)) {
                    if (witness) *witness = d;
                    return true;
                }
            return false;
        case Mode::Cap:
            for (const FormulaSet& d : exts)
                if (!derives_goal(d)) {
                    if (witness) *witness = d;
                    return false;
                }
            return true;
        case Mode::Dcap: {
            FormulaSet core(abf.assumptions.begin(), abf.assumptions.end());
            if (!exts.empty()) {
                core = exts.front();
                for (std::size_t i = 1; i < exts.size(); ++i) {
                    FormulaSet next;
                    for (const Formula& f : core)
                        if (exts[i].count(f)) next.insert(f);
                    core = next;
                }
            }
            if (witness) *witness = core;
            return derives_goal(core);
        }
    }
    return false;
}

bool satisfies_ex(const Abf& abf, EntailCache* cache) {
    EntailCache local = abf.make_cache();
    EntailCache* oracle = cache ? cache : &local;
    for (const FormulaSet& naive : aba_extensions(abf, Semantics::Naive, oracle)) {
        for (const Formula& a : abf.assumptions) {
            if (naive.count(a)) continue;
            if (!set_attacks(abf, naive, a, abf.rules.is_intensional() ? oracle : nullptr))
                return false;
        }
    }
    return true;
}

bool is_normal(const Abf& abf, EntailCache* cache) {
    EntailCache local = abf.make_cache();
    EntailCache* oracle = cache ? cache : &local;
    std::vector<FormulaSet> naive = aba_extensions(abf, Semantics::Naive, oracle);
    std::vector<FormulaSet> stable = aba_extensions(abf, Semantics::Stable, oracle);
    for (const FormulaSet& d : naive)
        if (std::find(stable.begin(), stable.end(), d) == stable.end()) return false;
    return true;
}

}  // namespace defeasance
