#include "defeasance/logic.hpp"

#include <algorithm>
#include <sstream>

namespace defeasance {

std::string logic_kind_str(LogicKind k) {
    switch (k) {
        case LogicKind::Cpl: return "cpl";
        case LogicKind::Lp: return "lp";
        case LogicKind::L3r: return "l3r";
    }
    return "?";
}

bool designated(LogicKind kind, TruthValue v) {
    if (kind == LogicKind::Lp) return v != TruthValue::False;
    return v == TruthValue::True;
}

namespace {

std::vector<std::string> sorted_signature(const std::set<std::string>& atoms) {
    return std::vector<std::string>(atoms.begin(), atoms.end());
}

TruthValue flip(TruthValue v) {
    if (v == TruthValue::True) return TruthValue::False;
    if (v == TruthValue::False) return TruthValue::True;
    return TruthValue::Middle;
}

// Shared enumeration context for one query batch.
class Evaluator {
public:
    Evaluator(const CoreLogic& logic) : logic_(logic) {
        for (std::size_t i = 0; i < logic.signature.size(); ++i)
            index_[logic.signature[i]] = i;
        for (const auto& [a, b] : logic.contraries) {
            auto ia = index_.find(a);
            auto ib = index_.find(b);
            if (ia == index_.end() || ib == index_.end())
                throw Error("contrary pairing mentions atom outside signature");
            pairs_.emplace_back(ia->second, ib->second);
        }
    }

    void check_formula(const Formula& f) const {
        if (logic_.kind == LogicKind::Cpl && f.contains_weak_neg())
            throw Error("weak negation '~' is not part of CPL: " + f.str());
        for (const std::string& a : f.atoms())
            if (!index_.count(a))
                throw Error("atom '" + a + "' outside the signature of this logic");
    }

    TruthValue eval(const Formula& f, const std::vector<TruthValue>& v) const {
        switch (f.kind()) {
            case Conn::Var:
                return v[index_.at(f.atom_name())];
            case Conn::And:
                return std::min(eval(f.left(), v), eval(f.right(), v));
            case Conn::Or:
                return std::max(eval(f.left(), v), eval(f.right(), v));
            case Conn::WeakNeg: {
                TruthValue c = eval(f.child(), v);
                if (logic_.kind == LogicKind::Lp) return flip(c);
                // L3r external negation: ~A is true unless A is true.
                return c == TruthValue::True ? TruthValue::False : TruthValue::True;
            }
            case Conn::ClassNeg: {
                // Superimposed classical negation: designation-level complement.
                TruthValue c = eval(f.child(), v);
                return designated(logic_.kind, c) ? TruthValue::False : TruthValue::True;
            }
        }
        return TruthValue::False;
    }

    bool sat(const Formula& f, const std::vector<TruthValue>& v) const {
        return designated(logic_.kind, eval(f, v));
    }

    bool admissible(const std::vector<TruthValue>& v) const {
        for (const auto& [ia, ib] : pairs_)
            if (v[ib] != flip(v[ia])) return false;
        return true;
    }

    // Enumerates all valuations respecting the logic's constraints and calls
    // fn on each; stops early when fn returns false.
    template <typename Fn>
    void for_each_valuation(Fn&& fn) const {
        std::size_t n = logic_.signature.size();
        bool two_valued = logic_.kind == LogicKind::Cpl;
        std::vector<TruthValue> v(n, TruthValue::False);
        if (n == 0) {
            fn(v);
            return;
        }
        while (true) {
            if (admissible(v) && !fn(v)) return;
            // odometer: last atom fastest, first atom most significant
            std::size_t i = n;
            while (i > 0) {
                --i;
                if (v[i] == TruthValue::True) {
                    v[i] = TruthValue::False;
                    continue;
                }
                v[i] = two_valued ? TruthValue::True
                                  : static_cast<TruthValue>(static_cast<unsigned char>(v[i]) + 1);
                break;
            }
            if (i == 0 && v[0] == TruthValue::False) return;  // wrapped around
        }
    }

    const CoreLogic& logic_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

}  // namespace

CoreLogic CoreLogic::cpl(const std::set<std::string>& atoms) {
    return CoreLogic{LogicKind::Cpl, sorted_signature(atoms), {}};
}

CoreLogic CoreLogic::lp(const std::set<std::string>& atoms) {
    return CoreLogic{LogicKind::Lp, sorted_signature(atoms), {}};
}

CoreLogic CoreLogic::l3r(const std::set<std::string>& atoms,
                         const std::vector<std::pair<std::string, std::string>>& contraries) {
    std::set<std::string> all = atoms;
    for (const auto& [a, b] : contraries) {
        all.insert(a);
        all.insert(b);
    }
    CoreLogic logic{LogicKind::L3r, sorted_signature(all), contraries};
    std::sort(logic.contraries.begin(), logic.contraries.end());
    logic.contraries.erase(std::unique(logic.contraries.begin(), logic.contraries.end()),
                           logic.contraries.end());
    return logic;
}

std::string CoreLogic::cache_key() const {
    std::ostringstream os;
    os << logic_kind_str(kind);
    for (const auto& a : signature) os << ' ' << a;
    for (const auto& [a, b] : contraries) os << ' ' << a << '>' << b;
    return os.str();
}

TruthValue Valuation::at(const std::string& atom) const {
    auto it = std::lower_bound(atoms.begin(), atoms.end(), atom);
    if (it == atoms.end() || *it != atom) throw Error("atom '" + atom + "' not in valuation");
    return values[static_cast<std::size_t>(it - atoms.begin())];
}

std::string Valuation::str(LogicKind kind) const {
    auto name = [&](TruthValue v) -> const char* {
        switch (v) {
            case TruthValue::False: return kind == LogicKind::Lp ? "f" : "0";
            case TruthValue::Middle: return kind == LogicKind::Lp ? "b" : "u";
            case TruthValue::True: return kind == LogicKind::Lp ? "t" : "1";
        }
        return "?";
    };
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) os << ", ";
        os << atoms[i] << ":" << name(values[i]);
    }
    os << "}";
    return os.str();
}

bool entails(const CoreLogic& logic, const std::vector<Formula>& premises,
             const Formula& goal) {
    Evaluator ev(logic);
    for (const Formula& p : premises) ev.check_formula(p);
    ev.check_formula(goal);
    bool holds = true;
    ev.for_each_valuation([&](const std::vector<TruthValue>& v) {
        for (const Formula& p : premises)
            if (!ev.sat(p, v)) return true;  // not a model, keep going
        if (!ev.sat(goal, v)) {
            holds = false;
            return false;
        }
        return true;
    });
    return holds;
}

bool entails(const CoreLogic& logic, const FormulaSet& premises, const Formula& goal) {
    return entails(logic, std::vector<Formula>(premises.begin(), premises.end()), goal);
}

std::vector<Valuation> models_of(const CoreLogic& logic,
                                 const std::vector<Formula>& premises) {
    Evaluator ev(logic);
    for (const Formula& p : premises) ev.check_formula(p);
    std::vector<Valuation> out;
    ev.for_each_valuation([&](const std::vector<TruthValue>& v) {
        for (const Formula& p : premises)
            if (!ev.sat(p, v)) return true;
        out.push_back(Valuation{logic.signature, v});
        return true;
    });
    return out;
}

bool has_model(const CoreLogic& logic, const std::vector<Formula>& premises) {
    Evaluator ev(logic);
    for (const Formula& p : premises) ev.check_formula(p);
    bool found = false;
    ev.for_each_valuation([&](const std::vector<TruthValue>& v) {
        for (const Formula& p : premises)
            if (!ev.sat(p, v)) return true;
        found = true;
        return false;
    });
    return found;
}

bool has_model(const CoreLogic& logic, const FormulaSet& premises) {
    return has_model(logic, std::vector<Formula>(premises.begin(), premises.end()));
}

bool valuation_designates(const CoreLogic& logic, const Valuation& v, const Formula& f) {
    Evaluator ev(logic);
    ev.check_formula(f);
    if (v.atoms != logic.signature) throw Error("valuation does not match the signature");
    return ev.sat(f, v.values);
}

bool EntailCache::entails(const FormulaSet& premises, const Formula& goal) {
    std::string key;
    for (const Formula& p : premises) {
        key += p.str();
        key += '\x01';
    }
    key += '\x02';
    key += goal.str();
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool r = defeasance::entails(logic_, premises, goal);
    memo_.emplace(std::move(key), r);
    return r;
}

}  // namespace defeasance
