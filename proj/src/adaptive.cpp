#include "defeasance/adaptive.hpp"

#include <algorithm>
#include <cstdint>

namespace defeasance {

std::string strategy_str(Strategy s) {
    switch (s) {
        case Strategy::Reliability: return "r";
        case Strategy::MinimalAbnormality: return "ma";
        case Strategy::NormalSelections: return "ns";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(const std::string& s) {
    if (s == "r") return Strategy::Reliability;
    if (s == "ma") return Strategy::MinimalAbnormality;
    if (s == "ns") return Strategy::NormalSelections;
    return std::nullopt;
}

std::vector<Formula> contradiction_abnormalities(const std::vector<std::string>& atoms) {
    std::vector<Formula> out;
    for (const std::string& a : atoms) {
        Formula v = Formula::var(a);
        out.push_back(Formula::conj(v, Formula::weak_neg(v)));
    }
    return out;
}

namespace {

// Visits subsets of `universe` in ascending cardinality, skipping supersets
// of already accepted sets; fn returns true to accept a subset as minimal.
template <typename Fn>
void minimal_subset_scan(const std::vector<Formula>& universe, bool include_empty, Fn&& fn) {
    std::size_t n = universe.size();
    if (n > 62) throw Error("set too large for subset enumeration");
    std::vector<std::uint64_t> accepted;
    auto visit = [&](std::uint64_t mask) {
        for (std::uint64_t a : accepted)
            if ((a & mask) == a) return;
        FormulaSet subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) subset.insert(universe[i]);
        if (fn(subset)) accepted.push_back(mask);
    };
    if (include_empty) visit(0);
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::uint64_t mask = 0;
            for (std::size_t i : idx) mask |= std::uint64_t{1} << i;
            visit(mask);
            bool advanced = false;
            std::size_t j = k;
            while (j > 0) {
                --j;
                if (idx[j] < n - k + j) {
                    ++idx[j];
                    for (std::size_t l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
}

}  // namespace

SetFamily sigma_of(const AdaptiveTheory& theory, EntailCache* cache) {
    FormulaSet omega = theory.omega_set();
    std::vector<Formula> universe(omega.begin(), omega.end());
    FormulaSet gamma = theory.gamma_set();
    EntailCache local(theory.logic);
    EntailCache& oracle = cache ? *cache : local;

    SetFamily sigma;
    minimal_subset_scan(universe, /*include_empty=*/false, [&](const FormulaSet& delta) {
        std::vector<Formula> disj(delta.begin(), delta.end());
        if (!oracle.entails(gamma, big_or(disj))) return false;
        sigma.insert(delta);
        return true;
    });
    return sigma;
}

SetFamily phi_of(const SetFamily& sigma) {
    if (sigma.empty()) return SetFamily{FormulaSet{}};
    FormulaSet union_set;
    for (const FormulaSet& s : sigma) union_set.insert(s.begin(), s.end());
    std::vector<Formula> universe(union_set.begin(), union_set.end());

    SetFamily phi;
    minimal_subset_scan(universe, /*include_empty=*/true, [&](const FormulaSet& choice) {
        for (const FormulaSet& s : sigma) {
            bool hit = false;
            for (const Formula& f : s)
                if (choice.count(f)) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        phi.insert(choice);
        return true;
    });
    return phi;
}

namespace {

// Smallest-first search for delta within `pool` with gamma |- goal \/ \/delta.
std::optional<FormulaSet> find_delta(EntailCache& oracle, const FormulaSet& gamma,
                                     const Formula& goal, const FormulaSet& pool) {
    std::vector<Formula> universe(pool.begin(), pool.end());
    std::optional<FormulaSet> found;
    minimal_subset_scan(universe, /*include_empty=*/true, [&](const FormulaSet& delta) {
        if (found) return true;  // already done; mark to prune the rest
        std::vector<Formula> rest(delta.begin(), delta.end());
        if (oracle.entails(gamma, or_with(goal, rest))) {
            found = delta;
            return true;
        }
        return false;
    });
    return found;
}

FormulaSet set_minus(const FormulaSet& a, const FormulaSet& b) {
    FormulaSet out;
    for (const Formula& f : a)
        if (!b.count(f)) out.insert(f);
    return out;
}

}  // namespace

bool al_consequence(const AdaptiveTheory& theory, Strategy strategy, const Formula& goal,
                    EntailCache* cache, AlWitness* witness) {
    EntailCache local(theory.logic);
    EntailCache& oracle = cache ? *cache : local;
    FormulaSet gamma = theory.gamma_set();
    FormulaSet omega = theory.omega_set();

    SetFamily sigma = sigma_of(theory, &oracle);

    if (strategy == Strategy::Reliability) {
        FormulaSet unreliable;
        for (const FormulaSet& s : sigma) unreliable.insert(s.begin(), s.end());
        auto delta = find_delta(oracle, gamma, goal, set_minus(omega, unreliable));
        if (delta && witness) witness->picks.emplace_back(unreliable, *delta);
        return delta.has_value();
    }

    SetFamily phi = phi_of(sigma);
    if (strategy == Strategy::MinimalAbnormality) {
        for (const FormulaSet& theta : phi) {
            auto delta = find_delta(oracle, gamma, goal, set_minus(omega, theta));
            if (!delta) {
                if (witness) witness->failed_theta = theta;
                return false;
            }
            if (witness) witness->picks.emplace_back(theta, *delta);
        }
        return true;
    }

    // normal selections
    for (const FormulaSet& theta : phi) {
        auto delta = find_delta(oracle, gamma, goal, set_minus(omega, theta));
        if (delta) {
            if (witness) witness->picks.emplace_back(theta, *delta);
            return true;
        }
    }
    return false;
}

bool al_consequence_semantic(const AdaptiveTheory& theory, Strategy strategy,
                             const Formula& goal) {
    // One pass over the models of gamma, keeping per model the abnormality
    // part (as a bitmask over omega) and whether the goal is designated.
    std::vector<Valuation> models = models_of(theory.logic, theory.gamma);
    std::vector<Formula> omega(theory.omega_set().begin(), theory.omega_set().end());
    if (omega.size() > 63) throw Error("abnormality set too large for model ranking");

    struct Row {
        std::uint64_t ab;
        bool goal_ok;
    };
    std::vector<Row> rows;
    rows.reserve(models.size());
    for (const Valuation& m : models) {
        std::uint64_t ab = 0;
        for (std::size_t i = 0; i < omega.size(); ++i)
            if (valuation_designates(theory.logic, m, omega[i])) ab |= std::uint64_t{1} << i;
        rows.push_back({ab, valuation_designates(theory.logic, m, goal)});
    }

    std::vector<std::size_t> minimal;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        bool is_min = true;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (i == j) continue;
            if ((rows[j].ab & rows[i].ab) == rows[j].ab && rows[j].ab != rows[i].ab) {
                is_min = false;
                break;
            }
        }
        if (is_min) minimal.push_back(i);
    }

    switch (strategy) {
        case Strategy::MinimalAbnormality:
            for (std::size_t i : minimal)
                if (!rows[i].goal_ok) return false;
            return true;
        case Strategy::Reliability: {
            std::uint64_t reliable_scope = 0;
            for (std::size_t i : minimal) reliable_scope |= rows[i].ab;
            for (const Row& r : rows)
                if ((r.ab & ~reliable_scope) == 0 && !r.goal_ok) return false;
            return true;
        }
        case Strategy::NormalSelections:
            for (std::size_t i : minimal) {
                bool all_ok = true;
                for (const Row& r : rows)
                    if (r.ab == rows[i].ab && !r.goal_ok) {
                        all_ok = false;
                        break;
                    }
                if (all_ok) return true;
            }
            return false;
    }
    return false;
}

SetFamily mcs_of(const DefaultTheory& theory) {
    std::vector<Formula> delta(theory.delta.begin(), theory.delta.end());
    std::sort(delta.begin(), delta.end());
    delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
    std::size_t n = delta.size();
    if (n > 20) throw Error("background assumption set too large to enumerate");

    std::vector<bool> consistent(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Formula> premises = theory.gamma;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) premises.push_back(delta[i]);
        consistent[mask] = has_model(theory.logic, premises);
    }

    SetFamily out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (!consistent[mask]) continue;
        bool maximal = true;
        for (std::size_t i = 0; i < n && maximal; ++i)
            if (!(mask & (std::uint64_t{1} << i)) && consistent[mask | (std::uint64_t{1} << i)])
                maximal = false;
        if (!maximal) continue;
        FormulaSet theta;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) theta.insert(delta[i]);
        out.insert(theta);
    }
    return out;
}

bool da_consequence(const DefaultTheory& theory, const Formula& goal,
                    FormulaSet* failing_mcs) {
    for (const FormulaSet& theta : mcs_of(theory)) {
        std::vector<Formula> premises = theory.gamma;
        premises.insert(premises.end(), theta.begin(), theta.end());
        if (!entails(theory.logic, premises, goal)) {
            if (failing_mcs) *failing_mcs = theta;
            return false;
        }
    }
    return true;
}

}  // namespace defeasance
