#include "hanfkit/eval.hpp"

#include "hanfkit/enumerate.hpp"
#include "hanfkit/errors.hpp"
#include "hanfkit/metrics.hpp"
#include "hanfkit/sphere.hpp"

#include <functional>
#include <sstream>

namespace hanfkit {

namespace {

struct Evaluator {
    const Structure& a;
    const PredicateCollection& preds;
    Assignment env;

    bool formula(const Expr& e) {
        switch (e.kind) {
            case NodeKind::Equal:
                return elem(e.vars[0]) == elem(e.vars[1]);
            case NodeKind::RelAtom: {
                auto ri = a.sig().index_of(e.name);
                if (!ri) throw ValidationError("unknown relation " + e.name);
                Tuple t;
                t.reserve(e.vars.size());
                for (const auto& v : e.vars) t.push_back(elem(v));
                return a.has_tuple(*ri, t);
            }
            case NodeKind::Not:
                return !formula(*e.kids[0]);
            case NodeKind::Or:
                return formula(*e.kids[0]) || formula(*e.kids[1]);
            case NodeKind::ExistsStruct: {
                for (ElemId x = 0; x < a.size(); ++x) {
                    auto saved = set_elem(e.name, x);
                    bool ok = formula(*e.kids[0]);
                    restore_elem(e.name, saved);
                    if (ok) return true;
                }
                return false;
            }
            case NodeKind::ExistsNum: {
                for (Int v = 0; v <= a.size(); ++v) {
                    auto saved = set_num(e.name, v);
                    bool ok = formula(*e.kids[0]);
                    restore_num(e.name, saved);
                    if (ok) return true;
                }
                return false;
            }
            case NodeKind::PredApp: {
                std::vector<Int> args;
                args.reserve(e.kids.size());
                for (const auto& t : e.kids) args.push_back(term(*t));
                return preds.evaluate(e.name, args);
            }
            case NodeKind::SphereAtom: {
                if (!e.sphere) throw ValidationError("unresolved sphere atom");
                Tuple centres;
                centres.reserve(e.vars.size());
                for (const auto& v : e.vars) centres.push_back(elem(v));
                SphereType probe = sphere(a, centres, e.sphere->radius());
                return is_isomorphic(probe, *e.sphere);
            }
            default:
                throw ValidationError("expected a formula");
        }
    }

    Int term(const Expr& e) {
        switch (e.kind) {
            case NodeKind::IntConst:
                return e.value;
            case NodeKind::NumVar: {
                auto it = env.number.find(e.name);
                if (it == env.number.end())
                    throw ValidationError("unassigned number variable " + e.name);
                return it->second;
            }
            case NodeKind::Add:
                return term(*e.kids[0]) + term(*e.kids[1]);
            case NodeKind::Mul:
                return term(*e.kids[0]) * term(*e.kids[1]);
            case NodeKind::Count:
                return count(e, 0);
            default:
                throw ValidationError("expected a counting term");
        }
    }

    Int count(const Expr& e, std::size_t binder) {
        if (binder == e.vars.size()) return formula(*e.kids[0]) ? 1 : 0;
        Int total = 0;
        for (ElemId x = 0; x < a.size(); ++x) {
            auto saved = set_elem(e.vars[binder], x);
            total += count(e, binder + 1);
            restore_elem(e.vars[binder], saved);
        }
        return total;
    }

    ElemId elem(const std::string& var) {
        auto it = env.structure.find(var);
        if (it == env.structure.end())
            throw ValidationError("unassigned structure variable " + var);
        if (it->second < 0 || it->second >= a.size())
            throw ValidationError("assignment of " + var + " lies outside the universe");
        return it->second;
    }

    std::optional<ElemId> set_elem(const std::string& var, ElemId v) {
        auto it = env.structure.find(var);
        std::optional<ElemId> saved;
        if (it != env.structure.end()) saved = it->second;
        env.structure[var] = v;
        return saved;
    }
    void restore_elem(const std::string& var, std::optional<ElemId> saved) {
        if (saved)
            env.structure[var] = *saved;
        else
            env.structure.erase(var);
    }
    std::optional<Int> set_num(const std::string& var, Int v) {
        auto it = env.number.find(var);
        std::optional<Int> saved;
        if (it != env.number.end()) saved = it->second;
        env.number[var] = std::move(v);
        return saved;
    }
    void restore_num(const std::string& var, std::optional<Int> saved) {
        if (saved)
            env.number[var] = *saved;
        else
            env.number.erase(var);
    }
};

} // namespace

Value evaluate(const Expr& e, const Interpretation& interp, const PredicateCollection& preds) {
    Evaluator ev{interp.structure, preds, interp.assign};
    if (e.is_formula()) return ev.formula(e);
    return ev.term(e);
}

bool evaluate_formula(const Expr& e, const Interpretation& interp,
                      const PredicateCollection& preds) {
    if (!e.is_formula()) throw ValidationError("expected a formula");
    Evaluator ev{interp.structure, preds, interp.assign};
    return ev.formula(e);
}

Int evaluate_term(const Expr& e, const Interpretation& interp, const PredicateCollection& preds) {
    if (!e.is_term()) throw ValidationError("expected a counting term");
    Evaluator ev{interp.structure, preds, interp.assign};
    return ev.term(e);
}

namespace {

// Enumerates assignments of the free variables and compares; returns false
// on the first disagreement (filling the verdict).
bool agree_on(const Expr& e1, const Expr& e2, const Structure& s,
              const PredicateCollection& preds, const FreeVars& free,
              EquivalenceVerdict* verdict) {
    std::vector<std::string> svars(free.structure.begin(), free.structure.end());
    std::vector<std::string> nvars(free.number.begin(), free.number.end());
    Assignment assign;

    std::function<bool(std::size_t)> walk_nums = [&](std::size_t ni) -> bool {
        if (ni < nvars.size()) {
            for (Int v = 0; v <= s.size(); ++v) {
                assign.number[nvars[ni]] = v;
                if (!walk_nums(ni + 1)) return false;
            }
            assign.number.erase(nvars[ni]);
            return true;
        }
        Interpretation interp{s, assign};
        Value v1 = evaluate(e1, interp, preds);
        Value v2 = evaluate(e2, interp, preds);
        ++verdict->checked_interpretations;
        if (v1 != v2) {
            std::ostringstream out;
            out << "structure:\n" << write_structure(s) << "assignment:";
            for (const auto& [k, v] : assign.structure) out << ' ' << k << '=' << v;
            for (const auto& [k, v] : assign.number) out << " %" << k << '=' << v;
            out << "\nlhs=" << print(e1) << "\nrhs=" << print(e2);
            verdict->passed = false;
            verdict->counterexample = out.str();
            return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> walk = [&](std::size_t si) -> bool {
        if (si == svars.size()) return walk_nums(0);
        for (ElemId x = 0; x < s.size(); ++x) {
            assign.structure[svars[si]] = x;
            if (!walk(si + 1)) return false;
        }
        assign.structure.erase(svars[si]);
        return true;
    };
    return walk(0);
}

} // namespace

EquivalenceVerdict equivalent_on_bounded(const Expr& e1, const Expr& e2, const Signature& sig,
                                         const PredicateCollection& preds, int degree_bound,
                                         int max_size, const EquivalenceMode& mode) {
    FreeVars f1 = free_vars(e1);
    FreeVars f2 = free_vars(e2);
    if (f1 != f2) throw ValidationError("equivalence check needs matching free variables");
    if (e1.is_formula() != e2.is_formula())
        throw ValidationError("cannot compare a formula with a counting term");

    EquivalenceVerdict verdict;
    if (mode.exhaustive) {
        for_each_structure_upto(sig, max_size, degree_bound, [&](const Structure& s) {
            return agree_on(e1, e2, s, preds, f1, &verdict);
        });
    } else {
        std::mt19937_64 rng(mode.seed);
        std::uniform_int_distribution<int> size_dist(1, max_size);
        for (int i = 0; i < mode.random_count && verdict.passed; ++i) {
            Structure s = random_structure(sig, size_dist(rng), degree_bound, rng);
            agree_on(e1, e2, s, preds, f1, &verdict);
        }
    }
    return verdict;
}

} // namespace hanfkit
