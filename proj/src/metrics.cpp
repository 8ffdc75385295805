#include "hanfkit/metrics.hpp"

#include "hanfkit/errors.hpp"
#include "hanfkit/sphere.hpp"

#include <algorithm>

namespace hanfkit {

FreeVars free_vars(const Expr& e) {
    FreeVars out;
    switch (e.kind) {
        case NodeKind::Equal:
        case NodeKind::RelAtom:
        case NodeKind::SphereAtom:
            for (const auto& v : e.vars) out.structure.insert(v);
            break;
        case NodeKind::Not:
            return free_vars(*e.kids[0]);
        case NodeKind::Or:
        case NodeKind::Add:
        case NodeKind::Mul: {
            out = free_vars(*e.kids[0]);
            FreeVars rhs = free_vars(*e.kids[1]);
            out.structure.insert(rhs.structure.begin(), rhs.structure.end());
            out.number.insert(rhs.number.begin(), rhs.number.end());
            break;
        }
        case NodeKind::ExistsStruct:
            out = free_vars(*e.kids[0]);
            out.structure.erase(e.name);
            break;
        case NodeKind::ExistsNum:
            out = free_vars(*e.kids[0]);
            out.number.erase(e.name);
            break;
        case NodeKind::PredApp:
            for (const auto& t : e.kids) {
                FreeVars sub = free_vars(*t);
                out.structure.insert(sub.structure.begin(), sub.structure.end());
                out.number.insert(sub.number.begin(), sub.number.end());
            }
            break;
        case NodeKind::Count:
            out = free_vars(*e.kids[0]);
            for (const auto& v : e.vars) out.structure.erase(v);
            break;
        case NodeKind::IntConst:
            break;
        case NodeKind::NumVar:
            out.number.insert(e.name);
            break;
    }
    return out;
}

namespace {

// Token count over the paper's alphabet: every symbol name, variable,
// integer literal and punctuation mark (including '#' and '.') is one
// token; a counting term renders as  # ( y1 , ... , yk ) . phi .
long long size_tokens(const Expr& e) {
    switch (e.kind) {
        case NodeKind::Equal:
            return 3;
        case NodeKind::RelAtom:
        case NodeKind::SphereAtom:
            return 2 + 2 * static_cast<long long>(e.vars.size());
        case NodeKind::Not:
            return 1 + size_tokens(*e.kids[0]);
        case NodeKind::Or:
        case NodeKind::Add:
        case NodeKind::Mul:
            return 3 + size_tokens(*e.kids[0]) + size_tokens(*e.kids[1]);
        case NodeKind::ExistsStruct:
        case NodeKind::ExistsNum:
            return 2 + size_tokens(*e.kids[0]);
        case NodeKind::PredApp: {
            long long total = 2 + static_cast<long long>(e.kids.size());
            for (const auto& t : e.kids) total += size_tokens(*t);
            return total;
        }
        case NodeKind::Count:
            return 3 + 2 * static_cast<long long>(e.vars.size()) + size_tokens(*e.kids[0]);
        case NodeKind::IntConst:
        case NodeKind::NumVar:
            return 1;
    }
    return 0;
}

struct Ranks {
    int nqr = 0, br = 0, bw = 0;
};

Ranks ranks(const Expr& e) {
    auto merge = [](Ranks a, const Ranks& b) {
        a.nqr = std::max(a.nqr, b.nqr);
        a.br = std::max(a.br, b.br);
        a.bw = std::max(a.bw, b.bw);
        return a;
    };
    switch (e.kind) {
        case NodeKind::Equal:
        case NodeKind::RelAtom:
        case NodeKind::SphereAtom:
        case NodeKind::IntConst:
        case NodeKind::NumVar:
            return {};
        case NodeKind::Not:
            return ranks(*e.kids[0]);
        case NodeKind::Or:
        case NodeKind::Add:
        case NodeKind::Mul:
            return merge(ranks(*e.kids[0]), ranks(*e.kids[1]));
        case NodeKind::ExistsStruct: {
            Ranks r = ranks(*e.kids[0]);
            r.br += 1;
            r.bw = std::max(r.bw, 1);
            return r;
        }
        case NodeKind::ExistsNum: {
            Ranks r = ranks(*e.kids[0]);
            r.nqr += 1;
            return r;
        }
        case NodeKind::PredApp: {
            Ranks r;
            for (const auto& t : e.kids) r = merge(r, ranks(*t));
            return r;
        }
        case NodeKind::Count: {
            Ranks r = ranks(*e.kids[0]);
            r.br += 1;
            r.bw = std::max(r.bw, static_cast<int>(e.vars.size()));
            return r;
        }
    }
    return {};
}

} // namespace

Metrics metrics(const Expr& e) {
    Metrics m;
    m.size = size_tokens(e);
    Ranks r = ranks(e);
    m.nqr = r.nqr;
    m.br = r.br;
    m.bw = r.bw;
    m.free = free_vars(e);
    return m;
}

bool is_basic_counting_term(const Expr& e) {
    if (e.kind != NodeKind::Count || e.vars.size() != 1) return false;
    const Expr& body = *e.kids[0];
    return body.kind == NodeKind::SphereAtom && body.vars.size() == 1 &&
           body.vars[0] == e.vars[0];
}

namespace {

bool is_simple_counting_term(const Expr& e) {
    switch (e.kind) {
        case NodeKind::IntConst:
        case NodeKind::NumVar:
            return true;
        case NodeKind::Add:
        case NodeKind::Mul:
            return is_simple_counting_term(*e.kids[0]) && is_simple_counting_term(*e.kids[1]);
        case NodeKind::Count:
            return is_basic_counting_term(e);
        default:
            return false;
    }
}

bool is_oc_condition(const Expr& e) {
    switch (e.kind) {
        case NodeKind::PredApp:
            return std::all_of(e.kids.begin(), e.kids.end(),
                               [](const ExprPtr& t) { return is_simple_counting_term(*t); });
        case NodeKind::Not:
            return is_oc_condition(*e.kids[0]);
        case NodeKind::Or:
            return is_oc_condition(*e.kids[0]) && is_oc_condition(*e.kids[1]);
        case NodeKind::ExistsNum:
            return is_oc_condition(*e.kids[0]);
        default:
            return false;
    }
}

bool is_hnf_rec(const Expr& e) {
    switch (e.kind) {
        case NodeKind::SphereAtom:
            return true;
        case NodeKind::Not:
            return is_hnf_rec(*e.kids[0]);
        case NodeKind::Or:
            return is_hnf_rec(*e.kids[0]) && is_hnf_rec(*e.kids[1]);
        default:
            return is_oc_condition(e);
    }
}

void collect_oc(const Expr& e, std::vector<std::string>* keys) {
    switch (e.kind) {
        case NodeKind::SphereAtom:
            return;
        case NodeKind::Not:
            collect_oc(*e.kids[0], keys);
            return;
        case NodeKind::Or:
            // Boolean combinations of oc-conditions could be viewed as one
            // condition, but splitting at every connective reaches the
            // minimal decomposition into atomic-or-quantified conditions.
            collect_oc(*e.kids[0], keys);
            collect_oc(*e.kids[1], keys);
            return;
        case NodeKind::PredApp:
        case NodeKind::ExistsNum:
            keys->push_back(print(e));
            return;
        default:
            return;
    }
}

} // namespace

bool is_hnf(const Expr& e) {
    if (!e.is_formula()) return false;
    return is_hnf_rec(e);
}

int count_oc_conditions(const Expr& e) {
    if (!is_hnf(e)) throw ValidationError("count_oc_conditions expects an hnf-formula");
    std::vector<std::string> keys;
    collect_oc(e, &keys);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return static_cast<int>(keys.size());
}

int locality_radius(const Expr& e) {
    int r = 0;
    if (e.kind == NodeKind::SphereAtom && e.sphere) r = e.sphere->radius();
    for (const auto& kid : e.kids) r = std::max(r, locality_radius(*kid));
    return r;
}

} // namespace hanfkit
