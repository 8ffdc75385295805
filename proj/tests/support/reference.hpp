#pragma once

// Independent re-implementations used as oracles: a second free-variable
// recursion, a second metrics fold, and a permutation-search isomorphism
// test that does not go through canonical encodings.

#include "hanfkit/expr.hpp"
#include "hanfkit/metrics.hpp"
#include "hanfkit/sphere.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace hanfkit::testing {

inline void ref_free(const Expr& e, std::set<std::string>& sv, std::set<std::string>& nv) {
    using K = NodeKind;
    if (e.kind == K::Equal || e.kind == K::RelAtom || e.kind == K::SphereAtom) {
        for (const auto& v : e.vars) sv.insert(v);
        return;
    }
    if (e.kind == K::IntConst) return;
    if (e.kind == K::NumVar) {
        nv.insert(e.name);
        return;
    }
    std::set<std::string> csv, cnv;
    for (const auto& kid : e.kids) ref_free(*kid, csv, cnv);
    if (e.kind == K::ExistsStruct) csv.erase(e.name);
    if (e.kind == K::ExistsNum) cnv.erase(e.name);
    if (e.kind == K::Count)
        for (const auto& v : e.vars) csv.erase(v);
    sv.insert(csv.begin(), csv.end());
    nv.insert(cnv.begin(), cnv.end());
}

// (size, nqr, br, bw) computed in one fold, structured differently from the
// production recursion.
inline std::tuple<long long, int, int, int> ref_metrics(const Expr& e) {
    using K = NodeKind;
    long long size = 0;
    int nqr = 0, br = 0, bw = 0;
    for (const auto& kid : e.kids) {
        auto [s, n, b, w] = ref_metrics(*kid);
        size += s;
        nqr = std::max(nqr, n);
        br = std::max(br, b);
        bw = std::max(bw, w);
    }
    switch (e.kind) {
        case K::Equal:
            size += 3;
            break;
        case K::RelAtom:
        case K::SphereAtom:
            size += 2 + 2 * (long long)e.vars.size();
            break;
        case K::Not:
            size += 1;
            break;
        case K::Or:
        case K::Add:
        case K::Mul:
            size += 3;
            break;
        case K::ExistsStruct:
            size += 2;
            br += 1;
            bw = std::max(bw, 1);
            break;
        case K::ExistsNum:
            size += 2;
            nqr += 1;
            break;
        case K::PredApp:
            size += 2 + (long long)e.kids.size();
            break;
        case K::Count:
            size += 3 + 2 * (long long)e.vars.size();
            br += 1;
            bw = std::max(bw, (int)e.vars.size());
            break;
        case K::IntConst:
        case K::NumVar:
            size += 1;
            break;
    }
    return {size, nqr, br, bw};
}

// Permutation-search isomorphism oracle: tries every bijection that maps
// centres pointwise and checks all relations both ways.
inline bool perm_iso(const SphereType& a, const SphereType& b) {
    if (!(a.base().sig() == b.base().sig())) return false;
    if (a.size() != b.size() || a.k() != b.k()) return false;
    const int n = a.size();
    std::vector<int> map(n, -1), used(n, 0);
    for (int i = 0; i < a.k(); ++i) {
        int from = a.centres()[i], to = b.centres()[i];
        if (map[from] >= 0 && map[from] != to) return false;
        if (map[from] < 0 && used[to]) return false;
        if (map[from] < 0) {
            map[from] = to;
            used[to] = 1;
        }
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (map[v] < 0) rest.push_back(v);
    std::vector<int> targets;
    for (int v = 0; v < n; ++v)
        if (!used[v]) targets.push_back(v);

    auto ok = [&]() {
        for (std::size_t ri = 0; ri < a.base().all_tuples().size(); ++ri) {
            if (a.base().tuples(ri).size() != b.base().tuples(ri).size()) return false;
            for (const auto& t : a.base().tuples(ri)) {
                Tuple mapped(t.size());
                for (std::size_t i = 0; i < t.size(); ++i) mapped[i] = map[t[i]];
                if (!b.base().has_tuple(ri, mapped)) return false;
            }
        }
        return true;
    };

    std::sort(targets.begin(), targets.end());
    do {
        for (std::size_t i = 0; i < rest.size(); ++i) map[rest[i]] = targets[i];
        if (ok()) return true;
    } while (std::next_permutation(targets.begin(), targets.end()));
    return false;
}

} // namespace hanfkit::testing
