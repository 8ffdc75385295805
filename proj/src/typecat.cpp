#include "hanfkit/typecat.hpp"

#include "hanfkit/enumerate.hpp"
#include "hanfkit/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hanfkit {

namespace {

std::string cap_message(const char* what, int r, int d, int k, const std::string& need, int cap) {
    std::ostringstream out;
    out << what << " for (r=" << r << ", d=" << d << ", k=" << k << ") needs universes of size "
        << need << " but the cap is " << cap << " (raise it with --cap or HANFKIT_CAP)";
    return out.str();
}

} // namespace

TypeCatalog::TypeCatalog(Signature sig, int d, int r, int k, int cap)
    : sig_(std::move(sig)), d_(d), r_(r), k_(k), cap_(cap) {
    if (d_ < 0 || r_ < 0 || k_ < 1) throw ValidationError("bad catalog parameters");
    Int max_u = Int(k_) * nu(d_, r_);
    // Clamp to the cap + 1 so the comparison below stays in int range.
    max_universe_ = max_u > cap_ + 1 ? cap_ + 1 : static_cast<int>(max_u);
}

void TypeCatalog::ensure_size(int size) {
    if (size > cap_)
        throw CapExceeded(cap_message("type enumeration", r_, d_, k_, std::to_string(size), cap_));
    while (built_upto_ < std::min(size, max_universe_)) build_stratum(built_upto_ + 1);
}

void TypeCatalog::ensure_complete() {
    Int max_u = Int(k_) * nu(d_, r_);
    if (max_u > cap_)
        throw CapExceeded(cap_message("complete type enumeration", r_, d_, k_, max_u.str(), cap_));
    ensure_size(max_universe_);
}

void TypeCatalog::build_stratum(int size) {
    std::map<std::string, SphereTypePtr> stratum;
    for_each_structure(sig_, size, d_, [&](const Structure& s) {
        // all centre tuples over [size]^k
        Tuple centres(static_cast<std::size_t>(k_), 0);
        while (true) {
            auto hood = s.neighbourhood(centres, r_);
            if (static_cast<int>(hood.size()) == size) {
                auto type = std::make_shared<SphereType>(s, centres, r_);
                stratum.emplace(type->canonical_key(), type);
            }
            int pos = k_ - 1;
            while (pos >= 0 && centres[pos] == size - 1) centres[pos--] = 0;
            if (pos < 0) break;
            ++centres[pos];
        }
        return true;
    });
    for (auto& [key, type] : stratum) {
        index_.emplace(key, entries_.size());
        entries_.push_back(std::move(type));
    }
    built_upto_ = size;
}

const SphereTypePtr& TypeCatalog::entry(std::size_t index) const {
    if (index >= entries_.size()) throw ValidationError("catalog index out of range");
    return entries_[index];
}

std::size_t TypeCatalog::identify(const SphereType& probe) {
    if (!(probe.base().sig() == sig_)) throw ValidationError("identify: signature mismatch");
    if (probe.k() != k_) throw ValidationError("identify: centre count mismatch");
    ensure_size(probe.size());
    auto it = index_.find(probe.canonical_key());
    if (it != index_.end()) return it->second;
    if (probe.base().gaifman_degree() > d_)
        throw ValidationError("identify: sphere exceeds the degree bound " + std::to_string(d_));
    auto hood = probe.base().neighbourhood(probe.centres(), r_);
    if (static_cast<int>(hood.size()) != probe.size())
        throw ValidationError("identify: sphere is not contained in radius " + std::to_string(r_));
    throw ValidationError("identify: no catalog entry matches (internal completeness violation)");
}

TypeId TypeCatalog::type_id(std::size_t index) const {
    return TypeId{sig_.hash(), d_, r_, k_, index};
}

TypeCatalog& CatalogStore::get(const Signature& sig, int d, int r, int k) {
    CatalogKey key{sig.hash(), d, r, k};
    auto it = catalogs_.find(key);
    if (it == catalogs_.end()) {
        auto sit = sigs_by_hash_.find(key.sig_hash);
        if (sit == sigs_by_hash_.end())
            sigs_by_hash_.emplace(key.sig_hash, sig);
        else if (!(sit->second == sig))
            throw ValidationError("signature hash collision");
        it = catalogs_.emplace(key, std::make_unique<TypeCatalog>(sig, d, r, k, cap_)).first;
    }
    return *it->second;
}

SphereTypePtr CatalogStore::resolve(const TypeId& id, const Signature& sig) {
    if (id.sig_hash != sig.hash())
        throw ValidationError("type id " + id.str() + " does not match the signature in scope");
    TypeCatalog& cat = get(sig, id.d, id.r, id.k);
    for (int s = 1; s <= cat.max_universe() && cat.entry_count() <= id.index; ++s)
        cat.ensure_size(s);
    if (id.index >= cat.entry_count())
        throw ValidationError("type id " + id.str() + " is out of range");
    return cat.entry(id.index);
}

namespace {

// Positive adjacency between two variables: some tuple of some relation
// containing both, with remaining slots existentially quantified.
ExprPtr adjacency_formula(const Signature& sig, const std::string& wa, const std::string& wb,
                          const std::string& u_prefix, int* fresh_counter) {
    std::vector<ExprPtr> disjuncts;
    for (const auto& rel : sig.relations()) {
        if (rel.arity < 2) continue;
        for (int i = 0; i < rel.arity; ++i)
            for (int j = 0; j < rel.arity; ++j) {
                if (i == j) continue;
                std::vector<std::string> args(static_cast<std::size_t>(rel.arity));
                std::vector<std::string> fresh;
                for (int p = 0; p < rel.arity; ++p) {
                    if (p == i) {
                        args[p] = wa;
                    } else if (p == j) {
                        args[p] = wb;
                    } else {
                        args[p] = u_prefix + std::to_string((*fresh_counter)++);
                        fresh.push_back(args[p]);
                    }
                }
                ExprPtr atom = make_rel(rel.name, args);
                for (auto it = fresh.rbegin(); it != fresh.rend(); ++it)
                    atom = make_exists(*it, atom);
                disjuncts.push_back(atom);
            }
    }
    return make_or_chain(disjuncts);
}

} // namespace

ExprPtr expand_sphere_formula(const SphereType& type, const std::vector<std::string>& centre_vars) {
    const Structure& base = type.base();
    const Tuple& centres = type.centres();
    if (centre_vars.size() != centres.size())
        throw ValidationError("expand_sphere_formula: centre variable count mismatch");

    // fresh-variable prefix that no centre variable starts with
    std::string stem = "z";
    for (bool clash = true; clash;) {
        clash = false;
        for (const auto& v : centre_vars)
            if (v.rfind(stem, 0) == 0 || v.rfind("w" + stem.substr(1), 0) == 0 ||
                v.rfind("u" + stem.substr(1), 0) == 0)
                clash = true;
        if (clash) stem += "z";
    }
    const std::string z_prefix = stem;
    const std::string w_name = "w" + stem.substr(1);
    const std::string u_prefix = "u" + stem.substr(1);

    const int m = base.size();
    std::vector<std::string> var_of(static_cast<std::size_t>(m));
    std::vector<char> is_named(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < centres.size(); ++i)
        if (!is_named[centres[i]]) {
            var_of[centres[i]] = centre_vars[i];
            is_named[centres[i]] = 1;
        }
    std::vector<std::string> bound_vars;
    for (int e = 0; e < m; ++e)
        if (!is_named[e]) {
            var_of[e] = z_prefix + std::to_string(bound_vars.size());
            bound_vars.push_back(var_of[e]);
        }

    std::vector<ExprPtr> conj;
    // centre coincidence pattern
    for (std::size_t i = 0; i < centres.size(); ++i)
        for (std::size_t j = i + 1; j < centres.size(); ++j) {
            auto eq = make_equal(centre_vars[i], centre_vars[j]);
            conj.push_back(centres[i] == centres[j] ? eq : make_not(eq));
        }
    // distinctness of the named copies
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) conj.push_back(make_not(make_equal(var_of[e], var_of[f])));
    // exact atom pattern
    for (std::size_t ri = 0; ri < base.sig().relations().size(); ++ri) {
        const auto& rel = base.sig().relations()[ri];
        Tuple t(static_cast<std::size_t>(rel.arity), 0);
        while (true) {
            std::vector<std::string> args;
            args.reserve(t.size());
            for (ElemId a : t) args.push_back(var_of[a]);
            ExprPtr atom = make_rel(rel.name, args);
            conj.push_back(base.has_tuple(ri, t) ? atom : make_not(atom));
            int pos = rel.arity - 1;
            while (pos >= 0 && t[pos] == m - 1) t[pos--] = 0;
            if (pos < 0) break;
            ++t[pos];
        }
    }
    // radius closure: no outside element may be adjacent to a named element
    // at distance < r from the centres
    std::vector<ElemId> interior;
    for (int e = 0; e < m; ++e) {
        auto dist = base.distance(centres, e);
        if (dist && *dist < type.radius()) interior.push_back(e);
    }
    if (!interior.empty()) {
        int fresh = 0;
        std::vector<ExprPtr> adj;
        adj.reserve(interior.size());
        for (ElemId e : interior)
            adj.push_back(adjacency_formula(base.sig(), w_name, var_of[e], u_prefix, &fresh));
        std::vector<ExprPtr> outside;
        for (int e = 0; e < m; ++e) outside.push_back(make_not(make_equal(w_name, var_of[e])));
        ExprPtr bad = make_and(make_and_chain(outside), make_or_chain(adj));
        conj.push_back(make_not(make_exists(w_name, bad)));
    }

    ExprPtr body = make_and_chain(conj);
    for (auto it = bound_vars.rbegin(); it != bound_vars.rend(); ++it)
        body = make_exists(*it, body);
    return body;
}

} // namespace hanfkit
