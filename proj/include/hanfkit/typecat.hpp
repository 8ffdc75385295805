#pragma once

#include "hanfkit/expr.hpp"
#include "hanfkit/sphere.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hanfkit {

inline constexpr int kDefaultCatalogCap = 8;

struct CatalogKey {
    std::string sig_hash;
    int d = 0;
    int r = 0;
    int k = 1;
    auto operator<=>(const CatalogKey&) const = default;
};

// The representative list Types(r, d, k) over a signature: every d-bounded
// r-type with k centres is isomorphic to exactly one entry.  Entries are
// ordered by (universe size, canonical encoding) and materialised lazily
// one universe size at a time, so identifying a small sphere never forces
// the enumeration of larger strata.
class TypeCatalog {
public:
    TypeCatalog(Signature sig, int d, int r, int k, int cap = kDefaultCatalogCap);

    const Signature& sig() const { return sig_; }
    int d() const { return d_; }
    int r() const { return r_; }
    int k() const { return k_; }
    // k * nu_d(r), the largest possible universe (throws CapExceeded if over cap).
    int max_universe() const { return max_universe_; }

    // Materialises strata up to `size` elements.
    void ensure_size(int size);
    // Materialises the whole catalog.
    void ensure_complete();
    bool complete() const { return built_upto_ >= max_universe_; }

    std::size_t entry_count() const { return entries_.size(); }
    const SphereTypePtr& entry(std::size_t index) const;
    const std::vector<SphereTypePtr>& entries() const { return entries_; }

    // Unique catalog index of the type; throws ValidationError when the
    // probe is not d-bounded or not radius-contained.
    std::size_t identify(const SphereType& probe);

    TypeId type_id(std::size_t index) const;

private:
    void build_stratum(int size);

    Signature sig_;
    int d_, r_, k_, cap_;
    int max_universe_ = 0;
    int built_upto_ = 0;
    std::vector<SphereTypePtr> entries_;
    std::map<std::string, std::size_t> index_;
};

// Shared registry of catalogs keyed by (sig-hash, d, r, k); the compiler,
// evaluator and CLI sessions hold one.
class CatalogStore {
public:
    explicit CatalogStore(int cap = kDefaultCatalogCap) : cap_(cap) {}

    TypeCatalog& get(const Signature& sig, int d, int r, int k);
    // Resolves a parsed type-id against the signature; materialises strata
    // as needed.
    SphereTypePtr resolve(const TypeId& id, const Signature& sig);

    int cap() const { return cap_; }
    void set_cap(int cap) { cap_ = cap; }

private:
    int cap_;
    std::map<CatalogKey, std::unique_ptr<TypeCatalog>> catalogs_;
    std::map<std::string, Signature> sigs_by_hash_;
};

// Expands the symbolic type into a plain FO formula sph_tau(x1...xk):
// existentially named copy, exact positive/negative atoms, and the
// radius-closure exclusion clause.
ExprPtr expand_sphere_formula(const SphereType& type, const std::vector<std::string>& centre_vars);

} // namespace hanfkit
