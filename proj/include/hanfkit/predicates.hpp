#pragma once

#include "hanfkit/ints.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hanfkit {

// A numerical predicate: a name, an arity, and a total membership oracle
// over integer tuples.
struct Predicate {
    std::string name;
    int arity = 1;
    std::function<bool(const std::vector<Int>&)> member;
};

// Registry of numerical predicates.  The distinguished predicate `exists`
// (semantics: n >= 1) is always present.  Parametric families are resolved
// on demand from their names:
//   div<p>       multiples of p
//   geq<k>       n >= k
//   up:<u>$<v>   ultimately periodic set with characteristic sequence u v^w
class PredicateCollection {
public:
    PredicateCollection();

    // Looks the name up among registered predicates, then tries the
    // parametric families.  Resolved predicates are cached.
    std::optional<Predicate> resolve(const std::string& name) const;

    void add(Predicate pred);
    bool evaluate(const std::string& name, const std::vector<Int>& args) const;

    static const char* exists_name() { return "exists"; }

private:
    mutable std::map<std::string, Predicate> entries_;
};

} // namespace hanfkit
