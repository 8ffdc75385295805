#pragma once

#include "hanfkit/expr.hpp"

#include <set>
#include <string>

namespace hanfkit {

struct FreeVars {
    std::set<std::string> structure;
    std::set<std::string> number;
    bool operator==(const FreeVars&) const = default;
};

FreeVars free_vars(const Expr& e);

struct Metrics {
    long long size = 0;  // token count over the formula alphabet
    int nqr = 0;
    int br = 0;
    int bw = 0;
    FreeVars free;
};

Metrics metrics(const Expr& e);

// Hanf-normal-form grammar check: a Boolean combination of sphere-atoms and
// numerical oc-type conditions, the latter built from simple counting terms
// (polynomials over basic counting terms and number variables) by predicate
// application, Boolean connectives and number quantification.
bool is_hnf(const Expr& e);

// Number of distinct numerical oc-type conditions: the minimal number of
// subformulas, each atomic or starting with a number quantifier, such that
// the formula is a Boolean combination of them and of sphere-atoms.
// Requires is_hnf(e).
int count_oc_conditions(const Expr& e);

// Max radius over sphere-atoms occurring anywhere in e (0 if none).
int locality_radius(const Expr& e);

// True iff e is a basic counting term #(y) sph_tau(y).
bool is_basic_counting_term(const Expr& e);

} // namespace hanfkit
