#pragma once

#include "hanfkit/expr.hpp"
#include "hanfkit/predicates.hpp"
#include "hanfkit/structure.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>

namespace hanfkit {

// An assignment in a structure: structure variables to elements, number
// variables to integers.
struct Assignment {
    std::map<std::string, ElemId> structure;
    std::map<std::string, Int> number;
};

struct Interpretation {
    const Structure& structure;
    Assignment assign;
};

using Value = std::variant<bool, Int>;

// Direct brute-force semantics; the correctness oracle for everything else.
// Number quantifiers range over {0,...,|A|}.  On the empty universe:
// exists-y is false, counts are 0, exists-kappa ranges over {0}.
Value evaluate(const Expr& e, const Interpretation& interp, const PredicateCollection& preds);

bool evaluate_formula(const Expr& e, const Interpretation& interp, const PredicateCollection& preds);
Int evaluate_term(const Expr& e, const Interpretation& interp, const PredicateCollection& preds);

struct EquivalenceMode {
    bool exhaustive = true;
    int random_count = 0;
    std::uint64_t seed = 0;
};

struct EquivalenceVerdict {
    bool passed = true;
    long long checked_interpretations = 0;
    std::string counterexample;  // empty when passed
};

// Checks d-equivalence of two expressions with the same free variables on
// all (exhaustive) or sampled (random) d-bounded structures with at most
// max_size elements; number variables range over {0,...,|A|}.
EquivalenceVerdict equivalent_on_bounded(const Expr& e1, const Expr& e2, const Signature& sig,
                                         const PredicateCollection& preds, int degree_bound,
                                         int max_size, const EquivalenceMode& mode = {});

} // namespace hanfkit
