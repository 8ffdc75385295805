#pragma once

#include "hanfkit/structure.hpp"

#include <functional>
#include <random>

namespace hanfkit {

// Calls fn on every d-bounded structure with exactly `size` elements over
// sig.  Enumeration is deterministic: tuple slots in (relation, lexicographic)
// order, subsets in monotone order with degree-based pruning.  fn may return
// false to abort; the function returns false iff aborted.
bool for_each_structure(const Signature& sig, int size, int degree_bound,
                        const std::function<bool(const Structure&)>& fn);

// All sizes 1..max_size.
bool for_each_structure_upto(const Signature& sig, int max_size, int degree_bound,
                             const std::function<bool(const Structure&)>& fn);

// Uniform-ish random d-bounded structure with `size` elements: repeatedly
// tries random tuples, keeping those that respect the degree bound.
Structure random_structure(const Signature& sig, int size, int degree_bound,
                           std::mt19937_64& rng);

} // namespace hanfkit
