#pragma once

#include "hanfkit/hnf.hpp"

#include <map>
#include <string>
#include <vector>

namespace hanfkit {

// Realisation counts of all 1-centre r-types in A, indexed by Types(r,d,1).
struct HanfTuple {
    int radius = 0;
    int degree = 0;
    std::vector<Int> counts;        // aligned with type_ids
    std::vector<TypeId> type_ids;
    Int total() const;
};

HanfTuple hanf_tuple(const Structure& a, int radius, int degree_bound, CatalogStore& store);

// Operation counters for the linear-cost property of the model checker.
struct OpCounters {
    long long sphere_computations = 0;
    long long iso_tests = 0;
    long long oracle_calls = 0;
    long long total() const { return sphere_computations + iso_tests + oracle_calls; }
};

// The five-step model checker: degree bound, HNF compilation (cached in the
// compiler), sphere verdicts at a-bar, per-type counts, then evaluation of
// the residual arithmetic sentence over Z with number quantifiers
// relativised to {0,...,|A|}.
bool model_check(const ExprPtr& phi, const Structure& a, const std::vector<ElemId>& elems,
                 const std::vector<Int>& nums, HnfCompiler& compiler,
                 OpCounters* counters = nullptr);

struct ModelCheckExplain {
    int degree = 2;
    HnfFormula compiled;
    std::vector<std::pair<std::string, bool>> sphere_verdicts;  // type-id -> verdict
    std::map<std::string, Int> basic_counts;                    // type-id -> n_tau
    bool result = false;
};

ModelCheckExplain model_check_explain(const ExprPtr& phi, const Structure& a,
                                      const std::vector<ElemId>& elems,
                                      const std::vector<Int>& nums, HnfCompiler& compiler);

} // namespace hanfkit
