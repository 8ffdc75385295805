#pragma once

// Random expression and structure generators shared by the unit and
// acceptance suites.

#include "hanfkit/expr.hpp"
#include "hanfkit/metrics.hpp"
#include "hanfkit/signature.hpp"

#include <random>
#include <string>
#include <vector>

namespace hanfkit::testing {

struct GenConfig {
    Signature sig{{{"E", 2}, {"U", 1}}};
    std::vector<std::string> struct_vars{"x", "y", "z"};
    std::vector<std::string> num_vars{"k", "l"};
    std::vector<std::string> predicates{"exists", "prime", "div2", "div3",
                                        "geq2",   "eq",    "leq"};
    int max_depth = 4;
    int max_count_width = 2;
    bool allow_num_quant = true;
};

class ExprGen {
public:
    ExprGen(GenConfig cfg, std::uint64_t seed) : cfg_(std::move(cfg)), rng_(seed) {}

    ExprPtr formula() { return gen_formula(cfg_.max_depth, 0); }
    ExprPtr term() { return gen_term(cfg_.max_depth, 0); }

    std::mt19937_64& rng() { return rng_; }

private:
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    const std::string& any(const std::vector<std::string>& pool) { return pool[pick((int)pool.size())]; }

    ExprPtr gen_atom() {
        switch (pick(3)) {
            case 0:
                return make_equal(any(cfg_.struct_vars), any(cfg_.struct_vars));
            default: {
                const auto& rel =
                    cfg_.sig.relations()[pick((int)cfg_.sig.relations().size())];
                std::vector<std::string> args;
                for (int i = 0; i < rel.arity; ++i) args.push_back(any(cfg_.struct_vars));
                return make_rel(rel.name, std::move(args));
            }
        }
    }

    ExprPtr gen_formula(int depth, int num_quant_depth) {
        if (depth <= 0) return gen_atom();
        switch (pick(8)) {
            case 0:
                return gen_atom();
            case 1:
                return make_not(gen_formula(depth - 1, num_quant_depth));
            case 2:
                return make_or(gen_formula(depth - 1, num_quant_depth),
                               gen_formula(depth - 1, num_quant_depth));
            case 3:
                return make_exists(any(cfg_.struct_vars), gen_formula(depth - 1, num_quant_depth));
            case 4:
                if (cfg_.allow_num_quant && num_quant_depth < 1)
                    return make_exists_num(any(cfg_.num_vars),
                                           gen_formula(depth - 1, num_quant_depth + 1));
                return gen_atom();
            default: {
                // predicate application over terms
                const std::string& p = any(cfg_.predicates);
                int arity = p == "eq" || p == "leq" ? 2 : 1;
                std::vector<ExprPtr> terms;
                for (int i = 0; i < arity; ++i) terms.push_back(gen_term(depth - 1, num_quant_depth));
                return make_pred(p, std::move(terms));
            }
        }
    }

    ExprPtr gen_term(int depth, int num_quant_depth) {
        if (depth <= 0) return make_int(pick(7) - 3);
        switch (pick(6)) {
            case 0:
                return make_int(pick(7) - 3);
            case 1:
                return make_num_var(any(cfg_.num_vars));
            case 2:
                return make_add(gen_term(depth - 1, num_quant_depth),
                                gen_term(depth - 1, num_quant_depth));
            case 3:
                return make_mul(gen_term(depth - 1, num_quant_depth),
                                gen_term(depth - 1, num_quant_depth));
            default: {
                int width = 1 + pick(cfg_.max_count_width);
                std::vector<std::string> binders;
                for (const auto& v : cfg_.struct_vars) {
                    if ((int)binders.size() == width) break;
                    binders.push_back(v);
                }
                return make_count(binders, gen_formula(depth - 1, num_quant_depth));
            }
        }
    }

    GenConfig cfg_;
    std::mt19937_64 rng_;
};

} // namespace hanfkit::testing
