#pragma once

#include "hanfkit/eval.hpp"
#include "hanfkit/expr.hpp"
#include "hanfkit/metrics.hpp"
#include "hanfkit/predicates.hpp"
#include "hanfkit/typecat.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hanfkit {

// A simple counting term: an integer polynomial over basic counting terms
// #(y) sph_tau(y) and number variables.  Kept in a canonical monomial map
// so that equal polynomials render identically.
class SimpleTerm {
public:
    SimpleTerm() = default;

    static SimpleTerm constant(Int v);
    static SimpleTerm basic(SphereTypePtr type, TypeId id);
    static SimpleTerm num_var(const std::string& name);

    SimpleTerm& operator+=(const SimpleTerm& o);
    SimpleTerm& operator*=(const SimpleTerm& o);
    SimpleTerm& negate();
    friend SimpleTerm operator+(SimpleTerm a, const SimpleTerm& b) { return a += b; }
    friend SimpleTerm operator*(SimpleTerm a, const SimpleTerm& b) { return a *= b; }

    bool is_constant() const;
    std::optional<Int> constant_value() const;

    // Max radius over the basic counting terms (0 if none).
    int locality_radius() const;

    // Renders the polynomial as a counting-term Expr; deterministic
    // monomial order.
    ExprPtr to_expr() const;

    // Linear form b_0 + sum b_tau * #(y)sph_tau(y) if the polynomial is
    // linear in the basic terms and has no number variables.
    struct LinearForm {
        Int constant;
        std::vector<std::pair<TypeId, Int>> coeffs;  // per basic term
    };
    std::optional<LinearForm> linear_form() const;

    const std::map<std::string, SphereTypePtr>& atom_types() const { return atom_types_; }
    const std::map<std::string, TypeId>& atom_ids() const { return atom_ids_; }
    const std::map<std::vector<std::string>, Int>& monomials() const { return monomials_; }

private:
    // key "b:<type-id>" for a basic counting term, "n:<name>" for a number
    // variable; a monomial is a sorted multiset of keys.
    std::map<std::vector<std::string>, Int> monomials_;
    std::map<std::string, SphereTypePtr> atom_types_;
    std::map<std::string, TypeId> atom_ids_;
};

struct HnfFormula {
    ExprPtr expr;
    int locality_radius = 0;
    int degree = 2;  // the (clamped) degree bound compiled for
    std::vector<TypeId> basic_term_types;
    std::vector<TypeId> sphere_atom_types;
};

struct CompileOptions {
    int cap = kDefaultCatalogCap;
    bool simplify = false;
    bool record_decompositions = false;
};

// One memoised application of the counting-term decomposition; recorded so
// tests can replay the value identity t^A[a-bar] = t-hat^A by brute force.
struct DecompositionRecord {
    SphereTypePtr tau;
    int n = 0;
    int k = 1;
    int r = 0;
    SphereTypePtr rho;  // null when n = 0
    SimpleTerm term;
    int d = 2;
};

// The Hanf-normal-form compiler.  One instance per (signature, predicate
// collection); compilations are memoised by (formula, degree).
class HnfCompiler {
public:
    HnfCompiler(Signature sig, const PredicateCollection& preds, CatalogStore& store,
                CompileOptions opts = {});

    // Produces a d-equivalent hnf-formula.  d < 2 is clamped to 2.
    HnfFormula to_hnf(const ExprPtr& phi, int degree_bound);

    // Counting-term decomposition for tau in Types(r,d,n+k) w.r.t. the
    // split (x1..xn, y1..yk); rho (from Types(R',d,n), R' >= r+k(2r+1)) is
    // required iff n > 0.
    SimpleTerm decompose_term(const SphereTypePtr& tau, int n, int k, const SphereTypePtr& rho,
                              int degree_bound, int radius);

    // Lemma "Boolean combination -> sphere disjunction": indices I of the
    // catalog entries equivalent to psi_J.  `vars` fixes the centre order;
    // chis/j_true give the condition list and the subset J.
    std::vector<std::size_t> boolean_to_spheres(const ExprPtr& psi, const std::vector<ExprPtr>& chis,
                                                const std::vector<bool>& j_true, TypeCatalog& cat,
                                                const std::vector<std::string>& vars);

    // Term aggregation: t-hat_J = sum over I of the decompositions.
    SimpleTerm aggregate_terms(const ExprPtr& psi, const std::vector<ExprPtr>& chis,
                               const std::vector<bool>& j_true, int n, int k, TypeCatalog& cat,
                               const std::vector<std::string>& vars, const SphereTypePtr& rho,
                               int degree_bound);

    const std::vector<DecompositionRecord>& decomposition_log() const { return decomposition_log_; }
    CatalogStore& store() { return store_; }
    const Signature& sig() const { return sig_; }
    const PredicateCollection& preds() const { return preds_; }
    const CompileOptions& options() const { return opts_; }

private:
    friend HnfFormula finish_hnf(HnfCompiler&, ExprPtr, int);

    ExprPtr compile(const ExprPtr& phi, int d);
    ExprPtr compile_atomic(const ExprPtr& phi, int d);
    ExprPtr compile_pred_app(const ExprPtr& phi, int d);
    ExprPtr compile_exists_num(const ExprPtr& phi, int d);
    ExprPtr eliminate_struct_quantifiers(const ExprPtr& phi);

    Signature sig_;
    const PredicateCollection& preds_;
    CatalogStore& store_;
    CompileOptions opts_;

    std::map<std::pair<std::string, int>, ExprPtr> compile_cache_;
    std::map<std::string, SimpleTerm> decompose_cache_;
    std::vector<DecompositionRecord> decomposition_log_;
};

// Weak Hanf normal form for FO(P) with unary P: Boolean combination of
// sphere-atoms and sentences P(#(y) (disjunction of sphere-atoms) - k).
ExprPtr extract_whnf(const ExprPtr& phi, int degree_bound, HnfCompiler& compiler);
bool is_whnf(const Expr& e);

// Validates that phi lies in the FO(P) fragment (rules 1-4 and linear
// single-variable counting terms #(y)phi - k).
bool is_fo_p(const Expr& e);

// B-Sigma_{n,l} membership test and the FO -> FOC({exists}) translation:
// every quantifier block of length <= l becomes exists(#(x-bar) ...).
bool in_bsigma(const Expr& e, int n, int l);
ExprPtr fo_to_foc(const ExprPtr& phi, int n, int l);

// Bounded-arithmetic emission: a first-order formula over Z_P in variables
// v_tau for tau in Types(r,d,1), r = (2bw+1)^br - 1, determining phi on
// d-bounded structures at tuples of type rho.
struct ArithmeticFormula {
    ExprPtr expr;  // NumVar("v:<type-id>") leaves stand for the v_tau
    int radius = 0;
    int degree = 2;
    std::vector<TypeId> variables;  // the full Types(r,d,1) order
};

ArithmeticFormula emit_arithmetic(const ExprPtr& phi, int degree_bound, const SphereTypePtr& rho,
                                  HnfCompiler& compiler);

// Evaluates an emitted formula on concrete counts (the Hanf tuple); number
// quantifiers range over {0,...,sum of counts}.
bool eval_arithmetic(const ArithmeticFormula& psi, const std::map<std::string, Int>& counts,
                     const PredicateCollection& preds);

} // namespace hanfkit
