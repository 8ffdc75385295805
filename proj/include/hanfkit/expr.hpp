#pragma once

#include "hanfkit/ints.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hanfkit {

class SphereType;

// Reference to an entry of a type catalog, as it appears in formula text:
//   t:<sig-hash>:<d>:<r>:<k>:<index>
struct TypeId {
    std::string sig_hash;
    int d = 0;
    int r = 0;
    int k = 1;
    std::size_t index = 0;

    std::string str() const;
    static std::optional<TypeId> parse(const std::string& text);
    bool operator==(const TypeId& o) const = default;
};

enum class NodeKind {
    // formulas
    Equal,
    RelAtom,
    Not,
    Or,
    ExistsStruct,
    ExistsNum,
    PredApp,
    SphereAtom,
    // counting terms
    Count,
    IntConst,
    NumVar,
    Add,
    Mul,
};

bool is_formula_kind(NodeKind k);
bool is_term_kind(NodeKind k);

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// One AST node.  Expressions are immutable and shared; all operations on
// them are pure.
class Expr {
public:
    NodeKind kind;
    std::vector<ExprPtr> kids;

    // RelAtom/PredApp: symbol name.  ExistsStruct/ExistsNum: bound variable.
    // NumVar: variable name.
    std::string name;
    // Equal: the two variables.  RelAtom: argument tuple.  Count: binder
    // tuple.  SphereAtom: centre variable tuple.
    std::vector<std::string> vars;
    Int value; // IntConst

    TypeId type_id;                            // SphereAtom
    std::shared_ptr<const SphereType> sphere;  // SphereAtom, resolved

    bool is_formula() const { return is_formula_kind(kind); }
    bool is_term() const { return is_term_kind(kind); }
};

ExprPtr make_equal(const std::string& x1, const std::string& x2);
ExprPtr make_rel(const std::string& name, std::vector<std::string> args);
ExprPtr make_not(ExprPtr f);
ExprPtr make_or(ExprPtr a, ExprPtr b);
ExprPtr make_and(ExprPtr a, ExprPtr b);      // desugars to ~(~a | ~b)
ExprPtr make_implies(ExprPtr a, ExprPtr b);  // desugars to (~a | b)
ExprPtr make_exists(const std::string& var, ExprPtr f);
ExprPtr make_forall(const std::string& var, ExprPtr f);  // desugars
ExprPtr make_exists_num(const std::string& var, ExprPtr f);
ExprPtr make_forall_num(const std::string& var, ExprPtr f);  // desugars
ExprPtr make_pred(const std::string& name, std::vector<ExprPtr> terms);
ExprPtr make_sphere_atom(TypeId id, std::shared_ptr<const SphereType> type,
                         std::vector<std::string> centres);
ExprPtr make_count(std::vector<std::string> binders, ExprPtr f);
ExprPtr make_int(Int v);
ExprPtr make_num_var(const std::string& name);
ExprPtr make_add(ExprPtr a, ExprPtr b);
ExprPtr make_mul(ExprPtr a, ExprPtr b);

// Boolean constants, encoded with the always-present `exists` predicate:
// true = (pred exists 1), false = (pred exists 0).
ExprPtr make_true();
ExprPtr make_false();
bool is_true_literal(const Expr& e);
bool is_false_literal(const Expr& e);

// Canonical text form; parse(print(e)) reproduces e.
std::string print(const Expr& e);
inline std::string print(const ExprPtr& e) { return print(*e); }

// Structural equality via the canonical text form.
bool equal(const Expr& a, const Expr& b);

// Builds a right-nested disjunction; empty input yields false.
ExprPtr make_or_chain(const std::vector<ExprPtr>& disjuncts);
// Builds a conjunction chain; empty input yields true.
ExprPtr make_and_chain(const std::vector<ExprPtr>& conjuncts);

} // namespace hanfkit
