#include "hanfkit/expr.hpp"

#include "hanfkit/errors.hpp"
#include "hanfkit/predicates.hpp"
#include "hanfkit/sphere.hpp"

#include <sstream>

namespace hanfkit {

bool is_formula_kind(NodeKind k) {
    switch (k) {
        case NodeKind::Equal:
        case NodeKind::RelAtom:
        case NodeKind::Not:
        case NodeKind::Or:
        case NodeKind::ExistsStruct:
        case NodeKind::ExistsNum:
        case NodeKind::PredApp:
        case NodeKind::SphereAtom:
            return true;
        default:
            return false;
    }
}

bool is_term_kind(NodeKind k) { return !is_formula_kind(k); }

std::string TypeId::str() const {
    std::ostringstream out;
    out << "t:" << sig_hash << ':' << d << ':' << r << ':' << k << ':' << index;
    return out.str();
}

std::optional<TypeId> TypeId::parse(const std::string& text) {
    if (text.rfind("t:", 0) != 0) return std::nullopt;
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text.substr(2)) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 5) return std::nullopt;
    try {
        TypeId id;
        id.sig_hash = parts[0];
        id.d = std::stoi(parts[1]);
        id.r = std::stoi(parts[2]);
        id.k = std::stoi(parts[3]);
        id.index = static_cast<std::size_t>(std::stoull(parts[4]));
        if (id.d < 0 || id.r < 0 || id.k < 1) return std::nullopt;
        return id;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

namespace {

std::shared_ptr<Expr> node(NodeKind kind) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    return e;
}

void require_formula(const ExprPtr& e, const char* where) {
    if (!e || !e->is_formula()) throw ValidationError(std::string(where) + ": expected a formula");
}

void require_term(const ExprPtr& e, const char* where) {
    if (!e || !e->is_term()) throw ValidationError(std::string(where) + ": expected a counting term");
}

} // namespace

ExprPtr make_equal(const std::string& x1, const std::string& x2) {
    auto e = node(NodeKind::Equal);
    e->vars = {x1, x2};
    return e;
}

ExprPtr make_rel(const std::string& name, std::vector<std::string> args) {
    auto e = node(NodeKind::RelAtom);
    e->name = name;
    e->vars = std::move(args);
    return e;
}

ExprPtr make_not(ExprPtr f) {
    require_formula(f, "not");
    auto e = node(NodeKind::Not);
    e->kids = {std::move(f)};
    return e;
}

ExprPtr make_or(ExprPtr a, ExprPtr b) {
    require_formula(a, "or");
    require_formula(b, "or");
    auto e = node(NodeKind::Or);
    e->kids = {std::move(a), std::move(b)};
    return e;
}

ExprPtr make_and(ExprPtr a, ExprPtr b) { return make_not(make_or(make_not(a), make_not(b))); }

ExprPtr make_implies(ExprPtr a, ExprPtr b) { return make_or(make_not(a), std::move(b)); }

ExprPtr make_exists(const std::string& var, ExprPtr f) {
    require_formula(f, "ex");
    auto e = node(NodeKind::ExistsStruct);
    e->name = var;
    e->kids = {std::move(f)};
    return e;
}

ExprPtr make_forall(const std::string& var, ExprPtr f) {
    return make_not(make_exists(var, make_not(std::move(f))));
}

ExprPtr make_exists_num(const std::string& var, ExprPtr f) {
    require_formula(f, "exn");
    auto e = node(NodeKind::ExistsNum);
    e->name = var;
    e->kids = {std::move(f)};
    return e;
}

ExprPtr make_forall_num(const std::string& var, ExprPtr f) {
    return make_not(make_exists_num(var, make_not(std::move(f))));
}

ExprPtr make_pred(const std::string& name, std::vector<ExprPtr> terms) {
    for (const auto& t : terms) require_term(t, "pred");
    auto e = node(NodeKind::PredApp);
    e->name = name;
    e->kids = std::move(terms);
    return e;
}

ExprPtr make_sphere_atom(TypeId id, std::shared_ptr<const SphereType> type,
                         std::vector<std::string> centres) {
    if (!type) throw ValidationError("sphere atom without a resolved type");
    if (static_cast<int>(centres.size()) != type->k())
        throw ValidationError("sphere atom centre count does not match the type");
    auto e = node(NodeKind::SphereAtom);
    e->type_id = std::move(id);
    e->sphere = std::move(type);
    e->vars = std::move(centres);
    return e;
}

ExprPtr make_count(std::vector<std::string> binders, ExprPtr f) {
    require_formula(f, "#");
    if (binders.empty()) throw ValidationError("# needs at least one bound variable");
    for (std::size_t i = 0; i < binders.size(); ++i)
        for (std::size_t j = i + 1; j < binders.size(); ++j)
            if (binders[i] == binders[j])
                throw ValidationError("repeated variable " + binders[i] + " in a count tuple");
    auto e = node(NodeKind::Count);
    e->vars = std::move(binders);
    e->kids = {std::move(f)};
    return e;
}

ExprPtr make_int(Int v) {
    auto e = node(NodeKind::IntConst);
    e->value = std::move(v);
    return e;
}

ExprPtr make_num_var(const std::string& name) {
    auto e = node(NodeKind::NumVar);
    e->name = name;
    return e;
}

ExprPtr make_add(ExprPtr a, ExprPtr b) {
    require_term(a, "+");
    require_term(b, "+");
    auto e = node(NodeKind::Add);
    e->kids = {std::move(a), std::move(b)};
    return e;
}

ExprPtr make_mul(ExprPtr a, ExprPtr b) {
    require_term(a, "*");
    require_term(b, "*");
    auto e = node(NodeKind::Mul);
    e->kids = {std::move(a), std::move(b)};
    return e;
}

ExprPtr make_true() { return make_pred(PredicateCollection::exists_name(), {make_int(1)}); }
ExprPtr make_false() { return make_pred(PredicateCollection::exists_name(), {make_int(0)}); }

namespace {
bool is_exists_const(const Expr& e, int v) {
    return e.kind == NodeKind::PredApp && e.name == PredicateCollection::exists_name() &&
           e.kids.size() == 1 && e.kids[0]->kind == NodeKind::IntConst && e.kids[0]->value == v;
}
} // namespace

bool is_true_literal(const Expr& e) { return is_exists_const(e, 1); }
bool is_false_literal(const Expr& e) { return is_exists_const(e, 0); }

namespace {

void print_rec(const Expr& e, std::ostream& out) {
    switch (e.kind) {
        case NodeKind::Equal:
            out << "(= " << e.vars[0] << ' ' << e.vars[1] << ')';
            break;
        case NodeKind::RelAtom:
            out << '(' << e.name;
            for (const auto& v : e.vars) out << ' ' << v;
            out << ')';
            break;
        case NodeKind::Not:
            out << "(not ";
            print_rec(*e.kids[0], out);
            out << ')';
            break;
        case NodeKind::Or:
            out << "(or ";
            print_rec(*e.kids[0], out);
            out << ' ';
            print_rec(*e.kids[1], out);
            out << ')';
            break;
        case NodeKind::ExistsStruct:
            out << "(ex " << e.name << ' ';
            print_rec(*e.kids[0], out);
            out << ')';
            break;
        case NodeKind::ExistsNum:
            out << "(exn %" << e.name << ' ';
            print_rec(*e.kids[0], out);
            out << ')';
            break;
        case NodeKind::PredApp:
            out << "(pred " << e.name;
            for (const auto& t : e.kids) {
                out << ' ';
                print_rec(*t, out);
            }
            out << ')';
            break;
        case NodeKind::SphereAtom:
            out << "(sphere " << e.type_id.str();
            for (const auto& v : e.vars) out << ' ' << v;
            out << ')';
            break;
        case NodeKind::Count:
            out << "(# (";
            for (std::size_t i = 0; i < e.vars.size(); ++i) {
                if (i) out << ' ';
                out << e.vars[i];
            }
            out << ") ";
            print_rec(*e.kids[0], out);
            out << ')';
            break;
        case NodeKind::IntConst:
            out << e.value;
            break;
        case NodeKind::NumVar:
            // arithmetic-emission variables v:<type-id> print bare
            if (e.name.rfind("v:", 0) == 0)
                out << e.name;
            else
                out << '%' << e.name;
            break;
        case NodeKind::Add:
            out << "(+ ";
            print_rec(*e.kids[0], out);
            out << ' ';
            print_rec(*e.kids[1], out);
            out << ')';
            break;
        case NodeKind::Mul:
            out << "(* ";
            print_rec(*e.kids[0], out);
            out << ' ';
            print_rec(*e.kids[1], out);
            out << ')';
            break;
    }
}

} // namespace

std::string print(const Expr& e) {
    std::ostringstream out;
    print_rec(e, out);
    return out.str();
}

bool equal(const Expr& a, const Expr& b) { return print(a) == print(b); }

ExprPtr make_or_chain(const std::vector<ExprPtr>& disjuncts) {
    if (disjuncts.empty()) return make_false();
    ExprPtr acc = disjuncts.back();
    for (auto it = disjuncts.rbegin() + 1; it != disjuncts.rend(); ++it) acc = make_or(*it, acc);
    return acc;
}

ExprPtr make_and_chain(const std::vector<ExprPtr>& conjuncts) {
    if (conjuncts.empty()) return make_true();
    ExprPtr acc = conjuncts.back();
    for (auto it = conjuncts.rbegin() + 1; it != conjuncts.rend(); ++it) acc = make_and(*it, acc);
    return acc;
}

} // namespace hanfkit
