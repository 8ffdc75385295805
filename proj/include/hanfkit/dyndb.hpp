#pragma once

#include "hanfkit/hnf.hpp"
#include "hanfkit/modelcheck.hpp"
#include "hanfkit/structure.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hanfkit {

using DomValue = std::uint64_t;
using DomTuple = std::vector<DomValue>;

// A relational database over the infinite domain of naturals.  External
// values map to dense internal ids (free-listed); the active domain is
// reference-counted by tuple occurrences, and per-element Gaifman neighbour
// multisets keep the degree check O(arity^2) per command.
class Database {
public:
    explicit Database(Signature sig);

    const Signature& sig() const { return sig_; }
    bool has_tuple(std::size_t rel, const DomTuple& t) const;
    void insert(std::size_t rel, const DomTuple& t);
    void erase(std::size_t rel, const DomTuple& t);

    // Gaifman degree of the value after hypothetically applying the insert;
    // used by the insertion guard.
    bool insert_within_degree(std::size_t rel, const DomTuple& t, int degree_bound) const;

    std::size_t cardinality() const { return card_; }
    std::vector<DomValue> active_domain() const;
    int degree() const;

    // Elements of N_r(values) in the current database, as external values.
    std::vector<DomValue> neighbourhood(const std::vector<DomValue>& values, int radius) const;

    // The r-sphere of a value, canonically encoded (1 centre).
    std::string sphere_key(DomValue value, int radius) const;

    // Materialises the structure view A_D on the active domain; the second
    // component maps internal structure ids back to domain values.
    std::pair<Structure, std::vector<DomValue>> to_structure() const;

private:
    struct Elem {
        DomValue value = 0;
        std::size_t refcount = 0;
        std::map<int, int> neighbour_mult;  // internal id -> multiplicity
    };

    int intern(DomValue v);
    void release(int id);
    void add_edges(const DomTuple& t, int delta);

    Signature sig_;
    std::map<DomValue, int> value_to_id_;
    std::vector<Elem> elems_;
    std::vector<int> free_ids_;
    std::vector<std::set<DomTuple>> rels_;
    std::size_t card_ = 0;
};

struct UpdateCommand {
    enum Kind { Insert, Delete } kind = Insert;
    std::string relation;
    DomTuple tuple;
};

enum class UpdateResult { Applied, RejectedDegree, NoOp };

// Dynamic Boolean query answering: compiled HNF, one counter per distinct
// basic counting term, and a cached answer maintained under updates.
class QueryState {
public:
    // phi must be an FOC(P) sentence (no free variables, nqr = 0).
    QueryState(const ExprPtr& phi, int degree_bound, HnfCompiler& compiler);

    // init + |D0| inserts; throws if D0 violates the degree bound.
    void preprocess(const std::vector<std::pair<std::string, DomTuple>>& tuples);

    UpdateResult apply_update(const UpdateCommand& cmd);
    bool answer(OpCounters* counters = nullptr) const;

    const std::vector<Int>& counters() const { return counters_; }
    const std::vector<TypeId>& type_row() const { return type_row_; }
    const Database& db() const { return db_; }
    const HnfFormula& compiled() const { return compiled_; }

    // From-scratch recount of counter j; test oracle.
    Int recount(std::size_t j) const;

private:
    void recompute_answer();

    const PredicateCollection& preds_;
    HnfFormula compiled_;
    int degree_bound_;
    std::vector<TypeId> type_row_;
    std::vector<std::string> type_keys_;  // canonical key per row entry
    std::vector<int> radii_;
    Database db_;
    std::vector<Int> counters_;
    bool ans_ = false;
};

} // namespace hanfkit
