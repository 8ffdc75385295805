#pragma once

#include "hanfkit/ints.hpp"
#include "hanfkit/signature.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hanfkit {

using ElemId = int;
using Tuple = std::vector<ElemId>;

// A finite relational structure over a dense 0-based universe.  Immutable
// after construction; the Gaifman adjacency is precomputed.
//
// The empty universe is permitted (the dynamic-database engine needs it);
// operations on it are vacuous.
class Structure {
public:
    Structure(Signature sig, int universe_size,
              std::vector<std::vector<Tuple>> tuples_per_relation);

    const Signature& sig() const { return sig_; }
    int size() const { return n_; }
    const std::vector<Tuple>& tuples(std::size_t rel_index) const { return rels_[rel_index]; }
    const std::vector<std::vector<Tuple>>& all_tuples() const { return rels_; }
    bool has_tuple(std::size_t rel_index, const Tuple& t) const;

    const std::vector<ElemId>& neighbours(ElemId a) const { return adj_[a]; }
    int gaifman_degree() const;
    int degree_of(ElemId a) const { return static_cast<int>(adj_[a].size()); }

    // BFS distance to the nearest element of the tuple; nullopt means
    // unreachable.
    std::optional<int> distance(const Tuple& from, ElemId to) const;

    // N_r(a-bar): all elements within distance r, sorted.
    std::vector<ElemId> neighbourhood(const Tuple& centres, int radius) const;

    // Induced substructure on a sorted element set; `mapping[i]` is the old
    // id of new element i.
    Structure induced(const std::vector<ElemId>& elements) const;

    // Connected components of the Gaifman graph, each sorted, ordered by
    // smallest element.
    std::vector<std::vector<ElemId>> components() const;
    bool connected() const { return size() <= 1 || components().size() == 1; }

    std::string serialize() const;

private:
    void check_element(ElemId a) const;

    Signature sig_;
    int n_ = 0;
    std::vector<std::vector<Tuple>> rels_;
    std::vector<std::vector<ElemId>> adj_;
};

// nu_d(r) = 1 + d * sum_{0 <= i < r} (d-1)^i, the neighbourhood-size bound
// for degree-d structures; nu_d(0) = 1.
Int nu(int d, int r);

// Structure text format:
//   universe N
//   rel NAME ARITY
//   NAME e1 e2 ...
// with '#' comments.
Structure read_structure(const std::string& text);
std::string write_structure(const Structure& s);

} // namespace hanfkit
