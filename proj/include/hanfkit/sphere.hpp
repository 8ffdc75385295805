#pragma once

#include "hanfkit/structure.hpp"

#include <memory>
#include <string>

namespace hanfkit {

// An r-type with k centres: a structure whose universe is exactly the
// r-neighbourhood of the centre tuple.  The canonical encoding pins the
// centres pointwise and minimises over permutations of the remaining
// elements, so two types are isomorphic iff their encodings are equal.
class SphereType {
public:
    SphereType(Structure base, Tuple centres, int radius);

    const Structure& base() const { return base_; }
    const Tuple& centres() const { return centres_; }
    int radius() const { return radius_; }
    int k() const { return static_cast<int>(centres_.size()); }
    int size() const { return base_.size(); }

    const std::string& canonical_key() const { return canonical_; }

private:
    Structure base_;
    Tuple centres_;
    int radius_;
    std::string canonical_;
};

using SphereTypePtr = std::shared_ptr<const SphereType>;

// The r-sphere of a-bar in S: induced substructure on N_r(a-bar) with the
// centres re-indexed.
SphereType sphere(const Structure& s, const Tuple& centres, int radius);
SphereTypePtr sphere_ptr(const Structure& s, const Tuple& centres, int radius);

// Centre-pointwise isomorphism.  Radii are metadata and do not take part.
bool is_isomorphic(const SphereType& a, const SphereType& b);

// Canonical encoding of (structure, pinned centre tuple).  Exposed for the
// catalog and for tests.
std::string canonical_encoding(const Structure& base, const Tuple& centres);

} // namespace hanfkit
