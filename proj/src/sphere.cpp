#include "hanfkit/sphere.hpp"

#include "hanfkit/errors.hpp"

#include <algorithm>

namespace hanfkit {

namespace {

constexpr int kMaxPermutedElements = 9;

// Serialises base under the element renaming `newid` into out:
// [n, k, centre ids..., per relation: tuple count, sorted remapped tuples].
void serialize_mapped(const Structure& base, const Tuple& centres, const std::vector<int>& newid,
                      std::string& out) {
    out.clear();
    out.push_back(static_cast<char>(base.size()));
    out.push_back(static_cast<char>(centres.size()));
    for (ElemId c : centres) out.push_back(static_cast<char>(newid[c]));
    std::vector<Tuple> scratch;
    for (std::size_t ri = 0; ri < base.all_tuples().size(); ++ri) {
        const auto& tuples = base.tuples(ri);
        scratch.clear();
        scratch.reserve(tuples.size());
        for (const auto& t : tuples) {
            Tuple mapped(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) mapped[i] = newid[t[i]];
            scratch.push_back(std::move(mapped));
        }
        std::sort(scratch.begin(), scratch.end());
        out.push_back(static_cast<char>(scratch.size() & 0xff));
        out.push_back(static_cast<char>((scratch.size() >> 8) & 0xff));
        for (const auto& t : scratch)
            for (ElemId a : t) out.push_back(static_cast<char>(a));
    }
}

} // namespace

std::string canonical_encoding(const Structure& base, const Tuple& centres) {
    const int n = base.size();
    std::vector<int> newid(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (ElemId c : centres) {
        if (c < 0 || c >= n) throw ValidationError("centre outside the universe");
        if (newid[c] < 0) newid[c] = next++;
    }
    std::vector<ElemId> rest;
    for (ElemId a = 0; a < n; ++a)
        if (newid[a] < 0) rest.push_back(a);
    if (static_cast<int>(rest.size()) > kMaxPermutedElements)
        throw CapExceeded("sphere with " + std::to_string(rest.size()) +
                          " non-centre elements is too large to canonicalise");

    std::vector<int> perm(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) perm[i] = static_cast<int>(i);

    std::string best, candidate;
    bool first = true;
    do {
        for (std::size_t i = 0; i < rest.size(); ++i) newid[rest[i]] = next + perm[i];
        serialize_mapped(base, centres, newid, candidate);
        if (first || candidate < best) {
            best.swap(candidate);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

SphereType::SphereType(Structure base, Tuple centres, int radius)
    : base_(std::move(base)), centres_(std::move(centres)), radius_(radius) {
    if (centres_.empty()) throw ValidationError("a type needs at least one centre");
    if (radius_ < 0) throw ValidationError("negative radius");
    auto hood = base_.neighbourhood(centres_, radius_);
    if (static_cast<int>(hood.size()) != base_.size())
        throw ValidationError("type universe is not the r-neighbourhood of its centres");
    canonical_ = canonical_encoding(base_, centres_);
}

SphereType sphere(const Structure& s, const Tuple& centres, int radius) {
    auto hood = s.neighbourhood(centres, radius);
    Structure ind = s.induced(hood);
    std::vector<int> newid(static_cast<std::size_t>(s.size()), -1);
    for (std::size_t i = 0; i < hood.size(); ++i) newid[hood[i]] = static_cast<int>(i);
    Tuple mapped;
    mapped.reserve(centres.size());
    for (ElemId c : centres) mapped.push_back(newid[c]);
    return SphereType(std::move(ind), std::move(mapped), radius);
}

SphereTypePtr sphere_ptr(const Structure& s, const Tuple& centres, int radius) {
    return std::make_shared<SphereType>(sphere(s, centres, radius));
}

bool is_isomorphic(const SphereType& a, const SphereType& b) {
    if (!(a.base().sig() == b.base().sig())) return false;
    if (a.k() != b.k()) return false;
    return a.canonical_key() == b.canonical_key();
}

} // namespace hanfkit
