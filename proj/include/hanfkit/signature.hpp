#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hanfkit {

// A finite relational signature: named relation symbols with positive
// arities.  Constant symbols are intentionally unsupported.
class Signature {
public:
    struct Relation {
        std::string name;
        int arity = 1;
    };

    Signature() = default;
    explicit Signature(std::vector<Relation> relations);

    const std::vector<Relation>& relations() const { return relations_; }
    std::optional<int> arity_of(const std::string& name) const;
    bool has_relation(const std::string& name) const { return arity_of(name).has_value(); }
    std::optional<std::size_t> index_of(const std::string& name) const;

    // Sum of arities (no constant symbols by construction).
    int size() const;

    std::string serialize() const;
    // Short stable digest used in catalog type-ids.
    std::string hash() const;

    bool operator==(const Signature& other) const { return serialize() == other.serialize(); }

private:
    std::vector<Relation> relations_;
};

} // namespace hanfkit
