#include "hanfkit/signature.hpp"

#include "hanfkit/errors.hpp"

#include <set>
#include <sstream>

namespace hanfkit {

Signature::Signature(std::vector<Relation> relations) : relations_(std::move(relations)) {
    std::set<std::string> seen;
    for (const auto& rel : relations_) {
        if (rel.name.empty()) throw ValidationError("relation with empty name");
        if (rel.arity < 1)
            throw ValidationError("relation " + rel.name + " has non-positive arity");
        if (!seen.insert(rel.name).second)
            throw ValidationError("duplicate relation name " + rel.name);
    }
}

std::optional<int> Signature::arity_of(const std::string& name) const {
    for (const auto& rel : relations_)
        if (rel.name == name) return rel.arity;
    return std::nullopt;
}

std::optional<std::size_t> Signature::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < relations_.size(); ++i)
        if (relations_[i].name == name) return i;
    return std::nullopt;
}

int Signature::size() const {
    int total = 0;
    for (const auto& rel : relations_) total += rel.arity;
    return total;
}

std::string Signature::serialize() const {
    std::ostringstream out;
    for (const auto& rel : relations_) out << rel.name << '/' << rel.arity << ';';
    return out.str();
}

std::string Signature::hash() const {
    // FNV-1a over the serialisation, truncated to 8 hex digits.
    std::uint64_t h = 1469598103934665603ull;
    for (char c : serialize()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (int i = 0; i < 8; ++i) {
        out.push_back(digits[h & 0xf]);
        h >>= 4;
    }
    return out;
}

} // namespace hanfkit
