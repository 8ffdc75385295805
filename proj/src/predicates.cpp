#include "hanfkit/predicates.hpp"

#include "hanfkit/errors.hpp"

namespace hanfkit {
namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// up:<u>$<v>: membership of n >= 0 in the set with characteristic sequence
// u v^omega (position 0 leftmost).
std::optional<Predicate> parse_up(const std::string& name) {
    if (name.rfind("up:", 0) != 0) return std::nullopt;
    std::string body = name.substr(3);
    auto dollar = body.find('$');
    if (dollar == std::string::npos) return std::nullopt;
    std::string u = body.substr(0, dollar);
    std::string v = body.substr(dollar + 1);
    if (v.empty()) return std::nullopt;
    for (char c : u + v)
        if (c != '0' && c != '1') return std::nullopt;
    return Predicate{name, 1, [u, v](const std::vector<Int>& args) {
                         const Int& n = args[0];
                         if (n < 0) return false;
                         Int ulen = static_cast<long long>(u.size());
                         if (n < ulen) return u[static_cast<std::size_t>(n)] == '1';
                         Int pos = (n - ulen) % static_cast<long long>(v.size());
                         return v[static_cast<std::size_t>(pos)] == '1';
                     }};
}

} // namespace

PredicateCollection::PredicateCollection() {
    add({exists_name(), 1, [](const std::vector<Int>& a) { return a[0] >= 1; }});
    add({"prime", 1, [](const std::vector<Int>& a) { return is_prime(a[0]); }});
    add({"eq", 2, [](const std::vector<Int>& a) { return a[0] == a[1]; }});
    add({"leq", 2, [](const std::vector<Int>& a) { return a[0] <= a[1]; }});
    add({"add", 3, [](const std::vector<Int>& a) { return a[0] + a[1] == a[2]; }});
    add({"mul", 3, [](const std::vector<Int>& a) { return a[0] * a[1] == a[2]; }});
    // For gap scans: the factorials, a standard example of a set with large
    // gaps.
    add({"factorial", 1, [](const std::vector<Int>& a) {
             if (a[0] < 1) return false;
             Int f = 1;
             for (Int i = 1; f <= a[0]; ++i) {
                 f *= i;
                 if (f == a[0]) return true;
             }
             return false;
         }});
}

void PredicateCollection::add(Predicate pred) { entries_[pred.name] = std::move(pred); }

std::optional<Predicate> PredicateCollection::resolve(const std::string& name) const {
    auto it = entries_.find(name);
    if (it != entries_.end()) return it->second;

    if (name.rfind("div", 0) == 0 && all_digits(name.substr(3))) {
        long long p = std::stoll(name.substr(3));
        if (p >= 1) {
            Predicate pred{name, 1, [p](const std::vector<Int>& a) { return a[0] % p == 0; }};
            entries_[name] = pred;
            return pred;
        }
    }
    if (name.rfind("geq", 0) == 0 && all_digits(name.substr(3))) {
        long long k = std::stoll(name.substr(3));
        Predicate pred{name, 1, [k](const std::vector<Int>& a) { return a[0] >= k; }};
        entries_[name] = pred;
        return pred;
    }
    if (auto up = parse_up(name)) {
        entries_[name] = *up;
        return up;
    }
    return std::nullopt;
}

bool PredicateCollection::evaluate(const std::string& name, const std::vector<Int>& args) const {
    auto pred = resolve(name);
    if (!pred) throw OracleError("unknown predicate " + name);
    if (static_cast<int>(args.size()) != pred->arity)
        throw OracleError("predicate " + name + " arity mismatch");
    return pred->member(args);
}

} // namespace hanfkit
