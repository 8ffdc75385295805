#include "hanfkit/enumerate.hpp"

#include "hanfkit/errors.hpp"

#include <algorithm>

namespace hanfkit {

namespace {

// Degree bookkeeping shared by the enumerator and the random generator.
// Gaifman edges are reference-counted by tuple co-occurrence.
struct DegreeTracker {
    int n;
    std::vector<int> pair_count;  // n*n co-occurrence counts
    std::vector<int> degree;

    explicit DegreeTracker(int size) : n(size), pair_count(size * size, 0), degree(size, 0) {}

    int& pairs(ElemId a, ElemId b) { return pair_count[a * n + b]; }

    // Adds the tuple's Gaifman edges; returns false (and rolls back) if the
    // degree bound would be exceeded.
    bool try_add(const Tuple& t, int bound) {
        apply(t, +1);
        for (ElemId a : t)
            if (degree[a] > bound) {
                apply(t, -1);
                return false;
            }
        return true;
    }

    void remove(const Tuple& t) { apply(t, -1); }

    void apply(const Tuple& t, int delta) {
        ElemId vals[16];
        int nvals = 0;
        for (ElemId a : t) {
            bool seen = false;
            for (int i = 0; i < nvals; ++i) seen = seen || vals[i] == a;
            if (!seen) vals[nvals++] = a;
        }
        for (int i = 0; i < nvals; ++i)
            for (int j = i + 1; j < nvals; ++j) {
                ElemId a = std::min(vals[i], vals[j]), b = std::max(vals[i], vals[j]);
                if (delta > 0) {
                    if (pairs(a, b)++ == 0) {
                        ++degree[a];
                        ++degree[b];
                    }
                } else {
                    if (--pairs(a, b) == 0) {
                        --degree[a];
                        --degree[b];
                    }
                }
            }
    }
};

std::vector<std::pair<std::size_t, Tuple>> all_slots(const Signature& sig, int size) {
    std::vector<std::pair<std::size_t, Tuple>> slots;
    for (std::size_t ri = 0; ri < sig.relations().size(); ++ri) {
        const int arity = sig.relations()[ri].arity;
        if (arity > 16) throw ValidationError("arity above 16 is not supported");
        Tuple t(arity, 0);
        while (true) {
            slots.emplace_back(ri, t);
            int pos = arity - 1;
            while (pos >= 0 && t[pos] == size - 1) t[pos--] = 0;
            if (pos < 0) break;
            ++t[pos];
        }
    }
    return slots;
}

struct Enumerator {
    const Signature& sig;
    int size;
    int bound;
    const std::function<bool(const Structure&)>& fn;
    std::vector<std::pair<std::size_t, Tuple>> slots;
    std::vector<std::size_t> included;
    DegreeTracker tracker;

    Enumerator(const Signature& s, int sz, int b, const std::function<bool(const Structure&)>& f)
        : sig(s), size(sz), bound(b), fn(f), slots(all_slots(s, sz)), tracker(sz) {}

    bool emit() {
        std::vector<std::vector<Tuple>> tuples(sig.relations().size());
        for (std::size_t si : included) tuples[slots[si].first].push_back(slots[si].second);
        return fn(Structure(sig, size, std::move(tuples)));
    }

    bool recurse(std::size_t start) {
        if (!emit()) return false;
        for (std::size_t next = start; next < slots.size(); ++next) {
            if (!tracker.try_add(slots[next].second, bound)) continue;
            included.push_back(next);
            bool go_on = recurse(next + 1);
            included.pop_back();
            tracker.remove(slots[next].second);
            if (!go_on) return false;
        }
        return true;
    }
};

} // namespace

bool for_each_structure(const Signature& sig, int size, int degree_bound,
                        const std::function<bool(const Structure&)>& fn) {
    if (size < 1) throw ValidationError("structure enumeration needs size >= 1");
    Enumerator e(sig, size, degree_bound, fn);
    return e.recurse(0);
}

bool for_each_structure_upto(const Signature& sig, int max_size, int degree_bound,
                             const std::function<bool(const Structure&)>& fn) {
    for (int size = 1; size <= max_size; ++size)
        if (!for_each_structure(sig, size, degree_bound, fn)) return false;
    return true;
}

Structure random_structure(const Signature& sig, int size, int degree_bound,
                           std::mt19937_64& rng) {
    if (size < 1) throw ValidationError("random structure needs size >= 1");
    auto slots = all_slots(sig, size);
    std::shuffle(slots.begin(), slots.end(), rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double density = 0.1 + 0.8 * unit(rng);
    // Aim for sparse-ish structures: the degree bound rejects most dense
    // attempts anyway.
    double keep = std::min(1.0, density * (2.0 + degree_bound) / (slots.empty() ? 1 : size));
    DegreeTracker tracker(size);
    std::vector<std::vector<Tuple>> tuples(sig.relations().size());
    for (const auto& [ri, t] : slots) {
        if (unit(rng) > keep) continue;
        if (!tracker.try_add(t, degree_bound)) continue;
        tuples[ri].push_back(t);
    }
    return Structure(sig, size, std::move(tuples));
}

} // namespace hanfkit
