#include "hanfkit/structure.hpp"

#include "hanfkit/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace hanfkit {

Structure::Structure(Signature sig, int universe_size,
                     std::vector<std::vector<Tuple>> tuples_per_relation)
    : sig_(std::move(sig)), n_(universe_size), rels_(std::move(tuples_per_relation)) {
    if (n_ < 0) throw ValidationError("negative universe size");
    if (rels_.size() != sig_.relations().size())
        throw ValidationError("tuple lists do not match the signature");
    adj_.assign(static_cast<std::size_t>(n_), {});
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(n_),
                                        std::vector<char>(static_cast<std::size_t>(n_), 0));
    for (std::size_t ri = 0; ri < rels_.size(); ++ri) {
        const int arity = sig_.relations()[ri].arity;
        auto& tuples = rels_[ri];
        std::sort(tuples.begin(), tuples.end());
        tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
        for (const auto& t : tuples) {
            if (static_cast<int>(t.size()) != arity)
                throw ValidationError("tuple arity mismatch in relation " +
                                      sig_.relations()[ri].name);
            for (ElemId a : t)
                if (a < 0 || a >= n_)
                    throw ValidationError("tuple component outside the universe");
            for (std::size_t i = 0; i < t.size(); ++i)
                for (std::size_t j = i + 1; j < t.size(); ++j) {
                    ElemId a = t[i], b = t[j];
                    if (a == b) continue;
                    if (!seen[a][b]) {
                        seen[a][b] = seen[b][a] = 1;
                        adj_[a].push_back(b);
                        adj_[b].push_back(a);
                    }
                }
        }
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Structure::has_tuple(std::size_t rel_index, const Tuple& t) const {
    const auto& tuples = rels_[rel_index];
    return std::binary_search(tuples.begin(), tuples.end(), t);
}

int Structure::gaifman_degree() const {
    int deg = 0;
    for (const auto& nb : adj_) deg = std::max(deg, static_cast<int>(nb.size()));
    return deg;
}

void Structure::check_element(ElemId a) const {
    if (a < 0 || a >= n_) throw ValidationError("element outside the universe");
}

std::optional<int> Structure::distance(const Tuple& from, ElemId to) const {
    check_element(to);
    std::vector<int> dist(static_cast<std::size_t>(n_), -1);
    std::deque<ElemId> queue;
    for (ElemId a : from) {
        check_element(a);
        if (dist[a] < 0) {
            dist[a] = 0;
            queue.push_back(a);
        }
    }
    while (!queue.empty()) {
        ElemId a = queue.front();
        queue.pop_front();
        if (a == to) return dist[a];
        for (ElemId b : adj_[a])
            if (dist[b] < 0) {
                dist[b] = dist[a] + 1;
                queue.push_back(b);
            }
    }
    return dist[to] >= 0 ? std::optional<int>(dist[to]) : std::nullopt;
}

std::vector<ElemId> Structure::neighbourhood(const Tuple& centres, int radius) const {
    std::vector<int> dist(static_cast<std::size_t>(n_), -1);
    std::deque<ElemId> queue;
    for (ElemId a : centres) {
        check_element(a);
        if (dist[a] < 0) {
            dist[a] = 0;
            queue.push_back(a);
        }
    }
    std::vector<ElemId> result;
    while (!queue.empty()) {
        ElemId a = queue.front();
        queue.pop_front();
        result.push_back(a);
        if (dist[a] == radius) continue;
        for (ElemId b : adj_[a])
            if (dist[b] < 0) {
                dist[b] = dist[a] + 1;
                queue.push_back(b);
            }
    }
    std::sort(result.begin(), result.end());
    return result;
}

Structure Structure::induced(const std::vector<ElemId>& elements) const {
    std::vector<int> newid(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        check_element(elements[i]);
        newid[elements[i]] = static_cast<int>(i);
    }
    std::vector<std::vector<Tuple>> tuples(rels_.size());
    for (std::size_t ri = 0; ri < rels_.size(); ++ri) {
        for (const auto& t : rels_[ri]) {
            Tuple mapped;
            mapped.reserve(t.size());
            bool inside = true;
            for (ElemId a : t) {
                if (newid[a] < 0) {
                    inside = false;
                    break;
                }
                mapped.push_back(newid[a]);
            }
            if (inside) tuples[ri].push_back(std::move(mapped));
        }
    }
    return Structure(sig_, static_cast<int>(elements.size()), std::move(tuples));
}

std::vector<std::vector<ElemId>> Structure::components() const {
    std::vector<std::vector<ElemId>> out;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (ElemId start = 0; start < n_; ++start) {
        if (seen[start]) continue;
        std::vector<ElemId> comp;
        std::deque<ElemId> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            ElemId a = queue.front();
            queue.pop_front();
            comp.push_back(a);
            for (ElemId b : adj_[a])
                if (!seen[b]) {
                    seen[b] = 1;
                    queue.push_back(b);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::string Structure::serialize() const {
    std::ostringstream out;
    out << n_ << '|';
    for (std::size_t ri = 0; ri < rels_.size(); ++ri) {
        out << sig_.relations()[ri].name << ':';
        for (const auto& t : rels_[ri]) {
            for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
            out << ' ';
        }
        out << '|';
    }
    return out.str();
}

Int nu(int d, int r) {
    if (d < 0 || r < 0) throw ValidationError("nu expects non-negative arguments");
    Int acc = 1;
    Int power = 1;  // (d-1)^i
    for (int i = 0; i < r; ++i) {
        acc += Int(d) * power;
        power *= (d - 1);
    }
    return acc;
}

Structure read_structure(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int universe = -1;
    std::vector<Signature::Relation> rels;
    std::vector<std::vector<Tuple>> tuples;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "universe") {
            if (!(ls >> universe) || universe < 0)
                throw ParseError("bad universe line", lineno, 1);
        } else if (word == "rel") {
            std::string name;
            int arity;
            if (!(ls >> name >> arity) || arity < 1)
                throw ParseError("bad rel line", lineno, 1);
            rels.push_back({name, arity});
            tuples.emplace_back();
        } else {
            // tuple line: NAME e1 e2 ...
            std::size_t ri = rels.size();
            for (std::size_t i = 0; i < rels.size(); ++i)
                if (rels[i].name == word) ri = i;
            if (ri == rels.size())
                throw ParseError("tuple for undeclared relation " + word, lineno, 1);
            Tuple t;
            long long e;
            while (ls >> e) t.push_back(static_cast<ElemId>(e));
            if (static_cast<int>(t.size()) != rels[ri].arity)
                throw ParseError("tuple arity mismatch for " + word, lineno, 1);
            tuples[ri].push_back(std::move(t));
        }
    }
    if (universe < 0) throw ValidationError("structure text without a universe line");
    return Structure(Signature(rels), universe, std::move(tuples));
}

std::string write_structure(const Structure& s) {
    std::ostringstream out;
    out << "universe " << s.size() << '\n';
    for (std::size_t ri = 0; ri < s.sig().relations().size(); ++ri) {
        const auto& rel = s.sig().relations()[ri];
        out << "rel " << rel.name << ' ' << rel.arity << '\n';
        for (const auto& t : s.tuples(ri)) {
            out << rel.name;
            for (ElemId a : t) out << ' ' << a;
            out << '\n';
        }
    }
    return out.str();
}

} // namespace hanfkit
