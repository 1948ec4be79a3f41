#ifndef RAAG_TESTS_ORACLES_HPP
#define RAAG_TESTS_ORACLES_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "raag/graph.hpp"
#include "raag/words.hpp"

// Brute-force oracles, independent of the library's normal-form engine and
// clique search. The word oracle enumerates the full equivalence class of a
// word under adjacent commuting swaps and adjacent inverse cancellations;
// the class of minimum-length members is exactly the set of reduced words of
// the element, and its lexicographic minimum is a canonical form.
namespace oracles {

// Word encoding for the oracle: two chars per letter, vertex index then sign.
inline std::string encode_word(const raag::DefiningGraph& g, const raag::GroupWord& w) {
    std::string s;
    s.reserve(w.size() * 2);
    for (const raag::Letter& l : w) {
        s.push_back(static_cast<char>('a' + g.index_of(l.vertex)));
        s.push_back(l.sign > 0 ? '+' : '-');
    }
    return s;
}

class WordOracle {
public:
    explicit WordOracle(const raag::DefiningGraph& g) : g_(g) {}

    // Lexicographically least minimum-length member of the closure of w under
    // swaps of adjacent commuting letters and deletions of adjacent inverse
    // pairs. Two words represent the same group element iff these agree.
    std::string canonical(const raag::GroupWord& w) {
        std::string start = encode_word(g_, w);
        auto hit = memo_.find(start);
        if (hit != memo_.end()) return hit->second;

        std::unordered_set<std::string> seen{start};
        std::deque<std::string> queue{start};
        while (!queue.empty()) {
            std::string cur = queue.front();
            queue.pop_front();
            std::size_t len = cur.size() / 2;
            for (std::size_t i = 0; i + 1 < len; ++i) {
                std::size_t u = static_cast<std::size_t>(cur[2 * i] - 'a');
                std::size_t v = static_cast<std::size_t>(cur[2 * i + 2] - 'a');
                if (u == v && cur[2 * i + 1] != cur[2 * i + 3]) {
                    std::string next = cur.substr(0, 2 * i) + cur.substr(2 * i + 4);
                    if (seen.insert(next).second) queue.push_back(next);
                }
                if (u != v && g_.adjacent(u, v)) {
                    std::string next = cur;
                    std::swap(next[2 * i], next[2 * i + 2]);
                    std::swap(next[2 * i + 1], next[2 * i + 3]);
                    if (seen.insert(next).second) queue.push_back(next);
                }
            }
        }

        std::size_t best_len = start.size() + 1;
        const std::string* best = nullptr;
        for (const std::string& s : seen) {
            if (s.size() < best_len || (s.size() == best_len && s < *best)) {
                best_len = s.size();
                best = &s;
            }
        }
        std::string canon = *best;
        for (const std::string& s : seen) memo_.emplace(s, canon);
        return canon;
    }

    bool equal(const raag::GroupWord& w1, const raag::GroupWord& w2) {
        return canonical(w1) == canonical(w2);
    }

private:
    raag::DefiningGraph g_;
    std::unordered_map<std::string, std::string> memo_;
};

// Maximum clique by subset enumeration (graphs up to ~20 vertices).
inline std::size_t brute_clique(const raag::DefiningGraph& g) {
    std::size_t n = g.vertex_count();
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool clique = true;
        for (std::size_t i = 0; i < n && clique; ++i)
            for (std::size_t j = i + 1; j < n && clique; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && !g.adjacent(i, j)) clique = false;
        if (clique)
            best = std::max(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
    }
    return best;
}

// Cone-closure size by repeated removal, written against the definition
// rather than the library's induced_subgraph machinery.
inline std::size_t cone_closure_size(const raag::DefiningGraph& g) {
    std::size_t n = g.vertex_count();
    std::vector<char> alive(n, 1);
    std::size_t removed = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            bool cone = true;
            for (std::size_t u = 0; u < n && cone; ++u)
                if (u != v && alive[u] && !g.adjacent(v, u)) cone = false;
            if (cone) {
                alive[v] = 0;
                ++removed;
                changed = true;
            }
        }
    }
    return removed;
}

inline raag::GroupWord random_word(const raag::DefiningGraph& g, std::mt19937_64& rng,
                                   std::size_t max_len) {
    raag::GroupWord w;
    if (g.vertex_count() == 0) return w;
    std::size_t len = static_cast<std::size_t>(rng() % (max_len + 1));
    for (std::size_t i = 0; i < len; ++i) {
        std::size_t v = static_cast<std::size_t>(rng() % g.vertex_count());
        w.push_back({g.label(v), (rng() & 1) ? 1 : -1});
    }
    return w;
}

} // namespace oracles

#endif // RAAG_TESTS_ORACLES_HPP
