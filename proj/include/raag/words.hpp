#ifndef RAAG_WORDS_HPP
#define RAAG_WORDS_HPP

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// A generator or its inverse.
struct Letter {
    std::string vertex;
    int sign = 1; // +1 or -1

    bool operator==(const Letter& o) const { return vertex == o.vertex && sign == o.sign; }
    bool operator!=(const Letter& o) const { return !(*this == o); }
};

// Possibly non-reduced word; the empty word is the identity.
using GroupWord = std::vector<Letter>;

inline GroupWord inverse(const GroupWord& w) {
    GroupWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->vertex, -it->sign});
    return out;
}

inline GroupWord concat(const GroupWord& a, const GroupWord& b) {
    GroupWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// w1 w2 w1^-1 w2^-1, formal concatenation with no reduction.
inline GroupWord commutator(const GroupWord& w1, const GroupWord& w2) {
    GroupWord out = concat(w1, w2);
    GroupWord i1 = inverse(w1), i2 = inverse(w2);
    out.insert(out.end(), i1.begin(), i1.end());
    out.insert(out.end(), i2.begin(), i2.end());
    return out;
}

// Canonical representative of a group element of A(Γ). Two words represent
// the same element iff their normal forms are identical letter sequences.
struct NormalWord {
    GroupWord letters;

    bool operator==(const NormalWord& o) const { return letters == o.letters; }
    bool operator!=(const NormalWord& o) const { return !(*this == o); }
};

namespace detail {

struct IdxLetter {
    std::size_t v;
    int s;
};

inline std::vector<IdxLetter> to_indices(const DefiningGraph& g, const GroupWord& w) {
    std::vector<IdxLetter> out;
    out.reserve(w.size());
    for (const Letter& l : w) {
        if (l.sign != 1 && l.sign != -1)
            throw error("letter sign must be +1 or -1");
        out.push_back({g.index_of(l.vertex), l.sign});
    }
    return out;
}

// Leftmost cancelling pair separated only by letters commuting with its
// vertex; true if one was removed.
inline bool cancel_leftmost(const DefiningGraph& g, std::vector<IdxLetter>& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[j].v == w[i].v) {
                if (w[j].s == -w[i].s) {
                    w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
                    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
                    return true;
                }
                break; // same-vertex letter blocks everything farther right
            }
            if (!g.adjacent(w[j].v, w[i].v))
                break;
        }
    }
    return false;
}

// Left-greedy ordering of a reduced word: repeatedly emit, among the letters
// whose earlier letters all commute with them, the one on the least vertex in
// declaration order. At most one letter per vertex is ever emittable, so the
// choice is unambiguous, and same-vertex syllables come out contiguous.
inline void left_greedy_order(const DefiningGraph& g, std::vector<IdxLetter>& w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> blockers(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (w[i].v == w[j].v || !g.adjacent(w[i].v, w[j].v))
                ++blockers[j];
    std::vector<char> emitted(n, 0);
    std::vector<IdxLetter> out;
    out.reserve(n);
    for (std::size_t round = 0; round < n; ++round) {
        std::size_t best = n;
        for (std::size_t p = 0; p < n; ++p)
            if (!emitted[p] && blockers[p] == 0 && (best == n || w[p].v < w[best].v))
                best = p;
        emitted[best] = 1;
        out.push_back(w[best]);
        for (std::size_t j = best + 1; j < n; ++j)
            if (!emitted[j] && (w[best].v == w[j].v || !g.adjacent(w[best].v, w[j].v)))
                --blockers[j];
    }
    w = std::move(out);
}

} // namespace detail

// Normal form: exhaustively delete cancelling pairs that are separated only
// by commuting letters (leftmost first, rescanning to a fixed point), then
// order the reduced word left-greedily. Idempotent.
inline NormalWord normal_form(const DefiningGraph& g, const GroupWord& w) {
    std::vector<detail::IdxLetter> idx = detail::to_indices(g, w);
    while (detail::cancel_leftmost(g, idx)) {
    }
    detail::left_greedy_order(g, idx);
    NormalWord out;
    out.letters.reserve(idx.size());
    for (const detail::IdxLetter& l : idx)
        out.letters.push_back({g.label(l.v), l.s});
    return out;
}

inline bool words_equal(const DefiningGraph& g, const GroupWord& w1, const GroupWord& w2) {
    return normal_form(g, w1) == normal_form(g, w2);
}

inline bool is_trivial(const DefiningGraph& g, const GroupWord& w) {
    return normal_form(g, w).letters.empty();
}

// Exponent-sum vector in vertex declaration order.
inline std::vector<long long> abelianize(const DefiningGraph& g, const GroupWord& w) {
    std::vector<long long> out(g.vertex_count(), 0);
    for (const Letter& l : w) {
        if (l.sign != 1 && l.sign != -1)
            throw error("letter sign must be +1 or -1");
        out[g.index_of(l.vertex)] += l.sign;
    }
    return out;
}

// The homomorphism A(Γ) → Z/mZ sending `distinguished` to 1 and every other
// generator to 0.
struct CyclicCharacter {
    DefiningGraph graph;
    std::string distinguished;
    unsigned long long modulus = 1;

    CyclicCharacter(DefiningGraph g, std::string v, unsigned long long m)
        : graph(std::move(g)), distinguished(std::move(v)), modulus(m) {
        if (modulus == 0)
            throw error("character modulus must be positive");
        graph.index_of(distinguished); // throws on unknown vertex
    }
};

// Image of w in Z/mZ, as a residue in [0, m).
inline unsigned long long character_image(const CyclicCharacter& chi, const GroupWord& w) {
    long long sum = abelianize(chi.graph, w)[chi.graph.index_of(chi.distinguished)];
    long long m = static_cast<long long>(chi.modulus);
    return static_cast<unsigned long long>(((sum % m) + m) % m);
}

// Word syntax: whitespace-separated tokens `label`, `label^-1`, or `label^k`
// (expanded to |k| letters with the sign of k; k may be 0).
inline GroupWord parse_word(const std::string& text) {
    GroupWord out;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        std::string label = token;
        long long exponent = 1;
        std::size_t caret = token.find('^');
        if (caret != std::string::npos) {
            label = token.substr(0, caret);
            std::string exp = token.substr(caret + 1);
            if (exp.empty())
                throw parse_error("empty exponent in token '" + token + "'");
            char* end = nullptr;
            exponent = std::strtoll(exp.c_str(), &end, 10);
            if (end == nullptr || *end != '\0')
                throw parse_error("bad exponent in token '" + token + "'");
        }
        if (label.empty())
            throw parse_error("empty generator label in token '" + token + "'");
        int sign = exponent < 0 ? -1 : 1;
        for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
            out.push_back({label, sign});
    }
    return out;
}

// Inverse of parse_word up to syllable grouping: runs of equal letters print
// as `label^k`. The empty word prints as "1".
inline std::string format_word(const GroupWord& w) {
    if (w.empty())
        return "1";
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        long long k = static_cast<long long>(j - i) * w[i].sign;
        if (!first) out << ' ';
        first = false;
        out << w[i].vertex;
        if (k != 1) out << '^' << k;
        i = j;
    }
    return out.str();
}

} // namespace raag

#endif // RAAG_WORDS_HPP
