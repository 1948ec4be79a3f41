#ifndef RAAG_GRAPH_HPP
#define RAAG_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace raag {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (graph files, word syntax). Distinct from `error`
// so callers can map it to a usage failure instead of a mathematical one.
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
    parse_error(std::size_t line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what) {}
};

// Finite simple graph with string-labeled vertices.
//
// Vertices keep their declaration order; that order fixes the coordinates of
// abelianized words and the canonical order used by normal forms. Labels are
// nonempty, contain no whitespace, and are unique. Edges are an irreflexive
// symmetric relation (no loops, no multi-edges). Instances are immutable
// after construction and safe to share across threads.
class DefiningGraph {
public:
    DefiningGraph() = default;

    DefiningGraph(std::vector<std::string> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges) {
        for (const std::string& label : vertices)
            add_vertex(label);
        for (const auto& [u, v] : edges)
            add_edge(u, v);
    }

    std::size_t vertex_count() const { return labels_.size(); }

    // Declaration order.
    const std::vector<std::string>& vertices() const { return labels_; }

    const std::string& label(std::size_t i) const { return labels_.at(i); }

    bool has_vertex(const std::string& label) const { return index_.count(label) != 0; }

    std::size_t index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end())
            throw error("unknown vertex '" + label + "'");
        return it->second;
    }

    bool adjacent(std::size_t i, std::size_t j) const { return adj_.at(i).at(j) != 0; }

    bool adjacent(const std::string& u, const std::string& v) const {
        return adjacent(index_of(u), index_of(v));
    }

    std::size_t degree(std::size_t i) const {
        std::size_t d = 0;
        for (std::size_t j = 0; j < vertex_count(); ++j)
            if (adj_[i][j]) ++d;
        return d;
    }

    std::size_t edge_count() const {
        std::size_t e = 0;
        for (std::size_t i = 0; i < vertex_count(); ++i)
            for (std::size_t j = i + 1; j < vertex_count(); ++j)
                if (adj_[i][j]) ++e;
        return e;
    }

    // Edges as label pairs, ordered by (index, index) with index(first) < index(second).
    std::vector<std::pair<std::string, std::string>> edges() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (std::size_t i = 0; i < vertex_count(); ++i)
            for (std::size_t j = i + 1; j < vertex_count(); ++j)
                if (adj_[i][j]) out.emplace_back(labels_[i], labels_[j]);
        return out;
    }

    // Identity of presentation data: same labels in the same order, same edges.
    bool operator==(const DefiningGraph& other) const {
        return labels_ == other.labels_ && adj_ == other.adj_;
    }
    bool operator!=(const DefiningGraph& other) const { return !(*this == other); }

private:
    void add_vertex(const std::string& label) {
        if (label.empty())
            throw error("vertex label must be nonempty");
        for (char c : label)
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v')
                throw error("vertex label '" + label + "' contains whitespace");
        if (!index_.emplace(label, labels_.size()).second)
            throw error("duplicate vertex label '" + label + "'");
        labels_.push_back(label);
        for (auto& row : adj_) row.push_back(0);
        adj_.emplace_back(labels_.size(), 0);
    }

    void add_edge(const std::string& u, const std::string& v) {
        std::size_t i = index_of(u), j = index_of(v);
        if (i == j)
            throw error("loop edge '" + u + " " + v + "'");
        adj_[i][j] = adj_[j][i] = 1;
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<char>> adj_;
};

// Text format: optional '#' comment lines, one "vertices <l1> <l2> ..." line
// first, then zero or more "edge <l1> <l2>" lines. Blank lines are ignored.
// Every error names the offending 1-based line.
inline DefiningGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_vertices = false;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::string> seen;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream tokens(line);
        std::string word;
        if (!(tokens >> word) || word[0] == '#')
            continue;
        if (word == "vertices") {
            if (have_vertices)
                throw parse_error(lineno, "second 'vertices' line");
            have_vertices = true;
            std::string label;
            while (tokens >> label) {
                if (!seen.insert(label).second)
                    throw parse_error(lineno, "duplicate vertex label '" + label + "'");
                vertices.push_back(label);
            }
        } else if (word == "edge") {
            if (!have_vertices)
                throw parse_error(lineno, "'edge' before 'vertices' line");
            std::string u, v, extra;
            if (!(tokens >> u >> v))
                throw parse_error(lineno, "'edge' needs exactly two endpoints");
            if (tokens >> extra)
                throw parse_error(lineno, "'edge' needs exactly two endpoints");
            if (!seen.count(u))
                throw parse_error(lineno, "edge references undeclared vertex '" + u + "'");
            if (!seen.count(v))
                throw parse_error(lineno, "edge references undeclared vertex '" + v + "'");
            if (u == v)
                throw parse_error(lineno, "loop edge '" + u + " " + v + "'");
            edges.emplace_back(u, v);
        } else {
            throw parse_error(lineno, "malformed line: expected 'vertices' or 'edge', got '" + word + "'");
        }
    }
    if (!have_vertices)
        throw parse_error("missing 'vertices' line");
    return DefiningGraph(std::move(vertices), edges);
}

// star(v) = {v} together with its neighbors, as a label set.
inline std::set<std::string> star(const DefiningGraph& g, const std::string& v) {
    std::size_t i = g.index_of(v);
    std::set<std::string> out{v};
    for (std::size_t j = 0; j < g.vertex_count(); ++j)
        if (g.adjacent(i, j)) out.insert(g.label(j));
    return out;
}

// link(v) = neighbors only.
inline std::set<std::string> link(const DefiningGraph& g, const std::string& v) {
    std::set<std::string> out = star(g, v);
    out.erase(v);
    return out;
}

inline bool is_complete(const DefiningGraph& g) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (!g.adjacent(i, j)) return false;
    return true;
}

// Lexicographically least vertex whose star is proper, absent iff complete.
inline std::optional<std::string> splitting_vertex(const DefiningGraph& g) {
    std::vector<std::string> order = g.vertices();
    std::sort(order.begin(), order.end());
    for (const std::string& v : order)
        if (star(g, v).size() != g.vertex_count())
            return v;
    return std::nullopt;
}

// Vertices adjacent to every other vertex. These span the center of the RAAG.
inline std::set<std::string> cone_vertices(const DefiningGraph& g) {
    std::set<std::string> out;
    for (const std::string& v : g.vertices())
        if (star(g, v).size() == g.vertex_count())
            out.insert(v);
    return out;
}

namespace detail {

// Dynamic bitset over vertex indices, sized for graphs up to a few hundred
// vertices; clique search targets <= ~64 at desk scale.
struct IndexSet {
    std::vector<std::uint64_t> bits;

    explicit IndexSet(std::size_t n) : bits((n + 63) / 64, 0) {}

    void set(std::size_t i) { bits[i / 64] |= std::uint64_t(1) << (i % 64); }
    bool test(std::size_t i) const { return (bits[i / 64] >> (i % 64)) & 1; }
    void reset(std::size_t i) { bits[i / 64] &= ~(std::uint64_t(1) << (i % 64)); }

    bool empty() const {
        for (std::uint64_t b : bits)
            if (b) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t b : bits)
            c += static_cast<std::size_t>(__builtin_popcountll(b));
        return c;
    }

    IndexSet intersect(const IndexSet& o) const {
        IndexSet out = *this;
        for (std::size_t w = 0; w < bits.size(); ++w) out.bits[w] &= o.bits[w];
        return out;
    }
};

inline void bron_kerbosch(const std::vector<IndexSet>& nbr, IndexSet r, IndexSet p, IndexSet x,
                          std::size_t r_size, std::size_t& best) {
    if (p.empty() && x.empty()) {
        best = std::max(best, r_size);
        return;
    }
    if (r_size + p.count() <= best)
        return;
    // Pivot: vertex of P ∪ X with the most neighbors in P.
    std::size_t n = nbr.size(), pivot = n;
    std::size_t pivot_deg = 0;
    for (std::size_t u = 0; u < n; ++u) {
        if (!p.test(u) && !x.test(u)) continue;
        std::size_t d = p.intersect(nbr[u]).count();
        if (pivot == n || d > pivot_deg) {
            pivot = u;
            pivot_deg = d;
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!p.test(v) || (pivot < n && nbr[pivot].test(v))) continue;
        IndexSet r2 = r;
        r2.set(v);
        bron_kerbosch(nbr, r2, p.intersect(nbr[v]), x.intersect(nbr[v]), r_size + 1, best);
        p.reset(v);
        x.set(v);
    }
}

} // namespace detail

// Size of a maximum clique (exact; Bron–Kerbosch with pivoting). 0 for the
// empty graph. Equals the vcd and the maximal free-abelian rank of the RAAG.
inline std::size_t clique_number(const DefiningGraph& g) {
    std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<detail::IndexSet> nbr(n, detail::IndexSet(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && g.adjacent(i, j)) nbr[i].set(j);
    detail::IndexSet r(n), p(n), x(n);
    for (std::size_t i = 0; i < n; ++i) p.set(i);
    std::size_t best = 0;
    detail::bron_kerbosch(nbr, r, p, x, 0, best);
    return best;
}

// Induced subgraph on the given labels, keeping declaration order.
inline DefiningGraph induced_subgraph(const DefiningGraph& g, const std::set<std::string>& keep) {
    std::vector<std::string> vertices;
    for (const std::string& v : g.vertices())
        if (keep.count(v)) vertices.push_back(v);
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [u, v] : g.edges())
        if (keep.count(u) && keep.count(v)) edges.emplace_back(u, v);
    return DefiningGraph(std::move(vertices), edges);
}

namespace detail {

// Iterated degree refinement; returns a color per vertex. Used only to prune
// the isomorphism search.
inline std::vector<std::size_t> refine_colors(const DefiningGraph& g) {
    std::size_t n = g.vertex_count();
    std::vector<std::size_t> color(n);
    for (std::size_t i = 0; i < n; ++i) color[i] = g.degree(i);
    for (std::size_t round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<std::size_t>, std::size_t>> sig(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::size_t> s{color[i]};
            for (std::size_t j = 0; j < n; ++j)
                if (g.adjacent(i, j)) s.push_back(color[j]);
            std::sort(s.begin() + 1, s.end());
            sig[i] = {std::move(s), i};
        }
        // Ranks follow signature sort order so colors are comparable across graphs.
        std::map<std::vector<std::size_t>, std::size_t> rank;
        for (const auto& [s, i] : sig) rank.emplace(s, 0);
        std::size_t r = 0;
        for (auto& kv : rank) kv.second = r++;
        std::vector<std::size_t> next(n);
        for (const auto& [s, i] : sig) next[i] = rank.at(s);
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

inline bool extend_isomorphism(const DefiningGraph& g1, const DefiningGraph& g2,
                               const std::vector<std::size_t>& c1, const std::vector<std::size_t>& c2,
                               std::vector<std::size_t>& map12, std::vector<char>& used,
                               std::size_t next) {
    std::size_t n = g1.vertex_count();
    if (next == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand] || c1[next] != c2[cand]) continue;
        bool ok = true;
        for (std::size_t prev = 0; prev < next && ok; ++prev)
            ok = g1.adjacent(prev, next) == g2.adjacent(map12[prev], cand);
        if (!ok) continue;
        map12[next] = cand;
        used[cand] = 1;
        if (extend_isomorphism(g1, g2, c1, c2, map12, used, next + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

} // namespace detail

// First edge-preserving label bijection in the canonical search order
// (g1 vertices in declaration order, candidates in g2 declaration order),
// or absent. Degree refinement prunes; intended for small graphs.
inline std::optional<std::map<std::string, std::string>>
are_isomorphic(const DefiningGraph& g1, const DefiningGraph& g2) {
    std::size_t n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    std::vector<std::size_t> c1 = detail::refine_colors(g1);
    std::vector<std::size_t> c2 = detail::refine_colors(g2);
    {
        std::vector<std::size_t> s1 = c1, s2 = c2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }
    std::vector<std::size_t> map12(n);
    std::vector<char> used(n, 0);
    if (!detail::extend_isomorphism(g1, g2, c1, c2, map12, used, 0))
        return std::nullopt;
    std::map<std::string, std::string> out;
    for (std::size_t i = 0; i < n; ++i)
        out[g1.label(i)] = g2.label(map12[i]);
    return out;
}

// Undirected DOT, node ids quoted (labels may contain '@').
inline std::string to_dot(const DefiningGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const std::string& v : g.vertices())
        out << "  \"" << v << "\";\n";
    for (const auto& [u, v] : g.edges())
        out << "  \"" << u << "\" -- \"" << v << "\";\n";
    out << "}\n";
    return out.str();
}

} // namespace raag

#endif // RAAG_GRAPH_HPP
