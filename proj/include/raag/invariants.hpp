#ifndef RAAG_INVARIANTS_HPP
#define RAAG_INVARIANTS_HPP

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// Commensurability invariants of A(Γ) readable from the graph. For a RAAG the
// vcd and the maximal rank of a free abelian subgroup both equal the clique
// number; the center is spanned by the cone vertices.
struct RaagInvariants {
    std::size_t vertex_count = 0;
    std::size_t clique_number = 0;
    std::size_t vcd = 0;
    std::size_t max_abelian_rank = 0;
    std::size_t center_rank = 0;
    bool is_abelian = false;
};

inline RaagInvariants raag_invariants(const DefiningGraph& g) {
    RaagInvariants inv;
    inv.vertex_count = g.vertex_count();
    inv.clique_number = clique_number(g);
    inv.vcd = inv.clique_number;
    inv.max_abelian_rank = inv.clique_number;
    inv.center_rank = cone_vertices(g).size();
    inv.is_abelian = is_complete(g);
    return inv;
}

// One pass of the splitting A(Γ) ≅ A(Γ') × Z^n: n = number of cone vertices,
// Γ' = induced subgraph on the rest. Removing all cones at once never creates
// a new cone, so the pass already captures the full center.
inline std::pair<DefiningGraph, std::size_t> center_split(const DefiningGraph& g) {
    std::set<std::string> cones = cone_vertices(g);
    std::set<std::string> keep;
    for (const std::string& v : g.vertices())
        if (!cones.count(v)) keep.insert(v);
    return {induced_subgraph(g, keep), cones.size()};
}

struct CenterSplitResult {
    DefiningGraph core;
    std::size_t rank = 0;
    std::size_t passes = 0;
};

// Repeat center_split until the result is cone-free. Terminates (each pass
// removes vertices or nothing) and makes the one-pass claim testable.
inline CenterSplitResult center_split_iterated(const DefiningGraph& g) {
    CenterSplitResult res;
    res.core = g;
    while (true) {
        auto [next, n] = center_split(res.core);
        if (n == 0) break;
        res.core = std::move(next);
        res.rank += n;
        ++res.passes;
    }
    return res;
}

// S_{g,n}: closed orientable surface of genus g with n marked points.
struct SurfaceType {
    unsigned genus = 0;
    unsigned punctures = 0;
};

// Closed-form mapping class group invariants.
//   vcd: n-3 for g=0 (n>=3); 1 for (1,0); 4g-4+n for g>=1, n>=1; 4g-5 for g>=2, n=0.
//   max abelian rank: 3g-3+n, with rank 1 for (1,0).
//   Finite cases (g=0, n<=3) report 0 for both.
// ranks_equal records the predicate g=0, g=1, or (g,n)=(2,0); the acceptance
// suite checks the formulas reproduce it exactly.
struct McgInvariants {
    SurfaceType surface;
    long long vcd = 0;
    long long max_abelian_rank = 0;
    bool ranks_equal = false;
    bool theorem_applies = false; // 3g+n >= 5
    bool finite = false;          // g = 0, n <= 3
};

inline McgInvariants mcg_invariants(const SurfaceType& s) {
    McgInvariants inv;
    inv.surface = s;
    long long g = s.genus, n = s.punctures;
    inv.finite = (g == 0 && n <= 3);
    inv.ranks_equal = (g == 0) || (g == 1) || (g == 2 && n == 0);
    inv.theorem_applies = (3 * g + n >= 5);
    if (inv.finite) {
        inv.vcd = 0;
        inv.max_abelian_rank = 0;
        return inv;
    }
    inv.max_abelian_rank = (g == 1 && n == 0) ? 1 : 3 * g - 3 + n;
    if (g == 0)
        inv.vcd = n - 3;
    else if (g == 1 && n == 0)
        inv.vcd = 1;
    else if (n >= 1)
        inv.vcd = 4 * g - 4 + n;
    else
        inv.vcd = 4 * g - 5;
    return inv;
}

enum class Verdict {
    DimensionObstruction, // vcd != max abelian rank, both commensurability invariants
    CommObstruction,      // Comm(Mod) has bounded finite subgroups
    ExceptionFreeGroup,   // commensurable with F_2
    ExceptionFinite,      // finite, commensurable with the trivial RAAG
};

struct ObstructionReport {
    SurfaceType surface;
    McgInvariants invariants;
    Verdict verdict = Verdict::ExceptionFinite;
    std::string message;
    std::vector<std::string> citations;
};

// Decide whether Mod(S_{g,n}) can be commensurable with a RAAG, and why not
// when it cannot. For 3g+n >= 5 the answer is always no: either the dimension
// invariants differ, or Comm(Mod) has bounded finite subgroups while the
// commensurator of a non-abelian RAAG contains (Z/2Z)^k for arbitrarily
// large k. Below the bound the group really is commensurable with a RAAG.
inline ObstructionReport obstruction_report(const SurfaceType& s) {
    ObstructionReport rep;
    rep.surface = s;
    rep.invariants = mcg_invariants(s);
    unsigned g = s.genus, n = s.punctures;

    if (rep.invariants.theorem_applies) {
        if (!rep.invariants.ranks_equal) {
            rep.verdict = Verdict::DimensionObstruction;
            rep.message = "not commensurable with any right-angled Artin group: "
                          "dimension obstruction (vcd != max abelian rank)";
            rep.citations = {
                "Harer [Theorem 4.1]: vcd of Mod(S_{g,n})",
                "Birman-Lubotzky-McCarthy [Theorem A]: maximal abelian rank 3g-3+n",
            };
        } else {
            rep.verdict = Verdict::CommObstruction;
            rep.message = "not commensurable with any right-angled Artin group: "
                          "commensurator obstruction (Comm of a non-abelian RAAG contains "
                          "(Z/2Z)^k for arbitrarily large k; Comm(Mod) has bounded finite subgroups)";
            rep.citations = {
                "Ivanov [Theorem 5], Korkmaz [Theorem 3]: Comm(Mod(S_{g,n})) = Mod^{+-}(S_{g,n})",
                "Kerckhoff: Mod^{+-} has bounded finite subgroups (Nielsen realization)",
            };
            if (g == 1 && n == 2)
                rep.citations.push_back("Comm(Mod(S_{1,2})) = Mod^{+-}(S_{0,5})");
            if (g == 2 && n == 0)
                rep.citations.push_back("Comm(Mod(S_{2,0})) = Mod^{+-}(S_{0,6})");
        }
    } else if (rep.invariants.finite) {
        rep.verdict = Verdict::ExceptionFinite;
        rep.message = "exception: Mod(S_{" + std::to_string(g) + "," + std::to_string(n) +
                      "}) is finite, abstractly commensurable with the trivial "
                      "right-angled Artin group";
        rep.citations = {"Mod(S_{0,n}) is finite for n <= 3"};
    } else {
        rep.verdict = Verdict::ExceptionFreeGroup;
        rep.message = "exception: commensurable with a right-angled Artin group "
                      "(the free group F_2)";
        if (g == 1)
            rep.citations = {"Mod(S_{1,0}) = Mod(S_{1,1}) = SL_2(Z), commensurable with F_2"};
        else
            rep.citations = {"Mod(S_{0,4}) = PSL_2(Z) x| (Z/2Z x Z/2Z), commensurable with F_2"};
    }
    return rep;
}

// One-way commensurability test between two RAAGs via the vcd (= clique
// number), which is invariant under passage to finite-index subgroups.
// Never claims commensurability.
struct CompareReport {
    std::size_t clique_number_1 = 0;
    std::size_t clique_number_2 = 0;
    bool obstructed = false;
    std::string verdict;
};

inline CompareReport compare_raags(const DefiningGraph& g1, const DefiningGraph& g2) {
    CompareReport rep;
    rep.clique_number_1 = clique_number(g1);
    rep.clique_number_2 = clique_number(g2);
    rep.obstructed = rep.clique_number_1 != rep.clique_number_2;
    rep.verdict = rep.obstructed ? "obstructed" : "no obstruction found";
    return rep;
}

} // namespace raag

#endif // RAAG_INVARIANTS_HPP
