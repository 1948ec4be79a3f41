#ifndef RAAG_JSON_IO_HPP
#define RAAG_JSON_IO_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "raag/commensurators.hpp"
#include "raag/finite_index.hpp"
#include "raag/graph.hpp"
#include "raag/invariants.hpp"
#include "raag/words.hpp"

namespace raag {

using nlohmann::json;

inline json graph_to_json(const DefiningGraph& g) {
    json j;
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

inline DefiningGraph graph_from_json(const json& j) {
    try {
        std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::string>> edges;
        for (const json& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw parse_error("graph JSON: edge entries must be [u, v] pairs");
            edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
        }
        return DefiningGraph(std::move(vertices), edges);
    } catch (const json::exception& e) {
        throw parse_error(std::string("graph JSON: ") + e.what());
    }
}

inline json report_to_json(const VerificationReport& r) {
    json j;
    j["edges_checked"] = r.edges_checked;
    j["nonedges_checked"] = r.nonedges_checked;
    j["kernel_membership"] = r.kernel_membership;
    j["roundtrips"] = r.roundtrips;
    json failures = json::array();
    for (const VerificationFailure& f : r.failures)
        failures.push_back({{"kind", f.kind}, {"witness", f.witness}});
    j["failures"] = std::move(failures);
    return j;
}

inline json construction_to_json(const GluedConstruction& gc) {
    json j;
    j["base"] = graph_to_json(gc.base);
    j["vertex"] = gc.vertex;
    j["modulus"] = gc.modulus;
    j["index"] = gc.index;
    j["degenerate"] = gc.degenerate;
    j["glued"] = graph_to_json(gc.glued);
    json gens = json::object();
    for (std::size_t i = 0; i < gc.glued.vertex_count(); ++i)
        gens[gc.glued.label(i)] = format_word(gc.generator_images[i]);
    j["generators"] = std::move(gens);
    return j;
}

inline json chain_steps_json(const GrowthChain& chain) {
    json steps = json::array();
    for (const GluedConstruction& gc : chain.steps) {
        steps.push_back({{"vertex", gc.vertex},
                         {"modulus", gc.modulus},
                         {"index", gc.index},
                         {"base_vertices", gc.base.vertex_count()},
                         {"glued_vertices", gc.glued.vertex_count()}});
    }
    return steps;
}

inline json chain_to_json(const GrowthChain& chain) {
    json j;
    j["base"] = graph_to_json(chain.base);
    j["steps"] = chain_steps_json(chain);
    j["total_index"] = chain.total_index;
    j["final"] = graph_to_json(chain.final_graph());
    return j;
}

inline json certificate_to_json(const CommCertificate& cert) {
    json j;
    j["base"] = graph_to_json(cert.original);
    j["k"] = cert.k;
    j["chain"] = {{"steps", chain_steps_json(cert.chain)}, {"total_index", cert.chain.total_index}};
    j["final"] = graph_to_json(cert.final_graph);
    j["probe"] = {{"steps", chain_steps_json(cert.probe)}, {"total_index", cert.probe.total_index}};
    json witnesses = json::array();
    for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
        const InversionWitness& w = cert.witnesses[i];
        const WitnessChecks& c = cert.checks[i];
        witnesses.push_back(
            {{"inverted", w.inverted},
             {"diagonal", w.diagonal},
             {"is_automorphism", c.is_automorphism},
             {"order_two", c.order_two},
             {"nontrivial", c.nontriviality.nontrivial},
             {"power", c.nontriviality.power},
             {"final_vertex", c.nontriviality.final_vertex}});
    }
    j["witnesses"] = std::move(witnesses);
    j["pairwise_commute"] = cert.pairwise_commute;
    j["group_order_exponent"] = cert.group_order_exponent;
    j["all_checks_pass"] = cert.all_checks_pass();
    return j;
}

inline json invariants_to_json(const RaagInvariants& inv) {
    return {{"vertex_count", inv.vertex_count}, {"clique_number", inv.clique_number},
            {"vcd", inv.vcd},                   {"max_abelian_rank", inv.max_abelian_rank},
            {"center_rank", inv.center_rank},   {"is_abelian", inv.is_abelian}};
}

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::DimensionObstruction: return "dimension_obstruction";
        case Verdict::CommObstruction: return "comm_obstruction";
        case Verdict::ExceptionFreeGroup: return "exception_free_group";
        case Verdict::ExceptionFinite: return "exception_finite";
    }
    return "unknown";
}

inline json obstruction_to_json(const ObstructionReport& rep) {
    json j;
    j["genus"] = rep.surface.genus;
    j["punctures"] = rep.surface.punctures;
    j["vcd"] = rep.invariants.vcd;
    j["max_abelian_rank"] = rep.invariants.max_abelian_rank;
    j["ranks_equal"] = rep.invariants.ranks_equal;
    j["theorem_applies"] = rep.invariants.theorem_applies;
    j["finite"] = rep.invariants.finite;
    j["verdict"] = verdict_name(rep.verdict);
    j["message"] = rep.message;
    j["citations"] = rep.citations;
    return j;
}

inline json compare_to_json(const CompareReport& rep) {
    return {{"clique_number_1", rep.clique_number_1},
            {"clique_number_2", rep.clique_number_2},
            {"obstructed", rep.obstructed},
            {"verdict", rep.verdict}};
}

namespace detail {

inline void diff_json(const json& expected, const json& found, const std::string& path,
                      std::vector<std::string>& out) {
    if (expected.type() != found.type()) {
        if (expected.is_number() && found.is_number()) {
            if (expected != found)
                out.push_back(path + ": expected " + expected.dump() + ", found " + found.dump());
            return;
        }
        out.push_back(path + ": expected " + expected.dump() + ", found " + found.dump());
        return;
    }
    if (expected.is_object()) {
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            if (!found.contains(it.key()))
                out.push_back(path + "." + it.key() + ": missing");
            else
                diff_json(it.value(), found.at(it.key()), path + "." + it.key(), out);
        }
        for (auto it = found.begin(); it != found.end(); ++it)
            if (!expected.contains(it.key()))
                out.push_back(path + "." + it.key() + ": unexpected field");
        return;
    }
    if (expected.is_array()) {
        if (expected.size() != found.size()) {
            out.push_back(path + ": expected " + std::to_string(expected.size()) +
                          " entries, found " + std::to_string(found.size()));
            return;
        }
        for (std::size_t i = 0; i < expected.size(); ++i)
            diff_json(expected[i], found[i], path + "[" + std::to_string(i) + "]", out);
        return;
    }
    if (expected != found)
        out.push_back(path + ": expected " + expected.dump() + ", found " + found.dump());
}

} // namespace detail

struct CertificateValidation {
    bool valid = false;
    std::vector<std::string> mismatches;
    json recomputed;
};

// Re-validate a serialized certificate from scratch: rebuild the whole
// certificate from the stored base graph and k, then require the stored
// document to match the recomputation field for field. Any single mutated
// field therefore either breaks recomputation or shows up as a mismatch.
inline CertificateValidation verify_certificate_json(const json& doc) {
    CertificateValidation result;
    DefiningGraph base;
    std::size_t k = 0;
    try {
        if (!doc.is_object()) {
            result.mismatches.push_back("$: certificate must be a JSON object");
            return result;
        }
        base = graph_from_json(doc.at("base"));
        const json& kj = doc.at("k");
        bool k_ok = kj.is_number_unsigned() ||
                    (kj.is_number_integer() && kj.get<long long>() >= 0);
        if (!k_ok) {
            result.mismatches.push_back("$.k: must be a nonnegative integer");
            return result;
        }
        k = kj.get<std::size_t>();
    } catch (const json::exception& e) {
        result.mismatches.push_back(std::string("$: malformed certificate: ") + e.what());
        return result;
    } catch (const error& e) {
        result.mismatches.push_back(std::string("$: malformed certificate: ") + e.what());
        return result;
    }
    try {
        result.recomputed = certificate_to_json(main_lemma_certificate(base, k));
    } catch (const error& e) {
        result.mismatches.push_back(std::string("$: certificate not reproducible: ") + e.what());
        return result;
    }
    detail::diff_json(result.recomputed, doc, "$", result.mismatches);
    result.valid = result.mismatches.empty();
    return result;
}

} // namespace raag

#endif // RAAG_JSON_IO_HPP
