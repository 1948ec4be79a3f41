#include <cstddef>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "raag/commensurators.hpp"
#include "raag/finite_index.hpp"
#include "raag/graph.hpp"
#include "raag/invariants.hpp"
#include "raag/json_io.hpp"
#include "raag/words.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw raag::parse_error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

raag::DefiningGraph load_graph(const std::string& path) {
    return raag::parse_graph(read_file(path));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw raag::error("cannot write file '" + path + "'");
    out << content;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string s;
    for (const std::string& t : tokens) {
        if (!s.empty()) s += ' ';
        s += t;
    }
    return s;
}

std::string dump(const raag::json& j) { return j.dump(2) + "\n"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_graph_lines(const raag::DefiningGraph& g) {
    std::cout << "vertices:";
    for (const std::string& v : g.vertices()) std::cout << ' ' << v;
    std::cout << '\n';
    std::cout << "edges:";
    for (const auto& [u, v] : g.edges()) std::cout << " {" << u << "," << v << "}";
    std::cout << '\n';
}

int run_info(const std::string& path, bool as_json, bool as_dot) {
    raag::DefiningGraph g = load_graph(path);
    if (as_dot) {
        std::cout << raag::to_dot(g);
        return 0;
    }
    raag::RaagInvariants inv = raag_invariants(g);
    if (as_json) {
        std::cout << dump(raag::invariants_to_json(inv));
        return 0;
    }
    std::cout << "vertices: " << inv.vertex_count << '\n'
              << "edges: " << g.edge_count() << '\n'
              << "clique number: " << inv.clique_number << '\n'
              << "vcd: " << inv.vcd << '\n'
              << "max abelian rank: " << inv.max_abelian_rank << '\n'
              << "center rank: " << inv.center_rank << '\n'
              << "abelian: " << yes_no(inv.is_abelian) << '\n';
    return 0;
}

int run_normal_form(const std::string& path, const std::vector<std::string>& tokens,
                    bool as_json) {
    raag::DefiningGraph g = load_graph(path);
    std::string text = join_tokens(tokens);
    raag::GroupWord w = raag::parse_word(text);
    raag::NormalWord nf = raag::normal_form(g, w);
    std::string formatted = raag::format_word(nf.letters);
    if (as_json) {
        std::cout << dump({{"input", text}, {"normal_form", formatted}});
        return 0;
    }
    std::cout << formatted << '\n';
    return 0;
}

int run_subgroup(const std::string& path, const std::string& vertex, unsigned long long index,
                 std::size_t verify_samples, unsigned long long seed, bool as_json) {
    raag::DefiningGraph g = load_graph(path);
    raag::GluedConstruction gc = raag::kernel_generators(g, vertex, index);
    raag::VerificationReport report;
    if (verify_samples > 0)
        report = raag::verify_construction(gc, verify_samples, seed);

    if (as_json) {
        raag::json j = raag::construction_to_json(gc);
        if (verify_samples > 0) j["verification"] = raag::report_to_json(report);
        std::cout << dump(j);
    } else {
        std::cout << "glued graph: " << gc.glued.vertex_count() << " vertices, "
                  << gc.glued.edge_count() << " edges\n";
        print_graph_lines(gc.glued);
        std::cout << "generators:\n";
        for (std::size_t i = 0; i < gc.glued.vertex_count(); ++i)
            std::cout << "  " << gc.glued.label(i) << " -> "
                      << raag::format_word(gc.generator_images[i]) << '\n';
        std::cout << "index: " << gc.index << '\n'
                  << "degenerate: " << yes_no(gc.degenerate) << '\n';
        if (verify_samples > 0) {
            if (report.ok()) {
                std::cout << "verification: all checks passed (" << report.edges_checked
                          << " edges, " << report.nonedges_checked << " non-edges, "
                          << report.kernel_membership << " kernel memberships, "
                          << report.roundtrips << " round-trips)\n";
            } else {
                std::cout << "verification: " << report.failures.size() << " failures\n";
                for (const raag::VerificationFailure& f : report.failures)
                    std::cout << "  " << f.kind << ": " << f.witness << '\n';
            }
        }
    }
    return verify_samples > 0 && !report.ok() ? 1 : 0;
}

int run_grow(const std::string& path, std::size_t target, bool as_json) {
    raag::DefiningGraph g = load_graph(path);
    raag::GrowthChain chain = raag::grow_to(g, target);
    if (as_json) {
        std::cout << dump(raag::chain_to_json(chain));
        return 0;
    }
    std::size_t n = 1;
    for (const raag::GluedConstruction& gc : chain.steps) {
        std::cout << "step " << n++ << ": glue at " << gc.vertex << " (index " << gc.index
                  << "): " << gc.base.vertex_count() << " -> " << gc.glued.vertex_count()
                  << " vertices\n";
    }
    std::cout << "total index: " << chain.total_index << '\n'
              << "final graph: " << chain.final_graph().vertex_count() << " vertices, "
              << chain.final_graph().edge_count() << " edges\n";
    return 0;
}

int run_certificate(const std::string& path, std::size_t k, const std::string& out_path,
                    bool as_json) {
    raag::DefiningGraph g = load_graph(path);
    raag::CommCertificate cert = raag::main_lemma_certificate(g, k);
    raag::json j = raag::certificate_to_json(cert);
    if (!out_path.empty())
        write_file(out_path, dump(j));
    if (as_json) {
        std::cout << dump(j);
    } else {
        std::cout << "base graph: " << cert.original.vertex_count() << " vertices\n"
                  << "chain: " << cert.chain.steps.size() << " steps, total index "
                  << cert.chain.total_index << '\n'
                  << "final graph: " << cert.final_graph.vertex_count() << " vertices\n"
                  << "witnesses: " << cert.k << " vertex inversions\n"
                  << "group order exponent: " << cert.group_order_exponent << " ((Z/2Z)^"
                  << cert.group_order_exponent << " in Comm(A))\n"
                  << "all checks pass: " << yes_no(cert.all_checks_pass()) << '\n';
        if (!out_path.empty())
            std::cout << "wrote " << out_path << '\n';
    }
    return cert.all_checks_pass() ? 0 : 1;
}

int run_verify(const std::string& path, bool as_json) {
    raag::json doc;
    try {
        doc = raag::json::parse(read_file(path));
    } catch (const raag::json::exception& e) {
        throw raag::parse_error("invalid JSON in '" + path + "': " + e.what());
    }
    raag::CertificateValidation v = raag::verify_certificate_json(doc);
    if (as_json) {
        std::cout << dump({{"valid", v.valid}, {"mismatches", v.mismatches}});
    } else if (v.valid) {
        std::cout << "certificate valid: (Z/2Z)^" << doc.at("group_order_exponent")
                  << " over a " << doc.at("base").at("vertices").size()
                  << "-vertex base graph\n";
    } else {
        std::cout << "certificate invalid: " << v.mismatches.size() << " mismatches\n";
        for (const std::string& m : v.mismatches) std::cout << "  " << m << '\n';
    }
    return v.valid ? 0 : 1;
}

int run_mcg(unsigned genus, unsigned punctures, bool as_json) {
    raag::ObstructionReport rep = raag::obstruction_report({genus, punctures});
    if (as_json) {
        std::cout << dump(raag::obstruction_to_json(rep));
        return 0;
    }
    std::cout << "surface: S_{" << genus << "," << punctures << "}\n"
              << "vcd: " << rep.invariants.vcd << '\n'
              << "max abelian rank: " << rep.invariants.max_abelian_rank << '\n'
              << "ranks equal: " << yes_no(rep.invariants.ranks_equal) << '\n'
              << "verdict: " << rep.message << '\n';
    if (!rep.citations.empty()) {
        std::cout << "citations:\n";
        for (const std::string& c : rep.citations) std::cout << "  - " << c << '\n';
    }
    return 0;
}

int run_compare(const std::string& path1, const std::string& path2, bool as_json) {
    raag::DefiningGraph g1 = load_graph(path1);
    raag::DefiningGraph g2 = load_graph(path2);
    raag::CompareReport rep = raag::compare_raags(g1, g2);
    if (as_json) {
        std::cout << dump(raag::compare_to_json(rep));
        return 0;
    }
    std::cout << "clique number 1: " << rep.clique_number_1 << '\n'
              << "clique number 2: " << rep.clique_number_2 << '\n'
              << "verdict: " << rep.verdict << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"right-angled Artin group toolkit: finite-index subgroups, "
                 "commensurator certificates, and comparison reports"};
    app.require_subcommand(1);

    std::string graph_path, graph_path2, out_path, vertex;
    std::vector<std::string> word_tokens;
    unsigned long long index = 2, seed = 0;
    std::size_t verify_samples = 0, target = 0, k = 1;
    unsigned genus = 0, punctures = 0;
    bool as_json = false, as_dot = false;

    CLI::App* info = app.add_subcommand("info", "invariants of A(Γ) read from the graph");
    info->add_option("graph", graph_path, "graph file")->required();
    info->add_flag("--json", as_json, "JSON output");
    info->add_flag("--dot", as_dot, "DOT export of the graph");

    CLI::App* nf = app.add_subcommand("normal-form", "canonical form of a word");
    nf->add_option("graph", graph_path, "graph file")->required();
    nf->add_option("word", word_tokens, "word tokens (label, label^-1, label^k)")->required();
    nf->add_flag("--json", as_json, "JSON output");

    CLI::App* sub = app.add_subcommand("subgroup", "kernel of A(Γ) -> Z/mZ as a RAAG");
    sub->add_option("graph", graph_path, "graph file")->required();
    sub->add_option("--vertex", vertex, "distinguished vertex")->required();
    sub->add_option("--index", index, "index m of the kernel")->required();
    sub->add_option("--verify", verify_samples, "verify the presentation with N sampled words");
    sub->add_option("--seed", seed, "seed for sampled words");
    sub->add_flag("--json", as_json, "JSON output");

    CLI::App* grow = app.add_subcommand("grow", "finite-index subgroup with a larger graph");
    grow->add_option("graph", graph_path, "graph file")->required();
    grow->add_option("--target", target, "minimum vertex count to reach")->required();
    grow->add_flag("--json", as_json, "JSON output");

    CLI::App* cert = app.add_subcommand("certificate", "(Z/2Z)^k of inversions in Comm(A)");
    cert->add_option("graph", graph_path, "graph file")->required();
    cert->add_option("--k", k, "number of commuting order-2 witnesses")->required();
    cert->add_option("--out", out_path, "write certificate JSON to this file");
    cert->add_flag("--json", as_json, "JSON output");

    CLI::App* verify = app.add_subcommand("verify", "re-validate a certificate from scratch");
    verify->add_option("certificate", graph_path, "certificate JSON file")->required();
    verify->add_flag("--json", as_json, "JSON output");

    CLI::App* mcg = app.add_subcommand("mcg", "RAAG commensurability report for Mod(S_{g,n})");
    mcg->add_option("--genus", genus, "genus g")->required();
    mcg->add_option("--punctures", punctures, "marked points n")->required();
    mcg->add_flag("--json", as_json, "JSON output");

    CLI::App* compare = app.add_subcommand("compare", "one-way commensurability obstruction");
    compare->add_option("graph1", graph_path, "first graph file")->required();
    compare->add_option("graph2", graph_path2, "second graph file")->required();
    compare->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*info) return run_info(graph_path, as_json, as_dot);
        if (*nf) return run_normal_form(graph_path, word_tokens, as_json);
        if (*sub) return run_subgroup(graph_path, vertex, index, verify_samples, seed, as_json);
        if (*grow) return run_grow(graph_path, target, as_json);
        if (*cert) return run_certificate(graph_path, k, out_path, as_json);
        if (*verify) return run_verify(graph_path, as_json);
        if (*mcg) return run_mcg(genus, punctures, as_json);
        if (*compare) return run_compare(graph_path, graph_path2, as_json);
    } catch (const raag::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const raag::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
