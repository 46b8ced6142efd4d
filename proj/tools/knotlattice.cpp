#include "knotlattice/batch.hpp"
#include "knotlattice/errors.hpp"
#include "knotlattice/report.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

using namespace knotlattice;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

int exit_code_for(const Error& e) {
    static const std::set<std::string> parse_errors{
        "MalformedPd",  "MalformedGauss", "UnsignedCode",       "UnrealizableCode", "ArcMultiplicity",
        "NonPlanar",    "FileNotFound",   "InconsistentOrientation", "MalformedCorpus", "NotInLattice"};
    if (parse_errors.count(e.code())) return kExitParse;
    if (e.code() == "InternalConventionError") return kExitInternal;
    return kExitPrecondition;
}

void emit_error(const Error& e) {
    ordered_json j{{"error", {{"code", e.code()}, {"message", e.what()}}}};
    std::cerr << j.dump() << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileNotFound("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

LinkDiagram diagram_from_inputs(const std::string& pd, const std::string& gauss, const std::string& file) {
    int given = (!pd.empty()) + (!gauss.empty()) + (!file.empty());
    if (given != 1) throw MalformedPd("provide exactly one of --pd, --gauss, --file");
    if (!pd.empty()) return parse_pd(pd);
    if (!gauss.empty()) return parse_gauss_signed(gauss);
    std::string text = read_file(file);
    // a file holds either PD text/JSON or a signed Gauss code
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == 'O' || text[first] == 'U'))
        return parse_gauss_signed(text);
    return parse_pd(text);
}

std::vector<long long> parse_vector_arg(const std::string& s) {
    std::vector<long long> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        v.push_back(std::stoll(tok));
    }
    return v;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"alternating link detection via definite chessboard pairings"};
    app.require_subcommand(1);

    long long norm_bound = enumeration_hard_cap_from_env();
    app.add_option("--norm-bound", norm_bound, "hard cap for bounded-norm lattice enumeration");

    // analyze ------------------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "analyze one diagram");
    std::string a_pd, a_gauss, a_file;
    bool a_json = false, a_require_reduced = false;
    analyze->add_option("--pd", a_pd, "PD code text or JSON");
    analyze->add_option("--gauss", a_gauss, "signed Gauss code");
    analyze->add_option("--file", a_file, "file with a PD or signed Gauss code");
    analyze->add_flag("--json", a_json, "emit the JSON report");
    analyze->add_flag("--require-reduced", a_require_reduced, "fail unless the diagram is reduced");

    // tait-verify ---------------------------------------------------------------
    auto* tv = app.add_subcommand("tait-verify", "compare crossing number and writhe of two diagrams");
    std::string tv_a, tv_b;
    bool tv_json = false, tv_oriented = false;
    tv->add_option("fileA", tv_a)->required();
    tv->add_option("fileB", tv_b)->required();
    tv->add_flag("--json", tv_json);
    tv->add_flag("--oriented", tv_oriented, "also require writhe agreement");

    // lattice -------------------------------------------------------------------
    auto* lat = app.add_subcommand("lattice", "flow-lattice utilities");
    lat->require_subcommand(1);
    auto* lat_gram = lat->add_subcommand("gram", "Gram matrix of a graph's flow lattice");
    std::string lg_graph;
    lat_gram->add_option("--graph", lg_graph, "graph JSON file")->required();
    auto* lat_sig = lat->add_subcommand("signature", "exact signature of a symmetric integer matrix");
    std::string ls_matrix;
    lat_sig->add_option("--matrix", ls_matrix, "matrix JSON file")->required();
    auto* lat_irr = lat->add_subcommand("irreducible", "irreducibility/simplicity of a flow vector");
    std::string li_graph, li_vector;
    lat_irr->add_option("--graph", li_graph, "graph JSON file")->required();
    lat_irr->add_option("--vector", li_vector, "comma-separated edge coefficients")->required();

    // batch ---------------------------------------------------------------------
    auto* batch = app.add_subcommand("batch", "run a JSONL corpus");
    std::string b_file;
    int b_jobs = 1;
    bool b_json = false;
    batch->add_option("file", b_file)->required();
    batch->add_option("--jobs", b_jobs, "worker threads");
    batch->add_flag("--json", b_json);

    CLI11_PARSE(app, argc, argv);
    EnumerationOptions opts{norm_bound, false};

    try {
        if (*analyze) {
            LinkDiagram d = diagram_from_inputs(a_pd, a_gauss, a_file);
            if (a_require_reduced && !diagram_predicates(d).is_reduced)
                throw PreconditionFailed("diagram is not reduced");
            ordered_json rep = analyze_diagram(d, opts);
            if (a_json) std::cout << rep.dump(2) << "\n";
            else std::cout << render_report(rep);
            return kExitOk;
        }
        if (*tv) {
            LinkDiagram d1 = parse_pd(read_file(tv_a));
            LinkDiagram d2 = parse_pd(read_file(tv_b));
            TaitReport rep = verify_tait_pair(d1, d2);
            ordered_json j = tait_report_json(rep);
            if (tv_json) std::cout << j.dump(2) << "\n";
            else {
                std::cout << "crossing numbers: " << rep.first.c << " vs " << rep.second.c
                          << (rep.crossing_numbers_agree ? " (agree)" : " (DISAGREE)") << "\n";
                std::cout << "writhes:          " << rep.first.writhe << " vs " << rep.second.writhe
                          << (rep.writhes_agree ? " (agree)" : " (DISAGREE)") << "\n";
            }
            bool ok = rep.crossing_numbers_agree && (!tv_oriented || rep.writhes_agree);
            return ok ? kExitOk : kExitMismatch;
        }
        if (*lat_gram) {
            PlaneMultigraph g = graph_from_json(read_file(lg_graph));
            FlowLattice f = flow_lattice(g);
            std::cout << gram_to_json(f.gram) << "\n";
            return kExitOk;
        }
        if (*lat_sig) {
            GramMatrix m = gram_from_json(read_file(ls_matrix));
            std::cout << signature_to_json(signature(m)) << "\n";
            return kExitOk;
        }
        if (*lat_irr) {
            PlaneMultigraph g = graph_from_json(read_file(li_graph));
            FlowLattice f = flow_lattice(g);
            OrientedEdgeVector v = parse_vector_arg(li_vector);
            if (static_cast<int>(v.size()) != g.edge_count())
                throw NotInLattice("vector length must match the edge count");
            ordered_json j{{"irreducible", is_irreducible(f, v, opts)}, {"simple", is_simple(f, v, opts)}};
            std::cout << j.dump() << "\n";
            return kExitOk;
        }
        if (*batch) {
            auto entries = parse_corpus_jsonl(read_file(b_file));
            BatchResult res = run_batch(entries, b_jobs);
            if (b_json) {
                ordered_json out;
                out["summary"] = res.summary;
                out["entries"] = ordered_json::array();
                for (const auto& r : res.entries) {
                    ordered_json e{{"name", r.name}, {"ok", r.ok}, {"mismatches", r.mismatches}};
                    e["report"] = r.report;
                    out["entries"].push_back(std::move(e));
                }
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& r : res.entries) {
                    std::cout << r.name << ": ";
                    if (!r.ok) std::cout << "ERROR " << r.report.at("error").at("code").get<std::string>();
                    else if (!r.mismatches.empty()) {
                        std::cout << "MISMATCH";
                        for (const auto& m : r.mismatches) std::cout << " [" << m << "]";
                    } else std::cout << "ok";
                    std::cout << "\n";
                }
                std::cout << "summary: " << res.summary.dump() << "\n";
            }
            return (res.failed == 0 && res.mismatched == 0) ? kExitOk : kExitMismatch;
        }
    } catch (const Error& e) {
        emit_error(e);
        return exit_code_for(e);
    }
    return kExitOk;
}
