#include "knotlattice/report.hpp"

#include "knotlattice/errors.hpp"

#include <sstream>

namespace knotlattice {

using nlohmann::ordered_json;

namespace {

ordered_json surface_json(const GLForm& g) {
    ordered_json s;
    s["color"] = g.color == Color::White ? "white" : "black";
    s["gram"] = g.gram.m;
    s["b1"] = g.b1;
    s["signature"] = {{"pos", g.sigma_s.pos}, {"neg", g.sigma_s.neg}, {"null", g.sigma_s.null}};
    s["e_s"] = g.e_s();
    s["e_sl"] = g.e_sl();
    s["definiteness"] = to_string(g.def);
    return s;
}

} // namespace

ordered_json analyze_diagram(const LinkDiagram& d, const EnumerationOptions& opts) {
    if (!d.is_connected()) throw NotConnected("analysis requires a connected diagram");
    ordered_json out;
    Coloring col = analysis_coloring(d);
    auto [classes, counts] = classify(d, col);
    DiagramPredicates pred = diagram_predicates(d);

    out["c"] = counts.c;
    out["writhe"] = counts.writhe;
    out["components"] = d.components().size();
    out["faces"] = d.face_count();
    out["counts"] = {{"a", counts.a}, {"b", counts.b}, {"p", counts.p}, {"n", counts.n},
                     {"lk_total", counts.lk_total}};

    GLForm w = gl_form(d, col, Color::White);
    GLForm b = gl_form(d, col, Color::Black);
    out["surfaces"] = ordered_json::array({surface_json(w), surface_json(b)});

    LinkInvariants inv = link_invariants(d);
    out["sigma_l"] = inv.sigma_l;
    out["xi_l"] = {{"num", inv.xi_l.num}, {"den", inv.xi_l.den}};

    AlternatingVerdict v = detect_alternating(d);
    out["alternating"] = {{"verdict", v.is_alternating},
                          {"white_definiteness", to_string(v.white_definiteness)},
                          {"black_definiteness", to_string(v.black_definiteness)},
                          {"equality_chain",
                           {{"b_minus_a_abs", v.chain.b_minus_a_abs},
                            {"sigma_sum", v.chain.sigma_sum},
                            {"c", v.chain.c},
                            {"first_tight", v.chain.first_tight},
                            {"second_tight", v.chain.second_tight}}}};
    out["reduced"] = pred.is_reduced;
    if (v.is_alternating) {
        out["reduced_via_lattice"] = reduced_via_lattice(d, opts);
        SpecialGenusReport sg = special_genus_check(d);
        out["special"] = {{"is_special", sg.is_special},
                          {"genus_identity_holds", sg.genus_identity_holds},
                          {"sigma_abs", sg.sigma_abs},
                          {"seifert_circles", sg.seifert_circle_count}};
    } else {
        out["reduced_via_lattice"] = nullptr;
        out["special"] = nullptr;
    }
    SeifertCircles sc = seifert_circles(d);
    out["seifert"] = {{"s", sc.count}, {"b1", sc.b1}};
    return out;
}

std::string render_report(const ordered_json& r) {
    std::ostringstream os;
    os << "crossings        " << r.at("c").get<long long>() << "\n";
    os << "writhe           " << r.at("writhe").get<long long>() << "\n";
    os << "components       " << r.at("components").get<long long>() << "\n";
    os << "faces            " << r.at("faces").get<long long>() << "\n";
    os << "sigma(L)         " << r.at("sigma_l").get<long long>() << "\n";
    const auto& xi = r.at("xi_l");
    os << "xi(L)            " << xi.at("num").get<long long>();
    if (xi.at("den").get<long long>() != 1) os << "/" << xi.at("den").get<long long>();
    os << "\n";
    os << "alternating      " << (r.at("alternating").at("verdict").get<bool>() ? "yes" : "no") << "\n";
    os << "reduced          " << (r.at("reduced").get<bool>() ? "yes" : "no") << "\n";
    for (const auto& s : r.at("surfaces")) {
        os << s.at("color").get<std::string>() << " surface    b1=" << s.at("b1").get<long long>()
           << " definiteness=" << s.at("definiteness").get<std::string>()
           << " e(S)=" << s.at("e_s").get<long long>() << " e(S,L)=" << s.at("e_sl").get<long long>() << "\n";
    }
    if (!r.at("special").is_null()) {
        const auto& sg = r.at("special");
        os << "special          " << (sg.at("is_special").get<bool>() ? "yes" : "no");
        if (sg.at("is_special").get<bool>())
            os << " (genus identity " << (sg.at("genus_identity_holds").get<bool>() ? "holds" : "fails") << ")";
        os << "\n";
    }
    return os.str();
}

ordered_json tait_report_json(const TaitReport& rep) {
    auto one = [](const TaitDiagramReport& r) {
        return ordered_json{{"c", r.c},
                            {"writhe", r.writhe},
                            {"connected", r.connected},
                            {"reduced", r.reduced},
                            {"alternating", r.alternating}};
    };
    return ordered_json{{"first", one(rep.first)},
                        {"second", one(rep.second)},
                        {"crossing_numbers_agree", rep.crossing_numbers_agree},
                        {"writhes_agree", rep.writhes_agree}};
}

} // namespace knotlattice
