#include "knotlattice/alternating.hpp"

#include "knotlattice/errors.hpp"

#include <cstdlib>

namespace knotlattice {

namespace {

bool definite_of_sign(Definiteness d, bool positive) {
    if (d == Definiteness::DefiniteZeroRank) return true;
    return positive ? d == Definiteness::Positive : d == Definiteness::Negative;
}

} // namespace

AlternatingVerdict detect_alternating(const LinkDiagram& d) {
    if (!d.is_connected()) throw NotConnected("detect_alternating requires a connected diagram");
    // under the all-type-b coloring (when it exists) the white surface is the
    // positive definite one
    Coloring col = analysis_coloring(d);
    GLForm w = gl_form(d, col, Color::White);
    GLForm b = gl_form(d, col, Color::Black);
    auto [classes, counts] = classify(d, col);

    AlternatingVerdict v;
    v.white_definiteness = w.def;
    v.black_definiteness = b.def;
    v.chain.b_minus_a_abs = std::llabs(static_cast<long long>(counts.b - counts.a));
    v.chain.sigma_sum = std::llabs(static_cast<long long>(w.sigma_s.sigma())) +
                        std::llabs(static_cast<long long>(b.sigma_s.sigma()));
    v.chain.c = counts.c;
    v.chain.first_tight = v.chain.b_minus_a_abs == v.chain.sigma_sum;
    v.chain.second_tight = v.chain.sigma_sum == v.chain.c;

    bool opposite = (definite_of_sign(w.def, true) && definite_of_sign(b.def, false)) ||
                    (definite_of_sign(w.def, false) && definite_of_sign(b.def, true));
    v.is_alternating = opposite;

    if (v.is_alternating != diagram_predicates(d).is_alternating_syntactic)
        throw InternalConventionError("definiteness verdict disagrees with the syntactic test");
    if (v.is_alternating != (v.chain.first_tight && v.chain.second_tight))
        throw InternalConventionError("equality chain tightness disagrees with the verdict");
    return v;
}

bool reduced_via_lattice(const LinkDiagram& d, const EnumerationOptions& opts) {
    AlternatingVerdict v = detect_alternating(d);
    if (!v.is_alternating) throw NotAlternating("reduced_via_lattice requires an alternating diagram");
    Coloring col = default_coloring(d);
    for (Color color : {Color::White, Color::Black}) {
        GLForm g = gl_form(d, col, color);
        GramMatrix m = g.gram;
        // search the positive definite representative for self-pairing 1
        bool negative = definiteness(m) == Definiteness::Negative;
        if (negative)
            for (auto& row : m.m)
                for (auto& x : row) x = -x;
        for (const auto& vec : short_vectors(m, 1, opts)) {
            long long norm = 0;
            for (int i = 0; i < m.dim(); ++i)
                for (int j = 0; j < m.dim(); ++j)
                    norm += m.at(i, j) * vec[static_cast<std::size_t>(i)] * vec[static_cast<std::size_t>(j)];
            if (norm == 1) return false;
        }
    }
    return true;
}

namespace {

TaitDiagramReport tait_report_one(const LinkDiagram& d) {
    TaitDiagramReport r;
    DiagramPredicates p = diagram_predicates(d);
    r.connected = p.is_connected;
    r.reduced = p.is_reduced;
    r.alternating = p.is_alternating_syntactic;
    r.c = d.crossing_count();
    if (r.connected) {
        auto [classes, counts] = classify(d, default_coloring(d));
        r.writhe = counts.writhe;
    }
    return r;
}

} // namespace

TaitReport verify_tait_pair(const LinkDiagram& d1, const LinkDiagram& d2) {
    TaitReport rep;
    rep.first = tait_report_one(d1);
    rep.second = tait_report_one(d2);
    auto gate = [](const TaitDiagramReport& r, const char* which) {
        if (!r.connected) throw PreconditionFailed(std::string(which) + " diagram is not connected");
        if (!r.reduced) throw PreconditionFailed(std::string(which) + " diagram is not reduced");
        if (!r.alternating) throw PreconditionFailed(std::string(which) + " diagram is not alternating");
    };
    gate(rep.first, "first");
    gate(rep.second, "second");
    rep.crossing_numbers_agree = rep.first.c == rep.second.c;
    rep.writhes_agree = rep.first.writhe == rep.second.writhe;
    return rep;
}

SpecialGenusReport special_genus_check(const LinkDiagram& d) {
    AlternatingVerdict v = detect_alternating(d);
    if (!v.is_alternating) throw NotAlternating("special_genus_check requires an alternating diagram");
    SpecialGenusReport r;
    SeifertCircles sc = seifert_circles(d);
    r.seifert_circle_count = sc.count;
    r.is_special = sc.matches_white_class || sc.matches_black_class;
    r.sigma_abs = std::llabs(link_signature(d));
    r.genus_identity_holds = (r.sigma_abs == d.crossing_count() - sc.count + 1);
    return r;
}

} // namespace knotlattice
