#include "knotlattice/gl_form.hpp"

#include "knotlattice/errors.hpp"
#include "knotlattice/tait_graph.hpp"

#include <string>

namespace knotlattice {

GLForm gl_form(const LinkDiagram& d, const Coloring& col, Color color) {
    if (!d.is_connected()) throw NotConnected("gl_form requires a connected diagram");
    GLForm g;
    g.color = color;
    FlowLattice f = flow_lattice(tait_graph(d, col, color));
    g.gram = f.gram;

    auto [classes, counts] = classify(d, col);
    long long b_II = 0, a_II = 0, a_I = 0, b_I = 0;
    for (const auto& cc : classes) {
        bool is_b = cc.color_type == ColorType::B;
        bool is_I = cc.orientation_type == OrientationType::I;
        if (is_b && is_I) b_I++;
        if (is_b && !is_I) b_II++;
        if (!is_b && is_I) a_I++;
        if (!is_b && !is_I) a_II++;
    }
    g.half_e_sl = (color == Color::Black) ? (b_II - a_II) : (a_I - b_I);
    g.half_e_s = g.half_e_sl + counts.lk_total;

    int same_color_faces = 0;
    for (const auto& face : d.faces())
        if (col.of(face.id) == color) same_color_faces++;
    g.b1 = d.crossing_count() - same_color_faces + 1;
    if (g.b1 != f.rank())
        throw InternalConventionError("first betti number disagrees with the flow lattice rank");

    g.sigma_s = signature(g.gram);
    g.def = definiteness(g.gram);
    return g;
}

Coloring analysis_coloring(const LinkDiagram& d) {
    if (auto col = try_type_b_coloring(d)) return *col;
    return default_coloring(d);
}

long long link_signature(const LinkDiagram& d) {
    if (!d.is_connected()) throw NotConnected("link_signature requires a connected diagram");
    Coloring col = analysis_coloring(d);
    GLForm w = gl_form(d, col, Color::White);
    GLForm b = gl_form(d, col, Color::Black);
    long long via_white = w.sigma_s.sigma() + w.half_e_sl;
    long long via_black = b.sigma_s.sigma() + b.half_e_sl;
    if (via_white != via_black)
        throw InternalConventionError("white and black surfaces disagree on the link signature: " +
                                      std::to_string(via_white) + " vs " + std::to_string(via_black));
    if (try_type_b_coloring(d)) {
        auto [classes, counts] = classify(d, col);
        if (via_white != w.sigma_s.sigma() - counts.p)
            throw InternalConventionError("all-type-b identity sigma(L) = sigma(W) - p(D) failed");
    }
    return via_white;
}

Rat murasugi_xi(const LinkDiagram& d) {
    if (!d.is_connected()) throw NotConnected("murasugi_xi requires a connected diagram");
    Coloring col = analysis_coloring(d);
    GLForm w = gl_form(d, col, Color::White);
    GLForm b = gl_form(d, col, Color::Black);
    long long via_white = 2 * w.sigma_s.sigma() + w.e_s(); // 2*xi to stay in integers
    long long via_black = 2 * b.sigma_s.sigma() + b.e_s();
    if (via_white != via_black)
        throw InternalConventionError("white and black surfaces disagree on xi");
    Rat xi;
    if (via_white % 2 == 0) {
        xi.num = via_white / 2;
        xi.den = 1;
    } else {
        xi.num = via_white;
        xi.den = 2;
    }
    return xi;
}

LinkInvariants link_invariants(const LinkDiagram& d) {
    LinkInvariants inv;
    inv.sigma_l = link_signature(d);
    inv.xi_l = murasugi_xi(d);
    auto [classes, counts] = classify(d, analysis_coloring(d));
    inv.crossing_number = counts.c;
    inv.writhe = counts.writhe;
    return inv;
}

} // namespace knotlattice
