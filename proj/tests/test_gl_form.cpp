#include <doctest.h>

#include "knotlattice/errors.hpp"
#include "knotlattice/gl_form.hpp"

#include "support/builders.hpp"
#include "support/corpus.hpp"
#include "support/seifert_oracle.hpp"

using namespace knotlattice;
using namespace knotlattice::testsupport;

namespace {
const char* kTrefoilPd = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"; // left-handed
}

TEST_CASE("trefoil white form is congruent to [[2,1],[1,2]]") {
    LinkDiagram d = parse_pd(kTrefoilPd);
    GLForm w = gl_form(d, type_b_coloring(d), Color::White);
    REQUIRE(w.gram.dim() == 2);
    CHECK(w.b1 == 2);
    CHECK(signature(w.gram) == SignatureTriple{2, 0, 0});
    long long det = w.gram.at(0, 0) * w.gram.at(1, 1) - w.gram.at(0, 1) * w.gram.at(1, 0);
    CHECK(det == 3);
    CHECK(w.def == Definiteness::Positive);

    GLForm b = gl_form(d, type_b_coloring(d), Color::Black);
    CHECK(b.b1 == 1);
    CHECK(b.def == Definiteness::Negative);
    CHECK(b.gram.at(0, 0) == -3);
}

TEST_CASE("alternating diagrams have definite chessboard forms of opposite signs") {
    for (const auto& e : generate_knot_corpus(6)) {
        Coloring col = type_b_coloring(e.diagram);
        GLForm w = gl_form(e.diagram, col, Color::White);
        GLForm b = gl_form(e.diagram, col, Color::Black);
        CHECK((w.def == Definiteness::Positive || w.def == Definiteness::DefiniteZeroRank));
        CHECK((b.def == Definiteness::Negative || b.def == Definiteness::DefiniteZeroRank));
        CHECK(w.b1 + b.b1 == e.diagram.crossing_count());
    }
}

TEST_CASE("link signature pinned values") {
    LinkDiagram left = parse_pd(kTrefoilPd);
    CHECK(link_signature(left) == 2);
    CHECK(link_signature(mirror(left)) == -2);
    CHECK(link_signature(rational_link({2, 2})) == 0);                 // figure eight
    CHECK(link_signature(parse_pd("X[1,1,2,2]")) == 0);                // unknot kink
    CHECK(link_signature(torus2(2, +1)) == -1);                        // positive Hopf
    CHECK(link_signature(torus2(4, +1)) == -3);
    CHECK(link_signature(torus2(5, +1)) == -4);
}

TEST_CASE("link signature agrees with the Seifert-matrix oracle") {
    for (const auto& e : generate_knot_corpus(7)) {
        CHECK(link_signature(e.diagram) == seifert_signature(e.diagram));
        CHECK(link_signature(e.diagram) == e.sigma);
    }
    // also on non-alternating mutations
    for (const auto& d : random_diagrams(25, 7, 7))
        CHECK(link_signature(d) == seifert_signature(d));
}

TEST_CASE("theorem-level invariance: both surfaces give one sigma and one xi") {
    for (const auto& d : random_diagrams(40, 11, 7)) {
        Coloring col = analysis_coloring(d);
        GLForm w = gl_form(d, col, Color::White);
        GLForm b = gl_form(d, col, Color::Black);
        CHECK(w.sigma_s.sigma() + w.half_e_sl == b.sigma_s.sigma() + b.half_e_sl);
        CHECK(2 * w.sigma_s.sigma() + w.e_s() == 2 * b.sigma_s.sigma() + b.e_s());
        // and under the swapped coloring too
        GLForm w2 = gl_form(d, col.swapped(), Color::White);
        CHECK(w2.sigma_s.sigma() + w2.half_e_sl == w.sigma_s.sigma() + w.half_e_sl);
    }
}

TEST_CASE("murasugi xi equals sigma for knots") {
    for (const auto& e : generate_knot_corpus(6)) {
        Rat xi = murasugi_xi(e.diagram);
        CHECK(xi.den == 1);
        CHECK(xi.num == link_signature(e.diagram));
    }
}

TEST_CASE("murasugi xi is the orientation-class average for links") {
    for (LinkDiagram d : {torus2(2, +1), torus2(4, +1), torus2(6, -1), rational_link({2, 1, 2})}) {
        REQUIRE(d.components().size() == 2);
        long long total = link_signature(d) + link_signature(reverse_components(d, {1}));
        Rat xi = murasugi_xi(d);
        CHECK(xi.num * 2 == total * xi.den);
        // orientation independence of the unoriented quantity
        Rat xi_rev = murasugi_xi(reverse_components(d, {1}));
        CHECK(xi == xi_rev);
    }
}

TEST_CASE("half euler numbers relate through the total linking number") {
    for (LinkDiagram d : {torus2(2, +1), torus2(4, +1), rational_link({2, 1, 2})}) {
        Coloring col = analysis_coloring(d);
        auto [classes, counts] = classify(d, col);
        for (Color c : {Color::White, Color::Black}) {
            GLForm g = gl_form(d, col, c);
            CHECK(g.e_s() == g.e_sl() + 2 * counts.lk_total);
        }
    }
}

TEST_CASE("proof identity b(D) - a(D) = half e(B,L) - half e(W,L)") {
    for (const auto& d : random_diagrams(40, 13, 7)) {
        for (Coloring col : {default_coloring(d), default_coloring(d).swapped()}) {
            auto [classes, counts] = classify(d, col);
            GLForm w = gl_form(d, col, Color::White);
            GLForm b = gl_form(d, col, Color::Black);
            CHECK(counts.b - counts.a == b.half_e_sl - w.half_e_sl);
        }
    }
}

TEST_CASE("mirror antisymmetry") {
    for (const auto& e : generate_knot_corpus(6)) {
        LinkDiagram m = mirror(e.diagram);
        CHECK(link_signature(m) == -link_signature(e.diagram));
        Coloring col = analysis_coloring(e.diagram);
        Coloring colm = analysis_coloring(m);
        GLForm w = gl_form(e.diagram, col, Color::White);
        GLForm bm = gl_form(m, colm, Color::Black);
        CHECK(w.sigma_s.pos == bm.sigma_s.neg);
        CHECK(w.sigma_s.neg == bm.sigma_s.pos);
    }
}

TEST_CASE("gl form demands a connected diagram") {
    LinkDiagram split = disjoint_union(parse_pd(kTrefoilPd), parse_pd(kTrefoilPd));
    CHECK_THROWS_AS(gl_form(split, default_coloring(split), Color::White), NotConnected);
    CHECK_THROWS_AS(link_signature(split), NotConnected);
}
