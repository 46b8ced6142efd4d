#pragma once

#include "knotlattice/diagram.hpp"
#include "knotlattice/flow_lattice.hpp"

#include <utility>

namespace knotlattice {

/// Chessboard pairing of one surface together with its euler numbers.
/// Half-euler numbers are stored as integers (they are crossing-count
/// differences); e_S = e_SL + 2*lk_total.
struct GLForm {
    Color color = Color::White;
    GramMatrix gram;
    int b1 = 0;
    long long half_e_sl = 0; // (1/2) e(S,L)
    long long half_e_s = 0;  // (1/2) e(S)
    SignatureTriple sigma_s;
    Definiteness def = Definiteness::DefiniteZeroRank;

    long long e_sl() const { return 2 * half_e_sl; }
    long long e_s() const { return 2 * half_e_s; }
};

/// Exact rational (integer + half-integer safe) value.
struct Rat {
    long long num = 0;
    long long den = 1;
    bool operator==(const Rat&) const = default;
};

struct LinkInvariants {
    long long sigma_l = 0;
    Rat xi_l;
    int crossing_number = 0;
    int writhe = 0;
};

GLForm gl_form(const LinkDiagram& d, const Coloring& col, Color color);

/// sigma(S) + (1/2) e(S,L), equal for both surfaces; for an all-type-b
/// coloring also checked against sigma(W) - p(D).
long long link_signature(const LinkDiagram& d);

/// sigma(S) + (1/2) e(S), independent of orientation and of the chosen
/// surface.
Rat murasugi_xi(const LinkDiagram& d);

LinkInvariants link_invariants(const LinkDiagram& d);

/// The coloring used for invariant computations: the all-type-b coloring when
/// it exists, otherwise the default coloring.
Coloring analysis_coloring(const LinkDiagram& d);

} // namespace knotlattice
