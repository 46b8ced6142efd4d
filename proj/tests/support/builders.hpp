#pragma once

#include "knotlattice/diagram.hpp"

#include <vector>

namespace knotlattice::testsupport {

/// Braid letter: 1-based strand position, sign = handedness.
struct BraidLetter {
    int position;
    int sign;
};

/// Markov closure of a braid word on `strands` strands, all strands oriented
/// the same way.  Strands never used by the word vanish (no crossingless
/// components are emitted).
LinkDiagram braid_closure(int strands, const std::vector<BraidLetter>& word);

/// Torus link T(2,n) as the closure of a 2-strand braid; sign picks the
/// handedness of every crossing.
LinkDiagram torus2(int n, int sign = +1);

/// Numerator closure of the positive rational tangle built from the twist
/// vector (a_1,...,a_k), alternating right twists and bottom twists.  All
/// entries must be >= 1.  The result is an alternating 4-plat diagram.
LinkDiagram rational_link(const std::vector<int>& twists);

/// Standard pretzel diagram P(a,b,c) with vertical twist columns, all >= 1.
LinkDiagram pretzel(int a, int b, int c);

/// Insert a positive or negative kink on the given arc.
LinkDiagram add_kink(const LinkDiagram& d, Arc arc, int sign);

/// Diagram-level disjoint union (arc ids of `b` shifted past those of `a`).
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

} // namespace knotlattice::testsupport
