#pragma once

#include "knotlattice/gl_form.hpp"

namespace knotlattice {

struct EqualityChain {
    long long b_minus_a_abs = 0;   // |b(D) - a(D)|
    long long sigma_sum = 0;       // |sigma(W)| + |sigma(B)|
    long long c = 0;               // crossing number
    bool first_tight = false;      // |b-a| == |sigma(W)|+|sigma(B)|
    bool second_tight = false;     // |sigma(W)|+|sigma(B)| == c
};

struct AlternatingVerdict {
    bool is_alternating = false;
    Definiteness white_definiteness = Definiteness::DefiniteZeroRank;
    Definiteness black_definiteness = Definiteness::DefiniteZeroRank;
    EqualityChain chain;
};

/// Definiteness-based alternating detection: the diagram is alternating iff
/// the two chessboard forms are definite of opposite signs, iff the equality
/// chain |b-a| <= |sigma(W)|+|sigma(B)| <= c is tight.  The verdict is checked
/// against the syntactic test.
AlternatingVerdict detect_alternating(const LinkDiagram& d);

/// True iff neither definite form contains a vector of self-pairing +-1;
/// agrees with the reducedness predicate on alternating diagrams.
bool reduced_via_lattice(const LinkDiagram& d, const EnumerationOptions& opts = {});

struct TaitDiagramReport {
    int c = 0;
    int writhe = 0;
    bool connected = false;
    bool reduced = false;
    bool alternating = false;
};

struct TaitReport {
    TaitDiagramReport first, second;
    bool crossing_numbers_agree = false;
    bool writhes_agree = false;
};

/// Recomputes crossing number and writhe of two diagrams the caller asserts
/// to present the same link; both must be connected, reduced and alternating.
TaitReport verify_tait_pair(const LinkDiagram& d1, const LinkDiagram& d2);

struct SpecialGenusReport {
    bool is_special = false;          // Seifert circles = one color class boundary
    bool genus_identity_holds = false; // |sigma(L)| == c - s + 1
    long long sigma_abs = 0;
    int seifert_circle_count = 0;
};

SpecialGenusReport special_genus_check(const LinkDiagram& d);

} // namespace knotlattice
