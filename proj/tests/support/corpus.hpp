#pragma once

#include "support/builders.hpp"

#include <string>
#include <vector>

namespace knotlattice::testsupport {

struct GeneratedEntry {
    std::string name;
    LinkDiagram diagram;
    long long sigma;   // from the Seifert oracle
    int writhe;
    long long fraction_p = 0; // 2-bridge fraction numerator (0 for non-rational entries)
};

/// The bundled knot corpus: every 2-bridge knot admitting an alternating
/// diagram with at most `max_crossings` crossings (both chiralities), plus the
/// pretzel P(3,3,2) and two alternating 3-braid closures.  Entries carry
/// oracle-computed signatures.
std::vector<GeneratedEntry> generate_knot_corpus(int max_crossings = 8);

struct GeneratedPair {
    std::string name;
    LinkDiagram first, second;
    bool same_link; // caller-level assertion for verify_tait_pair
};

/// Reduced alternating diagram pairs presenting the same knot (continued
/// fraction inverses, pretzel rotations, alternative constructions) plus the
/// trefoil-vs-mirror negative control.
std::vector<GeneratedPair> generate_tait_pairs();

std::string corpus_to_jsonl(const std::vector<GeneratedEntry>& entries);
std::string pairs_to_jsonl(const std::vector<GeneratedPair>& pairs);

/// Deterministic pseudo-random mutations of corpus diagrams (crossing
/// switches), used for the detector soundness sweeps.
std::vector<LinkDiagram> random_diagrams(int count, unsigned seed, int max_crossings = 8);

} // namespace knotlattice::testsupport
