#pragma once

#include <vector>

namespace knotlattice {

class LinkDiagram;

/// Pre-orientation description of a diagram: crossings with their four ends in
/// counterclockwise rotation order (end id = 4*crossing + slot), an arc pairing
/// of the ends, and the designated incoming under/over slots per crossing.
/// `realize` traverses the strands, numbers arcs canonically, and produces a
/// validated LinkDiagram.
struct RawDiagram {
    int crossing_count = 0;
    std::vector<int> pair_of;       // involution on ends, no fixed points
    std::vector<int> under_in_slot; // per crossing
    std::vector<int> over_in_slot;  // per crossing, must be under_in_slot +/- 1 mod 4
};

LinkDiagram realize(const RawDiagram& raw);
RawDiagram to_raw(const LinkDiagram& d);

} // namespace knotlattice
