#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace knotlattice {

using Arc = int;

/// One crossing in PD convention: the four arc ids in the quadrants, listed
/// counterclockwise starting at the incoming under-strand.
struct Crossing {
    int id = 0;
    std::array<Arc, 4> quadrants{};
};

enum class Color : std::uint8_t { Black, White };

inline Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }

/// Checkerboard coloring: one color per face id.
struct Coloring {
    std::vector<Color> face_colors;
    Color of(int face) const { return face_colors.at(static_cast<std::size_t>(face)); }
    Coloring swapped() const {
        Coloring s = *this;
        for (auto& c : s.face_colors) c = opposite(c);
        return s;
    }
};

enum class ColorType : std::uint8_t { A, B };
enum class OrientationType : std::uint8_t { I, II };

struct CrossingClass {
    int sign = 0; // +1 or -1
    ColorType color_type = ColorType::A;
    OrientationType orientation_type = OrientationType::I;
};

struct DiagramCounts {
    int a = 0, b = 0;           // color-type counts
    int p = 0, n = 0;           // positive / negative crossings
    int c = 0;                  // crossing number of the diagram
    int writhe = 0;             // p - n
    long long lk_total = 0;     // sum of pairwise linking numbers
    std::map<std::pair<int, int>, long long> pairwise_lk;
};

/// A face of the diagram: cyclic sequence of (crossing, quadrant) corners.
struct Face {
    int id = 0;
    std::vector<std::pair<int, int>> corners;
};

struct DiagramPredicates {
    bool is_connected = false;
    bool is_reduced = false;
    bool is_alternating_syntactic = false;
};

struct SeifertCircles {
    int count = 0;                           // s
    std::vector<std::vector<Arc>> circles;   // arcs along each circle, in orientation order
    int b1 = 0;                              // c - s + (#connected pieces of the diagram)
    bool matches_white_class = false;        // circle set == boundaries of the white faces
    bool matches_black_class = false;
};

/// Validated combinatorial link diagram.  Immutable after construction.
///
/// Arc numbering defines the orientation: within each link component the
/// successor of an arc is the next-larger arc id, cyclically.  The quadrant
/// lists define the rotation system; construction verifies the sphere
/// embedding (V - E + F = 2 per connected piece).
class LinkDiagram {
public:
    /// Build from raw crossings; throws MalformedPd/ArcMultiplicity/
    /// NonPlanar/InconsistentOrientation on invalid input.
    explicit LinkDiagram(std::vector<Crossing> crossings);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }

    /// Link components as oriented arc cycles, ordered by smallest arc id.
    const std::vector<std::vector<Arc>>& components() const { return components_; }
    int component_of_arc(Arc a) const { return component_of_arc_.at(a); }
    Arc successor(Arc a) const { return successor_.at(a); }

    /// Slot (1 or 3) where the over-strand enters crossing i.
    int over_in_slot(int crossing) const { return over_in_slot_[static_cast<std::size_t>(crossing)]; }
    /// Crossing sign: +1 iff the over-strand runs from quadrant slot 3 to slot 1.
    int crossing_sign(int crossing) const { return over_in_slot(crossing) == 3 ? +1 : -1; }

    int face_count() const { return static_cast<int>(faces_.size()); }
    const std::vector<Face>& faces() const;
    /// Face id at corner q of crossing i (corner q lies between quadrant
    /// slots q and q+1 mod 4).
    int face_at_corner(int crossing, int q) const {
        return corner_face_[static_cast<std::size_t>(4 * crossing + q)];
    }
    /// The two face ids separated by an arc (its left and right side).
    std::pair<int, int> faces_of_arc(Arc a) const;

    bool is_connected() const { return connected_pieces_ == 1; }
    int connected_pieces() const { return connected_pieces_; }

    std::vector<Arc> arcs_sorted() const;

private:
    std::vector<Crossing> crossings_;
    std::map<Arc, Arc> successor_;
    std::map<Arc, int> component_of_arc_;
    std::vector<std::vector<Arc>> components_;
    std::vector<int> over_in_slot_;
    std::vector<int> corner_face_;       // 4c entries
    std::vector<Face> faces_;
    std::map<Arc, std::array<int, 2>> arc_ends_; // arc -> its two darts (4*crossing+slot)
    int connected_pieces_ = 0;

    friend class DiagramOps;
};

// --- parsing / emission -----------------------------------------------------

LinkDiagram parse_pd(const std::string& text);
LinkDiagram parse_gauss_signed(const std::string& text);

/// Stable PD emission: crossings in id order, arcs renumbered 1..2c along
/// components in a canonical order.  Byte-identical for identical input.
std::string emit_pd(const LinkDiagram& d);
std::string emit_gauss_signed(const LinkDiagram& d);

/// Canonical form used for comparing diagrams up to relabeling: the
/// lexicographically smallest PD emission over all traversal anchors.
std::string canonical_code(const LinkDiagram& d);

// --- diagram-level operations ------------------------------------------------

std::vector<Face> faces(const LinkDiagram& d);

/// Default proper checkerboard coloring: face 0 (the designated unbounded
/// face) is White.
Coloring default_coloring(const LinkDiagram& d);

/// The checkerboard coloring under which every crossing has color-type b.
/// Exists iff the connected diagram is alternating; throws NoAllBColoring.
Coloring type_b_coloring(const LinkDiagram& d);
std::optional<Coloring> try_type_b_coloring(const LinkDiagram& d);

CrossingClass classify_crossing(const LinkDiagram& d, const Coloring& col, int crossing);
std::pair<std::vector<CrossingClass>, DiagramCounts>
classify(const LinkDiagram& d, const Coloring& col);

DiagramPredicates diagram_predicates(const LinkDiagram& d);

SeifertCircles seifert_circles(const LinkDiagram& d);

// --- structural transforms (library helpers; used by xi and the test suites) --

LinkDiagram mirror(const LinkDiagram& d);
LinkDiagram reverse_components(const LinkDiagram& d, const std::vector<int>& which);
LinkDiagram reverse_all(const LinkDiagram& d);

} // namespace knotlattice
