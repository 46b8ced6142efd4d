#pragma once

#include "knotlattice/tait_graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace knotlattice {

/// Symmetric integer Gram matrix.
struct GramMatrix {
    std::vector<std::vector<long long>> m;

    int dim() const { return static_cast<int>(m.size()); }
    long long at(int i, int j) const { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    static GramMatrix zero(int n) {
        GramMatrix g;
        g.m.assign(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
        return g;
    }
    bool symmetric() const;
};

struct SignatureTriple {
    int pos = 0, neg = 0, null = 0;
    int sigma() const { return pos - neg; }
    bool operator==(const SignatureTriple&) const = default;
};

enum class Definiteness { Positive, Negative, Indefinite, Degenerate, DefiniteZeroRank };

/// Exact signature by symmetric elimination over rationals; zero-diagonal
/// blocks are reduced with the hyperbolic 2x2 pivot, which contributes one
/// +1 and one -1.
SignatureTriple signature(const GramMatrix& m);

Definiteness definiteness(const GramMatrix& m);
std::string to_string(Definiteness d);

/// Flow lattice of a connected weighted plane multigraph in its fundamental
/// cycle basis.
struct FlowLattice {
    PlaneMultigraph graph;
    std::vector<OrientedEdgeVector> basis; // rank many edge vectors
    GramMatrix gram;

    int rank() const { return static_cast<int>(basis.size()); }
    /// Coordinates of an edge vector in the fundamental basis; nullopt when
    /// the vector is not a flow of the graph.
    std::optional<std::vector<long long>> coordinates(const OrientedEdgeVector& v) const;
};

FlowLattice flow_lattice(const PlaneMultigraph& g);

// --- bounded-norm vector enumeration -------------------------------------------

struct EnumerationOptions {
    long long hard_cap = 64; // refuse bounds beyond this (BoundExceeded)
    bool parallel = false;   // OpenMP over top-level branches
};

long long enumeration_hard_cap_from_env(long long fallback = 64);

/// All nonzero coefficient vectors x with x^T gram x <= bound, one
/// representative per +-pair (first nonzero coefficient positive), sorted
/// lexicographically.  Requires a positive definite Gram matrix.
std::vector<std::vector<long long>> short_vectors(const GramMatrix& gram, long long bound,
                                                  const EnumerationOptions& opts = {});

/// Serial reference implementation kept alongside the parallel kernel; the two
/// must agree entrywise.
std::vector<std::vector<long long>> short_vectors_serial(const GramMatrix& gram, long long bound,
                                                         long long hard_cap = 64);

// --- lattice element tests -------------------------------------------------------

/// Definition-based tests by finite enumeration: v is irreducible when
/// v.x < x.x for every nonzero x, simple when v.x <= x.x for every x.
bool is_irreducible(const FlowLattice& f, const OrientedEdgeVector& v, const EnumerationOptions& opts = {});
bool is_simple(const FlowLattice& f, const OrientedEdgeVector& v, const EnumerationOptions& opts = {});

/// Combinatorial characterizations.
bool is_oriented_cycle(const PlaneMultigraph& g, const OrientedEdgeVector& v);
bool is_oriented_eulerian(const PlaneMultigraph& g, const OrientedEdgeVector& v);

struct SimplePairReport {
    bool simple = false;                // C_i + C_j simple in the flow lattice
    bool opposite_orientations = false; // on every shared edge
    bool count_identity = false;        // |E(C_i) ∩ E(C_j)| == -C_i.C_j
};

/// Evaluates the three equivalent conditions independently (unit weights).
SimplePairReport simple_pair_check(const PlaneMultigraph& g, const OrientedEdgeVector& ci,
                                   const OrientedEdgeVector& cj);

/// Recovers |E(G)| from the pairwise inner products of the oriented face
/// cycles: sum over i<j of -(C_i . C_j).
long long edge_count_recovery(const GramMatrix& face_gram);

long long inner_product(const PlaneMultigraph& g, const OrientedEdgeVector& a, const OrientedEdgeVector& b);

std::string gram_to_json(const GramMatrix& m);
GramMatrix gram_from_json(const std::string& text);
std::string signature_to_json(const SignatureTriple& s);

} // namespace knotlattice
