#include <doctest.h>

#include "knotlattice/errors.hpp"
#include "knotlattice/flow_lattice.hpp"

#include <algorithm>
#include <random>

using namespace knotlattice;

namespace {

GramMatrix mat(std::vector<std::vector<long long>> rows) {
    GramMatrix m;
    m.m = std::move(rows);
    return m;
}

// n-cycle, unit weights
PlaneMultigraph cycle_graph(int n) {
    PlaneMultigraph g;
    g.vertex_count = n;
    for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n, +1, -1});
    g.rotation.assign(static_cast<std::size_t>(n), {});
    for (int v = 0; v < n; ++v) {
        g.rotation[static_cast<std::size_t>(v)] = {{(v + n - 1) % n, 1}, {v, 0}};
    }
    verify_embedding(g);
    return g;
}

// two vertices joined by n parallel edges, unit weights
PlaneMultigraph dipole_graph(int n) {
    PlaneMultigraph g;
    g.vertex_count = 2;
    for (int i = 0; i < n; ++i) g.edges.push_back({0, 1, +1, -1});
    g.rotation.assign(2, {});
    for (int i = 0; i < n; ++i) g.rotation[0].emplace_back(i, 0);
    for (int i = n - 1; i >= 0; --i) g.rotation[1].emplace_back(i, 1);
    verify_embedding(g);
    return g;
}

PlaneMultigraph path_graph() {
    PlaneMultigraph g;
    g.vertex_count = 2;
    g.edges.push_back({0, 1, +1, -1});
    g.rotation = {{{0, 0}}, {{0, 1}}};
    verify_embedding(g);
    return g;
}

// two triangles sharing vertex 0
PlaneMultigraph bowtie_graph() {
    PlaneMultigraph g;
    g.vertex_count = 5;
    g.edges = {{0, 1, 1, -1}, {1, 2, 1, -1}, {2, 0, 1, -1}, {0, 3, 1, -1}, {3, 4, 1, -1}, {4, 0, 1, -1}};
    g.rotation.assign(5, {});
    g.rotation[0] = {{0, 0}, {2, 1}, {3, 0}, {5, 1}};
    g.rotation[1] = {{0, 1}, {1, 0}};
    g.rotation[2] = {{1, 1}, {2, 0}};
    g.rotation[3] = {{3, 1}, {4, 0}};
    g.rotation[4] = {{4, 1}, {5, 0}};
    verify_embedding(g);
    return g;
}

} // namespace

TEST_CASE("signature on small pinned matrices") {
    CHECK(signature(mat({{2, -1}, {-1, 2}})) == SignatureTriple{2, 0, 0});
    CHECK(signature(mat({{0, 1}, {1, 0}})) == SignatureTriple{1, 1, 0});
    CHECK(signature(mat({{0}})) == SignatureTriple{0, 0, 1});
    CHECK(signature(GramMatrix::zero(0)) == SignatureTriple{0, 0, 0});
    CHECK(signature(mat({{0, 2, 0}, {2, 0, 0}, {0, 0, -5}})) == SignatureTriple{1, 2, 0});
}

TEST_CASE("definiteness verdicts") {
    CHECK(definiteness(mat({{3}})) == Definiteness::Positive);
    CHECK(definiteness(mat({{-2, 1}, {1, -2}})) == Definiteness::Negative);
    CHECK(definiteness(mat({{1, 2}, {2, 1}})) == Definiteness::Indefinite);
    CHECK(definiteness(mat({{0, 0}, {0, 1}})) == Definiteness::Degenerate);
    CHECK(definiteness(GramMatrix::zero(0)) == Definiteness::DefiniteZeroRank);
}

TEST_CASE("signature is invariant under integer congruence") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int iter = 0; iter < 200; ++iter) {
        int n = dim(rng);
        GramMatrix m = GramMatrix::zero(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                long long v = entry(rng);
                m.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                m.m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
            }
        // random unimodular U from row shears and swaps
        std::vector<std::vector<long long>> u(static_cast<std::size_t>(n),
                                              std::vector<long long>(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::uniform_int_distribution<int> shear(-2, 2);
        for (int step = 0; step < 6; ++step) {
            int i = pick(rng), j = pick(rng);
            if (i == j) continue;
            long long k = shear(rng);
            for (int col = 0; col < n; ++col)
                u[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] +=
                    k * u[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)];
        }
        GramMatrix conj = GramMatrix::zero(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long s = 0;
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        s += u[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)] * m.at(x, y) *
                             u[static_cast<std::size_t>(y)][static_cast<std::size_t>(j)];
                conj.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
            }
        CHECK(signature(conj) == signature(m));
    }
}

TEST_CASE("flow lattice of the triangle") {
    FlowLattice f = flow_lattice(cycle_graph(3));
    REQUIRE(f.rank() == 1);
    CHECK(f.gram.at(0, 0) == 3);
}

TEST_CASE("flow lattice of the 3-edge dipole") {
    FlowLattice f = flow_lattice(dipole_graph(3));
    REQUIRE(f.rank() == 2);
    // congruence-class checks: rank, signature, determinant
    CHECK(signature(f.gram) == SignatureTriple{2, 0, 0});
    long long det = f.gram.at(0, 0) * f.gram.at(1, 1) - f.gram.at(0, 1) * f.gram.at(1, 0);
    CHECK(det == 3);
}

TEST_CASE("flow lattice of a tree is trivial") {
    FlowLattice f = flow_lattice(path_graph());
    CHECK(f.rank() == 0);
    CHECK(signature(f.gram) == SignatureTriple{0, 0, 0});
}

TEST_CASE("short vector enumeration: serial equals parallel") {
    FlowLattice f = flow_lattice(dipole_graph(5));
    for (long long bound : {1, 2, 4, 8, 12}) {
        auto serial = short_vectors_serial(f.gram, bound);
        auto parallel = short_vectors(f.gram, bound, {64, true});
        CHECK(serial == parallel);
    }
    auto none = short_vectors_serial(f.gram, 0);
    CHECK(none.empty());
}

TEST_CASE("enumeration bound cap is enforced") {
    FlowLattice f = flow_lattice(cycle_graph(3));
    CHECK_THROWS_AS(short_vectors(f.gram, 100, {64, false}), BoundExceeded);
    CHECK_THROWS_AS(short_vectors(f.gram, 100, {64, true}), BoundExceeded);
}

TEST_CASE("enumeration rejects indefinite forms") {
    CHECK_THROWS_AS(short_vectors(mat({{1, 2}, {2, 1}}), 4), NotPositiveDefinite);
}

TEST_CASE("irreducible and simple elements of small flow lattices") {
    PlaneMultigraph tri = cycle_graph(3);
    FlowLattice f = flow_lattice(tri);
    OrientedEdgeVector gen{1, 1, 1};
    CHECK(is_irreducible(f, gen));
    CHECK(is_simple(f, gen));

    OrientedEdgeVector zero{0, 0, 0};
    CHECK(is_simple(f, zero));
    CHECK_FALSE(is_irreducible(f, zero));

    OrientedEdgeVector doubled{2, 2, 2};
    CHECK_FALSE(is_irreducible(f, doubled));
    CHECK_FALSE(is_simple(f, doubled));

    PlaneMultigraph dip = dipole_graph(3);
    FlowLattice fd = flow_lattice(dip);
    OrientedEdgeVector v6{1, -2, 1}; // two bigon cycles with consistent orientations
    long long n6 = inner_product(dip, v6, v6);
    CHECK(n6 == 6);
    OrientedEdgeVector w2{2, -2, 0}; // doubled bigon
    CHECK(inner_product(dip, w2, w2) == 8);
    CHECK_FALSE(is_simple(fd, w2));
    CHECK_FALSE(is_simple(fd, v6));
}

TEST_CASE("vectors outside the flow lattice are rejected") {
    FlowLattice f = flow_lattice(cycle_graph(3));
    CHECK_THROWS_AS(is_simple(f, OrientedEdgeVector{1, 0, 0}), NotInLattice);
}

TEST_CASE("oriented cycle and eulerian characterizations") {
    PlaneMultigraph tri = cycle_graph(3);
    CHECK(is_oriented_cycle(tri, {1, 1, 1}));
    CHECK(is_oriented_eulerian(tri, {1, 1, 1}));
    CHECK_FALSE(is_oriented_cycle(tri, {2, 2, 2}));
    CHECK_FALSE(is_oriented_eulerian(tri, {2, 2, 2}));
    CHECK_FALSE(is_oriented_cycle(tri, {0, 0, 0}));
    CHECK(is_oriented_eulerian(tri, {0, 0, 0}));

    PlaneMultigraph bow = bowtie_graph();
    OrientedEdgeVector both{1, 1, 1, 1, 1, 1};
    CHECK(is_oriented_eulerian(bow, both));
    CHECK_FALSE(is_oriented_cycle(bow, both));
    OrientedEdgeVector one_tri{1, 1, 1, 0, 0, 0};
    CHECK(is_oriented_cycle(bow, one_tri));
}

TEST_CASE("face cycles of triangle and dipole") {
    PlaneMultigraph tri = cycle_graph(3);
    auto cyc = face_cycles(tri);
    REQUIRE(cyc.size() == 2);
    OrientedEdgeVector sum(3, 0);
    for (const auto& c : cyc)
        for (int e = 0; e < 3; ++e) sum[static_cast<std::size_t>(e)] += c[static_cast<std::size_t>(e)];
    CHECK(sum == OrientedEdgeVector{0, 0, 0});
    for (const auto& c : cyc) CHECK(is_oriented_cycle(tri, c));

    PlaneMultigraph dip = dipole_graph(3);
    auto cyd = face_cycles(dip);
    REQUIRE(cyd.size() == 3);
    for (const auto& c : cyd) {
        int nonzero = 0;
        for (long long x : c) nonzero += x != 0;
        CHECK(nonzero == 2); // bigons
        CHECK(is_oriented_cycle(dip, c));
    }

    CHECK_THROWS_AS(face_cycles(path_graph()), HasBridge);
}

TEST_CASE("simple pair check on face cycles") {
    PlaneMultigraph tri = cycle_graph(3);
    auto cyc = face_cycles(tri);
    SimplePairReport rep = simple_pair_check(tri, cyc[0], cyc[1]);
    CHECK(rep.simple);
    CHECK(rep.opposite_orientations);
    CHECK(rep.count_identity);
    CHECK(inner_product(tri, cyc[0], cyc[1]) == -3);

    PlaneMultigraph dip = dipole_graph(3);
    auto cyd = face_cycles(dip);
    SimplePairReport repd = simple_pair_check(dip, cyd[0], cyd[1]);
    CHECK(repd.simple);
    CHECK(repd.opposite_orientations);
    CHECK(repd.count_identity);

    // same cycle twice with equal orientations on shared edges
    SimplePairReport bad = simple_pair_check(tri, cyc[0], cyc[0]);
    CHECK_FALSE(bad.simple);
    CHECK_FALSE(bad.opposite_orientations);
    CHECK_FALSE(bad.count_identity);

    CHECK_THROWS_AS(simple_pair_check(tri, OrientedEdgeVector{2, 2, 2}, cyc[0]), NotACycle);
}

TEST_CASE("edge count recovery from face cycle grams") {
    for (auto [g, expected] : {std::pair{cycle_graph(3), 3LL}, std::pair{dipole_graph(3), 3LL},
                               std::pair{cycle_graph(4), 4LL}}) {
        auto cyc = face_cycles(g);
        GramMatrix fg = GramMatrix::zero(static_cast<int>(cyc.size()));
        for (std::size_t i = 0; i < cyc.size(); ++i)
            for (std::size_t j = 0; j < cyc.size(); ++j)
                fg.m[i][j] = inner_product(g, cyc[i], cyc[j]);
        CHECK(edge_count_recovery(fg) == expected);
    }
}
