#include <doctest.h>

#include "support/graph_family.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

using namespace knotlattice;
using namespace knotlattice::testsupport;

namespace {

// independent brute-force enumeration of connected bridgeless multigraphs
// with <= max_edges edges, up to isomorphism over all vertex permutations
int brute_force_count(int max_edges, int edges_exact) {
    std::set<std::string> classes;
    for (int v = 1; v <= edges_exact; ++v) {
        // all edge multisets over pairs (i<=j) of size edges_exact
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < v; ++i)
            for (int j = i; j < v; ++j) pairs.emplace_back(i, j);
        std::vector<int> pick(static_cast<std::size_t>(edges_exact), 0);
        std::function<void(int, int)> rec = [&](int pos, int min_pair) {
            if (pos == edges_exact) {
                std::vector<std::pair<int, int>> edges;
                for (int k = 0; k < edges_exact; ++k) edges.push_back(pairs[static_cast<std::size_t>(pick[static_cast<std::size_t>(k)])]);
                // every vertex used
                std::set<int> used;
                for (auto [a, b] : edges) {
                    used.insert(a);
                    used.insert(b);
                }
                if (static_cast<int>(used.size()) != v) return;
                // connected
                std::vector<int> comp(static_cast<std::size_t>(v), -1);
                std::vector<int> stack{0};
                comp[0] = 0;
                while (!stack.empty()) {
                    int x = stack.back();
                    stack.pop_back();
                    for (auto [a, b] : edges) {
                        int o = a == x ? b : (b == x ? a : -1);
                        if (o >= 0 && comp[static_cast<std::size_t>(o)] < 0) {
                            comp[static_cast<std::size_t>(o)] = 0;
                            stack.push_back(o);
                        }
                    }
                }
                for (int x = 0; x < v; ++x)
                    if (comp[static_cast<std::size_t>(x)] < 0) return;
                // bridgeless: removing any single non-loop edge keeps it connected
                for (int k = 0; k < edges_exact; ++k) {
                    auto [a, b] = edges[static_cast<std::size_t>(k)];
                    if (a == b) continue;
                    std::vector<int> c2(static_cast<std::size_t>(v), -1);
                    std::vector<int> st{0};
                    c2[0] = 0;
                    while (!st.empty()) {
                        int x = st.back();
                        st.pop_back();
                        for (int k2 = 0; k2 < edges_exact; ++k2) {
                            if (k2 == k) continue;
                            auto [p, q] = edges[static_cast<std::size_t>(k2)];
                            int o = p == x ? q : (q == x ? p : -1);
                            if (o >= 0 && c2[static_cast<std::size_t>(o)] < 0) {
                                c2[static_cast<std::size_t>(o)] = 0;
                                st.push_back(o);
                            }
                        }
                    }
                    for (int x = 0; x < v; ++x)
                        if (c2[static_cast<std::size_t>(x)] < 0) return;
                }
                // canonical form over all permutations (v is small here)
                std::vector<int> perm(static_cast<std::size_t>(v));
                std::iota(perm.begin(), perm.end(), 0);
                std::string best;
                do {
                    std::vector<std::pair<int, int>> rel;
                    for (auto [a, b] : edges) {
                        int x = perm[static_cast<std::size_t>(a)], y = perm[static_cast<std::size_t>(b)];
                        rel.emplace_back(std::min(x, y), std::max(x, y));
                    }
                    std::sort(rel.begin(), rel.end());
                    std::ostringstream os;
                    os << v << ':';
                    for (auto [a, b] : rel) os << a << ',' << b << ';';
                    std::string key = os.str();
                    if (best.empty() || key < best) best = key;
                } while (std::next_permutation(perm.begin(), perm.end()));
                classes.insert(best);
                return;
            }
            for (int p = min_pair; p < static_cast<int>(pairs.size()); ++p) {
                pick[static_cast<std::size_t>(pos)] = p;
                rec(pos + 1, p);
            }
        };
        rec(0, 0);
    }
    (void)max_edges;
    return static_cast<int>(classes.size());
}

} // namespace

TEST_CASE("family generation matches an independent brute force on small sizes") {
    auto family = bridgeless_plane_multigraphs(4);
    std::map<int, int> by_edges;
    for (const auto& g : family) by_edges[g.edge_count()]++;
    for (int e = 1; e <= 4; ++e) CHECK(by_edges[e] == brute_force_count(4, e));
}

TEST_CASE("family sizes per edge count") {
    auto family = bridgeless_plane_multigraphs(8);
    std::map<int, int> by_edges;
    for (const auto& g : family) by_edges[g.edge_count()]++;
    const std::map<int, int> expected{{1, 1}, {2, 2}, {3, 4}, {4, 9}, {5, 21}, {6, 61}, {7, 176}, {8, 588}};
    for (const auto& [e, n] : expected) CHECK(by_edges[e] == n);
}

TEST_CASE("every family member is a connected bridgeless sphere embedding") {
    for (const auto& g : bridgeless_plane_multigraphs(6)) {
        CHECK(graph_connected(g));
        CHECK(bridge_edges(g).empty());
        CHECK_NOTHROW(verify_embedding(g));
        // face cycles exist and cover all oriented edges
        auto cyc = face_cycles(g);
        long long darts = 0;
        for (const auto& cvec : cyc)
            for (long long x : cvec) darts += std::abs(x);
        CHECK(darts == 2 * g.edge_count());
    }
}
