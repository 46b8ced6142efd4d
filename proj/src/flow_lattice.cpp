#include "knotlattice/flow_lattice.hpp"

#include "knotlattice/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace knotlattice {

using Rational = boost::multiprecision::cpp_rational;

bool GramMatrix::symmetric() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < i; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

SignatureTriple signature(const GramMatrix& m) {
    if (!m.symmetric()) throw InternalConventionError("signature requires a symmetric matrix");
    const int n = m.dim();
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
    std::vector<int> live(static_cast<std::size_t>(n));
    std::iota(live.begin(), live.end(), 0);
    SignatureTriple sig;

    auto eliminate_one = [&](int k) {
        // symmetric elimination of row/column k with a[k][k] != 0; row k must
        // stay intact until every other row has been reduced
        Rational pivot = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        for (int i : live) {
            if (i == k) continue;
            Rational factor = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] / pivot;
            if (factor == 0) continue;
            for (int j : live) {
                if (j == k) continue;
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    factor * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            }
        }
        for (int i : live) {
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
            a[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = 0;
        }
    };

    while (!live.empty()) {
        int pivot = -1;
        for (int k : live)
            if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] != 0) {
                pivot = k;
                break;
            }
        if (pivot >= 0) {
            bool positive = a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(pivot)] > 0;
            eliminate_one(pivot);
            if (positive) sig.pos++;
            else sig.neg++;
            live.erase(std::find(live.begin(), live.end(), pivot));
            continue;
        }
        // all diagonal entries vanish; find an off-diagonal hyperbolic pair
        int bi = -1, bj = -1;
        for (std::size_t x = 0; x < live.size() && bi < 0; ++x)
            for (std::size_t y = x + 1; y < live.size() && bi < 0; ++y)
                if (a[static_cast<std::size_t>(live[x])][static_cast<std::size_t>(live[y])] != 0) {
                    bi = live[x];
                    bj = live[y];
                }
        if (bi < 0) {
            sig.null += static_cast<int>(live.size());
            break;
        }
        // hyperbolic block: contributes one +1 and one -1
        Rational b = a[static_cast<std::size_t>(bi)][static_cast<std::size_t>(bj)];
        for (int u : live) {
            if (u == bi || u == bj) continue;
            Rational ci = a[static_cast<std::size_t>(u)][static_cast<std::size_t>(bi)] / b;
            Rational cj = a[static_cast<std::size_t>(u)][static_cast<std::size_t>(bj)] / b;
            for (int v : live) {
                if (v == bi || v == bj) continue;
                a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] -=
                    ci * a[static_cast<std::size_t>(bj)][static_cast<std::size_t>(v)] +
                    cj * a[static_cast<std::size_t>(bi)][static_cast<std::size_t>(v)];
            }
        }
        for (int u : live) {
            if (u == bi || u == bj) continue;
            a[static_cast<std::size_t>(u)][static_cast<std::size_t>(bi)] = 0;
            a[static_cast<std::size_t>(bi)][static_cast<std::size_t>(u)] = 0;
            a[static_cast<std::size_t>(u)][static_cast<std::size_t>(bj)] = 0;
            a[static_cast<std::size_t>(bj)][static_cast<std::size_t>(u)] = 0;
        }
        sig.pos++;
        sig.neg++;
        live.erase(std::find(live.begin(), live.end(), bi));
        live.erase(std::find(live.begin(), live.end(), bj));
    }
    return sig;
}

Definiteness definiteness(const GramMatrix& m) {
    const int n = m.dim();
    if (n == 0) return Definiteness::DefiniteZeroRank;
    SignatureTriple s = signature(m);
    if (s.null > 0) return Definiteness::Degenerate;
    if (s.pos == n) return Definiteness::Positive;
    if (s.neg == n) return Definiteness::Negative;
    return Definiteness::Indefinite;
}

std::string to_string(Definiteness d) {
    switch (d) {
    case Definiteness::Positive: return "positive";
    case Definiteness::Negative: return "negative";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Degenerate: return "degenerate";
    case Definiteness::DefiniteZeroRank: return "definite-rank-0";
    }
    return "?";
}

// --- flow lattice ------------------------------------------------------------------

FlowLattice flow_lattice(const PlaneMultigraph& g) {
    if (!graph_connected(g)) throw NotConnected("flow_lattice requires a connected graph");
    FlowLattice f;
    f.graph = g;
    // BFS spanning tree, vertices and edges in id order
    std::vector<int> parent_edge(static_cast<std::size_t>(g.vertex_count), -1);
    std::vector<int> seen(static_cast<std::size_t>(g.vertex_count), 0);
    std::vector<int> tree; // edge ids
    std::queue<int> work;
    seen[0] = 1;
    work.push(0);
    std::vector<int> order{0};
    while (!work.empty()) {
        int v = work.front();
        work.pop();
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& ed = g.edges[static_cast<std::size_t>(e)];
            int o = -1;
            if (ed.tail == v) o = ed.head;
            else if (ed.head == v) o = ed.tail;
            else continue;
            if (!seen[static_cast<std::size_t>(o)]) {
                seen[static_cast<std::size_t>(o)] = 1;
                parent_edge[static_cast<std::size_t>(o)] = e;
                tree.push_back(e);
                work.push(o);
            }
        }
    }
    std::set<int> in_tree(tree.begin(), tree.end());
    // fundamental cycle of a non-tree edge: the edge tail->head plus the tree
    // path head -> tail
    auto tree_path_to_root = [&](int v) {
        std::vector<std::pair<int, int>> steps; // (edge, direction: +1 along tail->head)
        while (parent_edge[static_cast<std::size_t>(v)] >= 0) {
            int e = parent_edge[static_cast<std::size_t>(v)];
            const auto& ed = g.edges[static_cast<std::size_t>(e)];
            if (ed.head == v) {
                steps.emplace_back(e, -1); // walk head -> tail
                v = ed.tail;
            } else {
                steps.emplace_back(e, +1);
                v = ed.head;
            }
        }
        return steps;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_tree.count(e)) continue;
        const auto& ed = g.edges[static_cast<std::size_t>(e)];
        OrientedEdgeVector c(static_cast<std::size_t>(g.edge_count()), 0);
        c[static_cast<std::size_t>(e)] = 1;
        // walk head up to the root, then tail up to the root; shared segments cancel
        for (auto [pe, dir] : tree_path_to_root(ed.head)) c[static_cast<std::size_t>(pe)] += dir;
        for (auto [pe, dir] : tree_path_to_root(ed.tail)) c[static_cast<std::size_t>(pe)] -= dir;
        f.basis.push_back(std::move(c));
    }
    const int r = static_cast<int>(f.basis.size());
    f.gram = GramMatrix::zero(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            f.gram.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                inner_product(g, f.basis[static_cast<std::size_t>(i)], f.basis[static_cast<std::size_t>(j)]);
    return f;
}

long long inner_product(const PlaneMultigraph& g, const OrientedEdgeVector& a, const OrientedEdgeVector& b) {
    long long s = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        s += g.edges[static_cast<std::size_t>(e)].weight * a[static_cast<std::size_t>(e)] *
             b[static_cast<std::size_t>(e)];
    return s;
}

std::optional<std::vector<long long>> FlowLattice::coordinates(const OrientedEdgeVector& v) const {
    if (static_cast<int>(v.size()) != graph.edge_count()) return std::nullopt;
    // coordinates are the coefficients on the non-tree edges (each basis vector
    // has a 1 there and 0 on the other non-tree edges)
    std::vector<long long> coords(basis.size(), 0);
    OrientedEdgeVector rebuilt(static_cast<std::size_t>(graph.edge_count()), 0);
    // locate defining edges: edge e is defining for basis k iff basis[k][e]==1
    // and every other basis vector vanishes there
    std::vector<int> defining(basis.size(), -1);
    for (int e = 0; e < graph.edge_count(); ++e) {
        int owner = -1, count = 0;
        for (int k = 0; k < static_cast<int>(basis.size()); ++k)
            if (basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)] != 0) {
                owner = k;
                ++count;
            }
        if (count == 1 && basis[static_cast<std::size_t>(owner)][static_cast<std::size_t>(e)] == 1 &&
            defining[static_cast<std::size_t>(owner)] < 0)
            defining[static_cast<std::size_t>(owner)] = e;
    }
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
        if (defining[static_cast<std::size_t>(k)] < 0) return std::nullopt;
        coords[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(defining[static_cast<std::size_t>(k)])];
    }
    for (int k = 0; k < static_cast<int>(basis.size()); ++k)
        for (int e = 0; e < graph.edge_count(); ++e)
            rebuilt[static_cast<std::size_t>(e)] +=
                coords[static_cast<std::size_t>(k)] * basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)];
    if (rebuilt != v) return std::nullopt;
    return coords;
}

// --- enumeration -------------------------------------------------------------------

long long enumeration_hard_cap_from_env(long long fallback) {
    if (const char* s = std::getenv("KNOTLATTICE_NORM_BOUND")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return fallback;
}

namespace {

struct Ldl {
    // q(x) = sum_i d[i] * (x_i + sum_{j>i} r[i][j] x_j)^2
    std::vector<Rational> d;
    std::vector<std::vector<Rational>> r;
};

Ldl ldl_decompose(const GramMatrix& m) {
    const int n = m.dim();
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
    Ldl out;
    out.d.assign(static_cast<std::size_t>(n), 0);
    out.r.assign(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        Rational pivot = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        if (pivot <= 0) throw NotPositiveDefinite("enumeration requires a positive definite Gram matrix");
        out.d[static_cast<std::size_t>(i)] = pivot;
        for (int j = i + 1; j < n; ++j)
            out.r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] / pivot;
        for (int u = i + 1; u < n; ++u)
            for (int v = i + 1; v < n; ++v)
                a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] -=
                    a[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)] *
                    out.r[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
    }
    return out;
}

// enumerate level i (descending); budget = remaining norm allowance
void enumerate_level(const Ldl& L, int i, Rational budget, std::vector<long long>& x,
                     std::vector<std::vector<long long>>& out) {
    if (i < 0) {
        out.push_back(x);
        return;
    }
    Rational t = 0;
    for (int j = i + 1; j < static_cast<int>(x.size()); ++j)
        t += L.r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    // term = d[i]*(x_i + t)^2 <= budget; expand outward from the center -t
    Rational center = -t;
    long long base = static_cast<long long>(boost::multiprecision::numerator(center) /
                                            boost::multiprecision::denominator(center));
    auto term_ok = [&](long long xi) {
        Rational s = Rational(xi) + t;
        return L.d[static_cast<std::size_t>(i)] * s * s <= budget;
    };
    auto descend = [&](long long xi) {
        Rational s = Rational(xi) + t;
        Rational used = L.d[static_cast<std::size_t>(i)] * s * s;
        x[static_cast<std::size_t>(i)] = xi;
        enumerate_level(L, i - 1, budget - used, x, out);
        x[static_cast<std::size_t>(i)] = 0;
    };
    // locate some admissible starting point near the center, then sweep both ways
    long long c0 = base;
    if (!term_ok(c0)) {
        if (term_ok(c0 + 1)) c0 = c0 + 1;
        else if (term_ok(c0 - 1)) c0 = c0 - 1;
        else return;
    }
    for (long long xi = c0; term_ok(xi); ++xi) descend(xi);
    for (long long xi = c0 - 1; term_ok(xi); --xi) descend(xi);
}

void normalize_and_sort(std::vector<std::vector<long long>>& vecs) {
    std::vector<std::vector<long long>> keep;
    for (auto& v : vecs) {
        bool zero = true, flip = false;
        for (long long c : v) {
            if (c != 0) {
                zero = false;
                flip = c < 0;
                break;
            }
        }
        if (zero) continue;
        if (flip)
            for (auto& c : v) c = -c;
        keep.push_back(std::move(v));
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    vecs = std::move(keep);
}

} // namespace

std::vector<std::vector<long long>> short_vectors_serial(const GramMatrix& gram, long long bound,
                                                         long long hard_cap) {
    if (bound > hard_cap)
        throw BoundExceeded("requested norm bound " + std::to_string(bound) + " exceeds the hard cap " +
                            std::to_string(hard_cap));
    const int n = gram.dim();
    std::vector<std::vector<long long>> out;
    if (n == 0 || bound < 0) return out;
    Ldl L = ldl_decompose(gram);
    std::vector<long long> x(static_cast<std::size_t>(n), 0);
    enumerate_level(L, n - 1, Rational(bound), x, out);
    normalize_and_sort(out);
    return out;
}

std::vector<std::vector<long long>> short_vectors(const GramMatrix& gram, long long bound,
                                                  const EnumerationOptions& opts) {
    if (!opts.parallel) return short_vectors_serial(gram, bound, opts.hard_cap);
    if (bound > opts.hard_cap)
        throw BoundExceeded("requested norm bound " + std::to_string(bound) + " exceeds the hard cap " +
                            std::to_string(opts.hard_cap));
    const int n = gram.dim();
    std::vector<std::vector<long long>> out;
    if (n == 0 || bound < 0) return out;
    Ldl L = ldl_decompose(gram);
    // top-level candidates: d[n-1] * x^2 <= bound
    std::vector<long long> tops;
    for (long long xi = 0; L.d[static_cast<std::size_t>(n - 1)] * xi * xi <= Rational(bound); ++xi) {
        tops.push_back(xi);
        if (xi != 0) tops.push_back(-xi);
    }
    std::vector<std::vector<std::vector<long long>>> partial(tops.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < tops.size(); ++k) {
        std::vector<long long> x(static_cast<std::size_t>(n), 0);
        x[static_cast<std::size_t>(n - 1)] = tops[k];
        Rational sq = Rational(tops[k]) * tops[k];
        Rational used = L.d[static_cast<std::size_t>(n - 1)] * sq;
        enumerate_level(L, n - 2, Rational(bound) - used, x, partial[k]);
    }
    for (auto& p : partial)
        for (auto& v : p) out.push_back(std::move(v));
    normalize_and_sort(out);
    return out;
}

// --- element tests ------------------------------------------------------------------

namespace {

long long gram_norm(const GramMatrix& g, const std::vector<long long>& x) {
    long long s = 0;
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            s += g.at(i, j) * x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
    return s;
}

long long gram_pairing(const GramMatrix& g, const std::vector<long long>& x, const std::vector<long long>& y) {
    long long s = 0;
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            s += g.at(i, j) * x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
    return s;
}

std::vector<long long> lattice_coords(const FlowLattice& f, const OrientedEdgeVector& v) {
    auto coords = f.coordinates(v);
    if (!coords) throw NotInLattice("vector is not a flow of the graph");
    return *coords;
}

} // namespace

bool is_irreducible(const FlowLattice& f, const OrientedEdgeVector& v, const EnumerationOptions& opts) {
    if (definiteness(f.gram) != Definiteness::Positive && f.rank() > 0)
        throw NotPositiveDefinite("irreducibility test requires a positive definite flow lattice");
    std::vector<long long> vc = lattice_coords(f, v);
    long long vv = gram_norm(f.gram, vc);
    if (vv == 0) return false; // the zero element is simple but not irreducible
    // any violating x (distinct from v itself) has x.x <= v.x <= |v||x|,
    // hence x.x <= v.v
    for (const auto& x : short_vectors(f.gram, vv, opts)) {
        long long xx = gram_norm(f.gram, x);
        long long vx = gram_pairing(f.gram, vc, x);
        std::vector<long long> neg(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
        if (x != vc && vx >= xx) return false;
        if (neg != vc && -vx >= xx) return false;
    }
    return true;
}

bool is_simple(const FlowLattice& f, const OrientedEdgeVector& v, const EnumerationOptions& opts) {
    if (definiteness(f.gram) != Definiteness::Positive && f.rank() > 0)
        throw NotPositiveDefinite("simplicity test requires a positive definite flow lattice");
    std::vector<long long> vc = lattice_coords(f, v);
    long long vv = gram_norm(f.gram, vc);
    if (vv == 0) return true;
    // a violating x has x.x < v.x <= |v||x|, hence x.x < v.v
    for (const auto& x : short_vectors(f.gram, vv - 1, opts)) {
        long long xx = gram_norm(f.gram, x);
        long long vx = gram_pairing(f.gram, vc, x);
        if (vx > xx || -vx > xx) return false;
    }
    return true;
}

bool is_oriented_eulerian(const PlaneMultigraph& g, const OrientedEdgeVector& v) {
    std::vector<long long> in(static_cast<std::size_t>(g.vertex_count), 0),
        out(static_cast<std::size_t>(g.vertex_count), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        long long k = v[static_cast<std::size_t>(e)];
        if (k < -1 || k > 1) return false;
        if (k == 0) continue;
        const auto& ed = g.edges[static_cast<std::size_t>(e)];
        int from = k > 0 ? ed.tail : ed.head;
        int to = k > 0 ? ed.head : ed.tail;
        out[static_cast<std::size_t>(from)]++;
        in[static_cast<std::size_t>(to)]++;
    }
    return in == out;
}

bool is_oriented_cycle(const PlaneMultigraph& g, const OrientedEdgeVector& v) {
    if (!is_oriented_eulerian(g, v)) return false;
    // each touched vertex must have in-degree exactly 1, and the support must
    // be connected and nonempty
    std::vector<long long> in(static_cast<std::size_t>(g.vertex_count), 0);
    std::vector<int> support;
    for (int e = 0; e < g.edge_count(); ++e) {
        long long k = v[static_cast<std::size_t>(e)];
        if (k == 0) continue;
        support.push_back(e);
        const auto& ed = g.edges[static_cast<std::size_t>(e)];
        in[static_cast<std::size_t>(k > 0 ? ed.head : ed.tail)]++;
    }
    if (support.empty()) return false;
    for (long long d : in)
        if (d > 1) return false;
    // connectivity of the support
    std::set<int> verts;
    for (int e : support) {
        verts.insert(g.edges[static_cast<std::size_t>(e)].tail);
        verts.insert(g.edges[static_cast<std::size_t>(e)].head);
    }
    std::set<int> reached;
    std::queue<int> work;
    work.push(*verts.begin());
    reached.insert(*verts.begin());
    while (!work.empty()) {
        int u = work.front();
        work.pop();
        for (int e : support) {
            const auto& ed = g.edges[static_cast<std::size_t>(e)];
            for (auto [x, y] : {std::pair{ed.tail, ed.head}, std::pair{ed.head, ed.tail}})
                if (x == u && !reached.count(y)) {
                    reached.insert(y);
                    work.push(y);
                }
        }
    }
    return reached.size() == verts.size();
}

SimplePairReport simple_pair_check(const PlaneMultigraph& g, const OrientedEdgeVector& ci,
                                   const OrientedEdgeVector& cj) {
    for (const auto& e : g.edges)
        if (e.weight != 1) throw NotACycle("simple_pair_check requires unit edge weights");
    if (!is_oriented_cycle(g, ci) || !is_oriented_cycle(g, cj))
        throw NotACycle("simple_pair_check requires oriented cycles");
    SimplePairReport rep;
    OrientedEdgeVector sum(ci.size());
    for (std::size_t e = 0; e < ci.size(); ++e) sum[e] = ci[e] + cj[e];
    FlowLattice f = flow_lattice(g);
    rep.simple = is_simple(f, sum);
    rep.opposite_orientations = true;
    long long shared = 0;
    for (std::size_t e = 0; e < ci.size(); ++e) {
        if (ci[e] != 0 && cj[e] != 0) {
            ++shared;
            if (ci[e] != -cj[e]) rep.opposite_orientations = false;
        }
    }
    rep.count_identity = (shared == -inner_product(g, ci, cj));
    return rep;
}

long long edge_count_recovery(const GramMatrix& face_gram) {
    long long total = 0;
    for (int i = 0; i < face_gram.dim(); ++i)
        for (int j = i + 1; j < face_gram.dim(); ++j) total += -face_gram.at(i, j);
    return total;
}

// --- JSON ---------------------------------------------------------------------------

std::string gram_to_json(const GramMatrix& m) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& row : m.m) j.push_back(row);
    return j.dump();
}

GramMatrix gram_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedCorpus(std::string("invalid matrix JSON: ") + e.what());
    }
    GramMatrix m;
    for (const auto& row : j) {
        std::vector<long long> r;
        for (const auto& x : row) r.push_back(x.get<long long>());
        m.m.push_back(std::move(r));
    }
    for (const auto& row : m.m)
        if (row.size() != m.m.size()) throw MalformedCorpus("matrix is not square");
    if (!m.symmetric()) throw MalformedCorpus("matrix is not symmetric");
    return m;
}

std::string signature_to_json(const SignatureTriple& s) {
    nlohmann::ordered_json j;
    j["pos"] = s.pos;
    j["neg"] = s.neg;
    j["null"] = s.null;
    return j.dump();
}

} // namespace knotlattice
