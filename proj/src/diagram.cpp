#include "knotlattice/diagram.hpp"

#include "knotlattice/errors.hpp"
#include "knotlattice/raw_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace knotlattice {

namespace {

int dart_of(int crossing, int slot) { return 4 * crossing + slot; }
int dart_crossing(int d) { return d / 4; }
int dart_slot(int d) { return d % 4; }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
    const int c = static_cast<int>(crossings_.size());
    if (c == 0) throw MalformedPd("empty diagram (crossingless diagrams are not supported)");

    for (int i = 0; i < c; ++i) crossings_[static_cast<std::size_t>(i)].id = i;

    // Each arc id must occur exactly twice; record its two darts.
    for (int i = 0; i < c; ++i) {
        for (int s = 0; s < 4; ++s) {
            Arc a = crossings_[static_cast<std::size_t>(i)].quadrants[static_cast<std::size_t>(s)];
            if (a <= 0) throw MalformedPd("arc ids must be positive integers");
            auto [it, fresh] = arc_ends_.try_emplace(a, std::array<int, 2>{-1, -1});
            auto& ends = it->second;
            if (ends[0] < 0) ends[0] = dart_of(i, s);
            else if (ends[1] < 0) ends[1] = dart_of(i, s);
            else throw ArcMultiplicity("arc " + std::to_string(a) + " appears more than twice");
            (void)fresh;
        }
    }
    for (const auto& [a, ends] : arc_ends_)
        if (ends[1] < 0) throw ArcMultiplicity("arc " + std::to_string(a) + " appears only once");

    // Link components from the undirected strand passages: under joins
    // quadrants 0-2, over joins 1-3.
    {
        std::map<Arc, int> idx;
        std::vector<Arc> arcs;
        for (const auto& [a, ends] : arc_ends_) {
            idx[a] = static_cast<int>(arcs.size());
            arcs.push_back(a);
        }
        UnionFind uf(static_cast<int>(arcs.size()));
        for (const auto& x : crossings_) {
            uf.unite(idx[x.quadrants[0]], idx[x.quadrants[2]]);
            uf.unite(idx[x.quadrants[1]], idx[x.quadrants[3]]);
        }
        std::map<int, std::vector<Arc>> groups;
        for (Arc a : arcs) groups[uf.find(idx[a])].push_back(a);
        for (auto& [root, g] : groups) {
            std::sort(g.begin(), g.end());
            components_.push_back(g);
        }
        std::sort(components_.begin(), components_.end(),
                  [](const auto& x, const auto& y) { return x.front() < y.front(); });
        for (int k = 0; k < static_cast<int>(components_.size()); ++k) {
            const auto& g = components_[static_cast<std::size_t>(k)];
            for (std::size_t j = 0; j < g.size(); ++j) {
                component_of_arc_[g[j]] = k;
                successor_[g[j]] = g[(j + 1) % g.size()];
            }
        }
    }

    // Under passages must agree with the numbering-induced orientation.
    for (const auto& x : crossings_) {
        if (successor_.at(x.quadrants[0]) != x.quadrants[2])
            throw InconsistentOrientation("under strand at crossing " + std::to_string(x.id) +
                                          " does not follow the arc numbering");
    }

    // Over-strand direction per crossing.  Usually the successor relation
    // decides; ties (short components that never pass under) are resolved by
    // head/tail typing of the arc ends, seeded by the under passages.
    over_in_slot_.assign(static_cast<std::size_t>(c), 0);
    {
        // end type: +1 head (arc ends here), -1 tail (arc begins here), 0 unknown
        std::vector<int> end_type(static_cast<std::size_t>(4 * c), 0);
        auto other_end = [&](int d) {
            const auto& ends = arc_ends_.at(
                crossings_[static_cast<std::size_t>(dart_crossing(d))].quadrants[static_cast<std::size_t>(dart_slot(d))]);
            return ends[0] == d ? ends[1] : ends[0];
        };
        std::queue<int> work; // darts with freshly known type
        auto set_type = [&](int d, int t) {
            if (end_type[static_cast<std::size_t>(d)] == 0) {
                end_type[static_cast<std::size_t>(d)] = t;
                work.push(d);
            } else if (end_type[static_cast<std::size_t>(d)] != t) {
                throw InconsistentOrientation("conflicting strand directions");
            }
        };
        for (int i = 0; i < c; ++i) {
            const auto& q = crossings_[static_cast<std::size_t>(i)].quadrants;
            bool fwd31 = successor_.at(q[3]) == q[1]; // over runs slot3 -> slot1
            bool fwd13 = successor_.at(q[1]) == q[3];
            if (fwd31 && !fwd13) {
                set_type(dart_of(i, 3), +1);
                set_type(dart_of(i, 1), -1);
            } else if (fwd13 && !fwd31) {
                set_type(dart_of(i, 1), +1);
                set_type(dart_of(i, 3), -1);
            } else if (!fwd13 && !fwd31) {
                throw InconsistentOrientation("over strand at crossing " + std::to_string(i) +
                                              " does not follow the arc numbering");
            }
            set_type(dart_of(i, 0), +1);
            set_type(dart_of(i, 2), -1);
        }
        while (true) {
            while (!work.empty()) {
                int d = work.front();
                work.pop();
                set_type(other_end(d), -end_type[static_cast<std::size_t>(d)]);
                // within a crossing, the two over ends are one head + one tail
                int s = dart_slot(d);
                if (s == 1 || s == 3) {
                    int mate = dart_of(dart_crossing(d), s ^ 2);
                    set_type(mate, -end_type[static_cast<std::size_t>(d)]);
                }
            }
            // components never passing under can remain untyped; break the tie
            // deterministically at the first untyped over end
            int pick = -1;
            for (int d = 0; d < 4 * c && pick < 0; ++d)
                if (end_type[static_cast<std::size_t>(d)] == 0 && (dart_slot(d) % 2) == 1) pick = d;
            if (pick < 0) break;
            set_type(pick, +1);
        }
        for (int i = 0; i < c; ++i) {
            int t1 = end_type[static_cast<std::size_t>(dart_of(i, 1))];
            over_in_slot_[static_cast<std::size_t>(i)] = (t1 == +1) ? 1 : 3;
        }
    }

    // Faces by rotation-system traversal (face kept on the left of each
    // outgoing dart; the dart at slot q carries corner q).
    {
        corner_face_.assign(static_cast<std::size_t>(4 * c), -1);
        auto twin = [&](int d) {
            const auto& ends = arc_ends_.at(
                crossings_[static_cast<std::size_t>(dart_crossing(d))].quadrants[static_cast<std::size_t>(dart_slot(d))]);
            return ends[0] == d ? ends[1] : ends[0];
        };
        for (int start = 0; start < 4 * c; ++start) {
            if (corner_face_[static_cast<std::size_t>(start)] >= 0) continue;
            Face f;
            f.id = static_cast<int>(faces_.size());
            int d = start;
            do {
                corner_face_[static_cast<std::size_t>(d)] = f.id;
                f.corners.emplace_back(dart_crossing(d), dart_slot(d));
                int e = twin(d);
                d = dart_of(dart_crossing(e), (dart_slot(e) + 3) % 4);
            } while (d != start);
            faces_.push_back(std::move(f));
        }
    }

    // Connectivity of the underlying 4-valent graph, and the per-piece Euler
    // check V - E + F = 2 (with E = 2V).
    {
        UnionFind uf(c);
        for (const auto& [a, ends] : arc_ends_) uf.unite(dart_crossing(ends[0]), dart_crossing(ends[1]));
        std::map<int, int> piece_vertices, piece_faces;
        for (int i = 0; i < c; ++i) piece_vertices[uf.find(i)]++;
        for (const auto& f : faces_) piece_faces[uf.find(f.corners.front().first)]++;
        connected_pieces_ = static_cast<int>(piece_vertices.size());
        for (const auto& [root, v] : piece_vertices) {
            if (piece_faces[root] != v + 2)
                throw NonPlanar("rotation system is not a sphere embedding (Euler check failed)");
        }
    }
}

const std::vector<Face>& LinkDiagram::faces() const { return faces_; }

std::pair<int, int> LinkDiagram::faces_of_arc(Arc a) const {
    const auto& ends = arc_ends_.at(a);
    return {corner_face_[static_cast<std::size_t>(ends[0])], corner_face_[static_cast<std::size_t>(ends[1])]};
}

std::vector<Arc> LinkDiagram::arcs_sorted() const {
    std::vector<Arc> out;
    out.reserve(arc_ends_.size());
    for (const auto& [a, ends] : arc_ends_) out.push_back(a);
    return out;
}

// --- parsing ------------------------------------------------------------------

namespace {

LinkDiagram diagram_from_tuples(const std::vector<std::array<int, 4>>& tuples) {
    std::vector<Crossing> cs;
    cs.reserve(tuples.size());
    for (const auto& t : tuples) {
        Crossing x;
        x.quadrants = {t[0], t[1], t[2], t[3]};
        cs.push_back(x);
    }
    return LinkDiagram(std::move(cs));
}

LinkDiagram parse_pd_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedPd(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("pd") || !j["pd"].is_array())
        throw MalformedPd("JSON form must be an object with a \"pd\" array");
    std::vector<std::array<int, 4>> tuples;
    for (const auto& row : j["pd"]) {
        if (!row.is_array() || row.size() != 4) throw MalformedPd("each pd entry must have 4 arc ids");
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
            if (!row[static_cast<std::size_t>(k)].is_number_integer()) throw MalformedPd("arc ids must be integers");
            t[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k)].get<int>();
        }
        tuples.push_back(t);
    }
    if (tuples.empty()) throw MalformedPd("empty diagram");
    return diagram_from_tuples(tuples);
}

} // namespace

LinkDiagram parse_pd(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw MalformedPd("empty diagram");
    if (text[first] == '{') return parse_pd_json(text);

    std::vector<std::array<int, 4>> tuples;
    std::size_t i = first;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        if (text[i] != 'X' && text[i] != 'x') throw MalformedPd("expected 'X[' term");
        ++i;
        if (i >= text.size() || text[i] != '[') throw MalformedPd("expected '[' after X");
        ++i;
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
            while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
                ++i;
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw MalformedPd("expected arc id");
            t[static_cast<std::size_t>(k)] = std::stoi(text.substr(i, j - i));
            i = j;
        }
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size() || text[i] != ']') throw MalformedPd("expected ']'");
        ++i;
        tuples.push_back(t);
    }
    if (tuples.empty()) throw MalformedPd("empty diagram");
    return diagram_from_tuples(tuples);
}

LinkDiagram parse_gauss_signed(const std::string& text) {
    struct Token {
        bool over;
        int label;
        int sign;
    };
    std::vector<std::vector<Token>> comps(1);
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '-') {
            // '-' may be a separator or a sign; a sign is consumed with its token
            ++i;
            continue;
        }
        if (ch == ';') {
            comps.emplace_back();
            ++i;
            continue;
        }
        if (ch != 'O' && ch != 'o' && ch != 'U' && ch != 'u')
            throw MalformedGauss("expected O or U token");
        Token t{};
        t.over = (ch == 'O' || ch == 'o');
        ++i;
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw MalformedGauss("expected crossing label");
        t.label = std::stoi(text.substr(i, j - i));
        i = j;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            t.sign = text[i] == '+' ? +1 : -1;
            ++i;
        } else {
            t.sign = 0; // may inherit from the partner token of the same label
        }
        comps.back().push_back(t);
    }
    while (!comps.empty() && comps.back().empty()) comps.pop_back();
    if (comps.empty()) throw MalformedGauss("empty Gauss code");
    for (const auto& comp : comps)
        if (comp.empty()) throw MalformedGauss("empty component");

    // Passage table per label.
    struct Passage {
        int comp = -1, pos = -1;
    };
    std::map<int, Passage> overs, unders;
    std::map<int, int> signs;
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
        for (int pi = 0; pi < static_cast<int>(comps[static_cast<std::size_t>(ci)].size()); ++pi) {
            const Token& t = comps[static_cast<std::size_t>(ci)][static_cast<std::size_t>(pi)];
            auto& tab = t.over ? overs : unders;
            if (tab.count(t.label))
                throw MalformedGauss("label " + std::to_string(t.label) + " repeated");
            tab[t.label] = {ci, pi};
            auto [it, fresh] = signs.try_emplace(t.label, t.sign);
            if (!fresh) {
                if (it->second != 0 && t.sign != 0 && it->second != t.sign)
                    throw MalformedGauss("conflicting signs for label " + std::to_string(t.label));
                if (it->second == 0) it->second = t.sign;
            }
        }
    }
    if (overs.size() != unders.size()) throw MalformedGauss("every label needs one O and one U token");
    for (const auto& [lab, p] : overs)
        if (!unders.count(lab)) throw MalformedGauss("label " + std::to_string(lab) + " missing a U token");
    for (const auto& [lab, s] : signs)
        if (s == 0)
            throw UnsignedCode("unsigned Gauss codes are rejected; write O1+/U1- style tokens");

    // Arc ids: consecutive along each component; the arc after token (ci,pi)
    // gets the next id.
    std::vector<int> comp_base(comps.size());
    int next = 1;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        comp_base[ci] = next;
        next += static_cast<int>(comps[ci].size());
    }
    auto arc_after = [&](int ci, int pi) { return comp_base[static_cast<std::size_t>(ci)] + pi; };
    auto arc_before = [&](int ci, int pi) {
        int m = static_cast<int>(comps[static_cast<std::size_t>(ci)].size());
        return comp_base[static_cast<std::size_t>(ci)] + (pi + m - 1) % m;
    };

    std::vector<std::array<int, 4>> tuples;
    for (const auto& [lab, up] : unders) {
        const Passage& op = overs.at(lab);
        int under_in = arc_before(up.comp, up.pos);
        int under_out = arc_after(up.comp, up.pos);
        int over_in = arc_before(op.comp, op.pos);
        int over_out = arc_after(op.comp, op.pos);
        std::array<int, 4> t{};
        t[0] = under_in;
        t[2] = under_out;
        if (signs.at(lab) > 0) {
            t[3] = over_in;
            t[1] = over_out;
        } else {
            t[1] = over_in;
            t[3] = over_out;
        }
        tuples.push_back(t);
    }
    try {
        return diagram_from_tuples(tuples);
    } catch (const NonPlanar&) {
        throw UnrealizableCode("signed code does not define a planar rotation system");
    }
}

// --- emission ------------------------------------------------------------------

namespace {

// Renumber arcs 1..2c given a component visit order and a start arc in each.
std::map<Arc, Arc> renumbering(const LinkDiagram& d, const std::vector<int>& comp_order,
                               const std::vector<Arc>& starts) {
    std::map<Arc, Arc> m;
    Arc next = 1;
    for (std::size_t k = 0; k < comp_order.size(); ++k) {
        Arc a = starts[k];
        do {
            m[a] = next++;
            a = d.successor(a);
        } while (a != starts[k]);
    }
    return m;
}

std::string emit_with(const LinkDiagram& d, const std::map<Arc, Arc>& ren) {
    // crossings ordered by their renumbered under-in arc
    std::vector<std::pair<Arc, const Crossing*>> order;
    for (const auto& x : d.crossings()) order.emplace_back(ren.at(x.quadrants[0]), &x);
    std::sort(order.begin(), order.end());
    std::ostringstream os;
    bool sep = false;
    for (const auto& [key, x] : order) {
        if (sep) os << ' ';
        sep = true;
        os << "X[" << ren.at(x->quadrants[0]) << ',' << ren.at(x->quadrants[1]) << ','
           << ren.at(x->quadrants[2]) << ',' << ren.at(x->quadrants[3]) << ']';
    }
    return os.str();
}

} // namespace

std::string emit_pd(const LinkDiagram& d) {
    std::vector<int> comp_order(d.components().size());
    std::iota(comp_order.begin(), comp_order.end(), 0);
    std::vector<Arc> starts;
    starts.reserve(comp_order.size());
    for (int k : comp_order) starts.push_back(d.components()[static_cast<std::size_t>(k)].front());
    return emit_with(d, renumbering(d, comp_order, starts));
}

std::string canonical_code(const LinkDiagram& d) {
    const int m = static_cast<int>(d.components().size());
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        // enumerate start arcs per component (product over components)
        std::vector<std::size_t> pos(static_cast<std::size_t>(m), 0);
        while (true) {
            std::vector<Arc> starts;
            for (int k = 0; k < m; ++k) {
                const auto& comp = d.components()[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
                starts.push_back(comp[pos[static_cast<std::size_t>(k)]]);
            }
            std::string code = emit_with(d, renumbering(d, perm, starts));
            if (best.empty() || code < best) best = code;
            int k = m - 1;
            while (k >= 0) {
                const auto& comp = d.components()[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
                if (++pos[static_cast<std::size_t>(k)] < comp.size()) break;
                pos[static_cast<std::size_t>(k)] = 0;
                --k;
            }
            if (k < 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string emit_gauss_signed(const LinkDiagram& d) {
    // crossing labels = 1 + index ordered by under-in arc
    std::map<Arc, Arc> iden;
    for (Arc a : d.arcs_sorted()) iden[a] = a;
    std::map<int, int> label; // crossing id -> label
    {
        std::vector<std::pair<Arc, int>> order;
        for (const auto& x : d.crossings()) order.emplace_back(x.quadrants[0], x.id);
        std::sort(order.begin(), order.end());
        int next = 1;
        for (auto& [a, id] : order) label[id] = next++;
    }
    // walk each component arc by arc; each arc's head end is a passage
    std::ostringstream os;
    bool first_comp = true;
    for (const auto& comp : d.components()) {
        if (!first_comp) os << ';';
        first_comp = false;
        bool sep = false;
        for (Arc a : comp) {
            // passage where arc `a` ends: find the crossing with a as under-in
            // (slot 0) or over-in.
            for (const auto& x : d.crossings()) {
                int oin = d.over_in_slot(x.id);
                bool under = x.quadrants[0] == a && d.successor(a) == x.quadrants[2];
                bool over = x.quadrants[static_cast<std::size_t>(oin)] == a &&
                            d.successor(a) == x.quadrants[static_cast<std::size_t>(oin ^ 2)];
                // an arc can be both under-in and over-in at the same crossing
                // (one-crossing components); order those passages by slot
                if (under) {
                    if (sep) os << '-';
                    sep = true;
                    os << 'U' << label[x.id] << (d.crossing_sign(x.id) > 0 ? '+' : '-');
                }
                if (over && !(under && x.quadrants[0] == x.quadrants[static_cast<std::size_t>(oin)])) {
                    if (sep) os << '-';
                    sep = true;
                    os << 'O' << label[x.id] << (d.crossing_sign(x.id) > 0 ? '+' : '-');
                }
            }
        }
    }
    return os.str();
}

// --- colorings ------------------------------------------------------------------

Coloring default_coloring(const LinkDiagram& d) {
    Coloring col;
    col.face_colors.assign(static_cast<std::size_t>(d.face_count()), Color::Black);
    std::vector<int> seen(static_cast<std::size_t>(d.face_count()), 0);
    for (int piece_start = 0; piece_start < d.face_count(); ++piece_start) {
        if (seen[static_cast<std::size_t>(piece_start)]) continue;
        seen[static_cast<std::size_t>(piece_start)] = 1;
        col.face_colors[static_cast<std::size_t>(piece_start)] = Color::White;
        std::queue<int> work;
        work.push(piece_start);
        while (!work.empty()) {
            int f = work.front();
            work.pop();
            for (Arc a : d.arcs_sorted()) {
                auto [f1, f2] = d.faces_of_arc(a);
                int nb = -1;
                if (f1 == f) nb = f2;
                else if (f2 == f) nb = f1;
                else continue;
                Color want = opposite(col.face_colors[static_cast<std::size_t>(f)]);
                if (!seen[static_cast<std::size_t>(nb)]) {
                    seen[static_cast<std::size_t>(nb)] = 1;
                    col.face_colors[static_cast<std::size_t>(nb)] = want;
                    work.push(nb);
                } else if (col.face_colors[static_cast<std::size_t>(nb)] != want) {
                    throw InternalConventionError("checkerboard coloring failed");
                }
            }
        }
    }
    return col;
}

std::optional<Coloring> try_type_b_coloring(const LinkDiagram& d) {
    if (!d.is_connected()) throw NotConnected("type_b_coloring requires a connected diagram");
    Coloring col = default_coloring(d);
    for (int attempt = 0; attempt < 2; ++attempt) {
        bool all_b = true;
        for (const auto& x : d.crossings())
            if (classify_crossing(d, col, x.id).color_type != ColorType::B) {
                all_b = false;
                break;
            }
        if (all_b) return col;
        col = col.swapped();
    }
    return std::nullopt;
}

Coloring type_b_coloring(const LinkDiagram& d) {
    auto col = try_type_b_coloring(d);
    if (!col) throw NoAllBColoring("no checkerboard coloring makes every crossing type b");
    return *col;
}

// --- classification ---------------------------------------------------------------

CrossingClass classify_crossing(const LinkDiagram& d, const Coloring& col, int crossing) {
    CrossingClass r;
    r.sign = d.crossing_sign(crossing);
    Color c0 = col.of(d.face_at_corner(crossing, 0));
    Color c1 = col.of(d.face_at_corner(crossing, 1));
    if (c0 == c1 || col.of(d.face_at_corner(crossing, 2)) != c0 ||
        col.of(d.face_at_corner(crossing, 3)) != c1)
        throw InternalConventionError("coloring is not a proper checkerboard coloring");
    // Convention ledger: a crossing has color-type b when the faces in the
    // quadrants left and right of the under strand (corners 0 and 2) are black.
    r.color_type = (c0 == Color::Black) ? ColorType::B : ColorType::A;
    // Convention ledger: orientation-type I when sign and color-type agree
    // (positive b or negative a); II otherwise.
    bool type_I = (r.sign > 0) == (r.color_type == ColorType::B);
    r.orientation_type = type_I ? OrientationType::I : OrientationType::II;
    return r;
}

std::pair<std::vector<CrossingClass>, DiagramCounts> classify(const LinkDiagram& d, const Coloring& col) {
    std::vector<CrossingClass> classes;
    DiagramCounts counts;
    counts.c = d.crossing_count();
    std::map<std::pair<int, int>, long long> signed_crossings;
    for (const auto& x : d.crossings()) {
        CrossingClass cc = classify_crossing(d, col, x.id);
        classes.push_back(cc);
        if (cc.color_type == ColorType::A) counts.a++;
        else counts.b++;
        if (cc.sign > 0) counts.p++;
        else counts.n++;
        int cu = d.component_of_arc(x.quadrants[0]);
        int co = d.component_of_arc(x.quadrants[1]);
        if (cu != co) {
            auto key = std::minmax(cu, co);
            signed_crossings[{key.first, key.second}] += cc.sign;
        }
    }
    counts.writhe = counts.p - counts.n;
    for (const auto& [key, total] : signed_crossings) {
        if (total % 2 != 0) throw InternalConventionError("odd inter-component crossing count");
        counts.pairwise_lk[key] = total / 2;
        counts.lk_total += total / 2;
    }
    return {classes, counts};
}

std::vector<Face> faces(const LinkDiagram& d) { return d.faces(); }

DiagramPredicates diagram_predicates(const LinkDiagram& d) {
    DiagramPredicates p;
    p.is_connected = d.is_connected();
    p.is_reduced = true;
    for (const auto& x : d.crossings()) {
        std::set<int> fs;
        for (int q = 0; q < 4; ++q) fs.insert(d.face_at_corner(x.id, q));
        if (fs.size() != 4) p.is_reduced = false;
    }
    p.is_alternating_syntactic = true;
    for (const auto& comp : d.components()) {
        // passage sequence along the component: each arc ends in exactly one
        // passage (under if its head end sits in slot 0)
        std::vector<int> unders;
        for (Arc a : comp) {
            bool found = false;
            for (const auto& x : d.crossings()) {
                if (x.quadrants[0] == a && d.successor(a) == x.quadrants[2]) {
                    unders.push_back(1);
                    found = true;
                    break;
                }
                int oin = d.over_in_slot(x.id);
                if (x.quadrants[static_cast<std::size_t>(oin)] == a &&
                    d.successor(a) == x.quadrants[static_cast<std::size_t>(oin ^ 2)]) {
                    unders.push_back(0);
                    found = true;
                    break;
                }
            }
            if (!found) throw InternalConventionError("arc without a head passage");
        }
        for (std::size_t i = 0; i < unders.size(); ++i)
            if (unders[i] == unders[(i + 1) % unders.size()]) p.is_alternating_syntactic = false;
    }
    return p;
}

// --- Seifert circles ----------------------------------------------------------------

SeifertCircles seifert_circles(const LinkDiagram& d) {
    SeifertCircles out;
    const int c = d.crossing_count();
    // oriented smoothing: in-end at slot s exits at the adjacent out slot
    // paired with it (under-in 0 -> over-out, over-in -> under-out 2)
    auto smooth_next = [&](int crossing, int in_slot) {
        int oin = d.over_in_slot(crossing);
        int oout = oin ^ 2;
        if (in_slot == 0) return oout;
        return 2;
    };
    // trace orbits on arcs
    std::map<Arc, int> circle_of;
    for (Arc start : d.arcs_sorted()) {
        if (circle_of.count(start)) continue;
        std::vector<Arc> circle;
        Arc a = start;
        while (!circle_of.count(a)) {
            circle_of[a] = static_cast<int>(out.circles.size());
            circle.push_back(a);
            // head end of a: the crossing it enters
            int head = -1, slot = -1;
            for (const auto& x : d.crossings()) {
                if (x.quadrants[0] == a && d.successor(a) == x.quadrants[2]) {
                    head = x.id;
                    slot = 0;
                    break;
                }
                int oin = d.over_in_slot(x.id);
                if (x.quadrants[static_cast<std::size_t>(oin)] == a &&
                    d.successor(a) == x.quadrants[static_cast<std::size_t>(oin ^ 2)]) {
                    head = x.id;
                    slot = oin;
                    break;
                }
            }
            int exit_slot = smooth_next(head, slot);
            a = d.crossings()[static_cast<std::size_t>(head)].quadrants[static_cast<std::size_t>(exit_slot)];
        }
        out.circles.push_back(std::move(circle));
    }
    out.count = static_cast<int>(out.circles.size());
    out.b1 = c - out.count + d.connected_pieces();

    // does the circle family coincide with the boundaries of one color class?
    Coloring col = default_coloring(d);
    auto class_boundaries = [&](Color color) {
        std::vector<std::vector<Arc>> sets;
        for (const auto& f : d.faces()) {
            if (col.of(f.id) != color) continue;
            std::vector<Arc> arcs;
            for (auto [cr, q] : f.corners)
                arcs.push_back(d.crossings()[static_cast<std::size_t>(cr)].quadrants[static_cast<std::size_t>(q)]);
            std::sort(arcs.begin(), arcs.end());
            sets.push_back(std::move(arcs));
        }
        std::sort(sets.begin(), sets.end());
        return sets;
    };
    std::vector<std::vector<Arc>> circ_sets;
    for (const auto& circle : out.circles) {
        std::vector<Arc> s = circle;
        std::sort(s.begin(), s.end());
        circ_sets.push_back(std::move(s));
    }
    std::sort(circ_sets.begin(), circ_sets.end());
    out.matches_white_class = (circ_sets == class_boundaries(Color::White));
    out.matches_black_class = (circ_sets == class_boundaries(Color::Black));
    return out;
}

// --- transforms -------------------------------------------------------------------

LinkDiagram realize(const RawDiagram& raw) {
    const int c = raw.crossing_count;
    std::vector<int> out_slots; // all outgoing ends, for traversal anchoring
    auto is_out = [&](int crossing, int slot) {
        int uin = raw.under_in_slot[static_cast<std::size_t>(crossing)];
        int oin = raw.over_in_slot[static_cast<std::size_t>(crossing)];
        return slot != uin && slot != oin;
    };
    for (int i = 0; i < c; ++i)
        for (int s = 0; s < 4; ++s)
            if (is_out(i, s)) out_slots.push_back(dart_of(i, s));

    std::map<int, Arc> arc_at_out; // out end -> arc id
    Arc next_arc = 1;
    for (int start : out_slots) {
        if (arc_at_out.count(start)) continue;
        int e = start;
        do {
            arc_at_out[e] = next_arc++;
            int in_end = raw.pair_of[static_cast<std::size_t>(e)];
            e = dart_of(dart_crossing(in_end), (dart_slot(in_end) + 2) % 4);
            if (!is_out(dart_crossing(e), dart_slot(e)))
                throw InconsistentOrientation("strand directions are not consistent through a crossing");
        } while (e != start);
    }

    std::vector<Crossing> cs(static_cast<std::size_t>(c));
    auto arc_at_end = [&](int e) {
        auto it = arc_at_out.find(e);
        if (it != arc_at_out.end()) return it->second;
        return arc_at_out.at(raw.pair_of[static_cast<std::size_t>(e)]);
    };
    for (int i = 0; i < c; ++i) {
        int uin = raw.under_in_slot[static_cast<std::size_t>(i)];
        for (int k = 0; k < 4; ++k)
            cs[static_cast<std::size_t>(i)].quadrants[static_cast<std::size_t>(k)] =
                arc_at_end(dart_of(i, (uin + k) % 4));
    }
    return LinkDiagram(std::move(cs));
}

RawDiagram to_raw(const LinkDiagram& d) {
    RawDiagram raw;
    raw.crossing_count = d.crossing_count();
    raw.pair_of.assign(static_cast<std::size_t>(4 * raw.crossing_count), -1);
    raw.under_in_slot.assign(static_cast<std::size_t>(raw.crossing_count), 0);
    raw.over_in_slot.assign(static_cast<std::size_t>(raw.crossing_count), 0);
    for (const auto& x : d.crossings()) raw.over_in_slot[static_cast<std::size_t>(x.id)] = d.over_in_slot(x.id);
    for (Arc a : d.arcs_sorted()) {
        // find the two ends of arc a
        std::vector<int> ends;
        for (const auto& x : d.crossings())
            for (int s = 0; s < 4; ++s)
                if (x.quadrants[static_cast<std::size_t>(s)] == a) ends.push_back(dart_of(x.id, s));
        raw.pair_of[static_cast<std::size_t>(ends[0])] = ends[1];
        raw.pair_of[static_cast<std::size_t>(ends[1])] = ends[0];
    }
    return raw;
}

LinkDiagram mirror(const LinkDiagram& d) {
    RawDiagram raw = to_raw(d);
    for (int i = 0; i < raw.crossing_count; ++i) {
        int old_oin = raw.over_in_slot[static_cast<std::size_t>(i)];
        raw.over_in_slot[static_cast<std::size_t>(i)] = raw.under_in_slot[static_cast<std::size_t>(i)];
        raw.under_in_slot[static_cast<std::size_t>(i)] = old_oin;
    }
    return realize(raw);
}

LinkDiagram reverse_components(const LinkDiagram& d, const std::vector<int>& which) {
    std::set<int> rev(which.begin(), which.end());
    RawDiagram raw = to_raw(d);
    for (const auto& x : d.crossings()) {
        int under_comp = d.component_of_arc(x.quadrants[0]);
        int over_comp = d.component_of_arc(x.quadrants[1]);
        if (rev.count(under_comp)) raw.under_in_slot[static_cast<std::size_t>(x.id)] = 2;
        if (rev.count(over_comp))
            raw.over_in_slot[static_cast<std::size_t>(x.id)] = d.over_in_slot(x.id) ^ 2;
    }
    return realize(raw);
}

LinkDiagram reverse_all(const LinkDiagram& d) {
    std::vector<int> all(d.components().size());
    std::iota(all.begin(), all.end(), 0);
    return reverse_components(d, all);
}

} // namespace knotlattice
