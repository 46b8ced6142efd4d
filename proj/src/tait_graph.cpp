#include "knotlattice/tait_graph.hpp"

#include "knotlattice/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace knotlattice {

namespace {

struct DartIndex {
    // dart -> (vertex, position in rotation)
    std::vector<std::pair<int, int>> at;
    explicit DartIndex(const PlaneMultigraph& g) : at(static_cast<std::size_t>(2 * g.edge_count()), {-1, -1}) {
        for (int v = 0; v < g.vertex_count; ++v) {
            const auto& rot = g.rotation[static_cast<std::size_t>(v)];
            for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
                int d = 2 * rot[static_cast<std::size_t>(i)].first + rot[static_cast<std::size_t>(i)].second;
                if (at[static_cast<std::size_t>(d)].first >= 0)
                    throw InternalConventionError("edge end listed twice in rotation system");
                at[static_cast<std::size_t>(d)] = {v, i};
            }
        }
        for (const auto& [v, i] : at)
            if (v < 0) throw InternalConventionError("edge end missing from rotation system");
    }
    int vertex(int dart) const { return at[static_cast<std::size_t>(dart)].first; }
    int prev(const PlaneMultigraph& g, int dart) const {
        auto [v, i] = at[static_cast<std::size_t>(dart)];
        const auto& rot = g.rotation[static_cast<std::size_t>(v)];
        int n = static_cast<int>(rot.size());
        const auto& e = rot[static_cast<std::size_t>((i + n - 1) % n)];
        return 2 * e.first + e.second;
    }
};

int other(int dart) { return dart ^ 1; }

std::vector<int> piece_of_vertices(const PlaneMultigraph& g) {
    std::vector<int> piece(static_cast<std::size_t>(g.vertex_count), -1);
    int next = 0;
    for (int s = 0; s < g.vertex_count; ++s) {
        if (piece[static_cast<std::size_t>(s)] >= 0) continue;
        piece[static_cast<std::size_t>(s)] = next;
        std::queue<int> work;
        work.push(s);
        while (!work.empty()) {
            int v = work.front();
            work.pop();
            for (const auto& e : g.edges) {
                for (int w : {e.tail, e.head}) {
                    int o = (w == e.tail) ? e.head : e.tail;
                    if (w == v && piece[static_cast<std::size_t>(o)] < 0) {
                        piece[static_cast<std::size_t>(o)] = next;
                        work.push(o);
                    }
                }
            }
        }
        ++next;
    }
    return piece;
}

} // namespace

void verify_embedding(const PlaneMultigraph& g) {
    for (const auto& e : g.edges) {
        if (e.tail < 0 || e.tail >= g.vertex_count || e.head < 0 || e.head >= g.vertex_count)
            throw InternalConventionError("edge endpoint out of range");
        if (e.weight != 1 && e.weight != -1) throw InternalConventionError("edge weight must be +1 or -1");
    }
    DartIndex idx(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (idx.vertex(2 * e) != g.edges[static_cast<std::size_t>(e)].tail ||
            idx.vertex(2 * e + 1) != g.edges[static_cast<std::size_t>(e)].head)
            throw InternalConventionError("rotation entry does not match edge endpoints");
    }
    auto piece = piece_of_vertices(g);
    int pieces = piece.empty() ? 0 : 1 + *std::max_element(piece.begin(), piece.end());
    std::vector<int> v_of(static_cast<std::size_t>(pieces), 0), e_of(static_cast<std::size_t>(pieces), 0),
        f_of(static_cast<std::size_t>(pieces), 0);
    for (int v = 0; v < g.vertex_count; ++v) v_of[static_cast<std::size_t>(piece[static_cast<std::size_t>(v)])]++;
    for (const auto& e : g.edges) e_of[static_cast<std::size_t>(piece[static_cast<std::size_t>(e.tail)])]++;
    for (const auto& f : graph_faces(g)) {
        int v = idx.vertex(f.front());
        f_of[static_cast<std::size_t>(piece[static_cast<std::size_t>(v)])]++;
    }
    for (int p = 0; p < pieces; ++p)
        if (v_of[static_cast<std::size_t>(p)] - e_of[static_cast<std::size_t>(p)] + f_of[static_cast<std::size_t>(p)] != 2)
            throw NonPlanar("rotation system is not a sphere embedding");
}

bool graph_connected(const PlaneMultigraph& g) {
    if (g.vertex_count == 0) return false;
    auto piece = piece_of_vertices(g);
    return *std::max_element(piece.begin(), piece.end()) == 0;
}

std::vector<int> bridge_edges(const PlaneMultigraph& g) {
    // an edge is a bridge iff both of its darts lie on the same face
    auto faces = graph_faces(g);
    std::vector<int> face_of(static_cast<std::size_t>(2 * g.edge_count()), -1);
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        for (int d : faces[static_cast<std::size_t>(f)]) face_of[static_cast<std::size_t>(d)] = f;
    std::vector<int> bridges;
    for (int e = 0; e < g.edge_count(); ++e)
        if (face_of[static_cast<std::size_t>(2 * e)] == face_of[static_cast<std::size_t>(2 * e + 1)] &&
            g.edges[static_cast<std::size_t>(e)].tail != g.edges[static_cast<std::size_t>(e)].head)
            bridges.push_back(e);
    return bridges;
}

std::vector<std::vector<int>> graph_faces(const PlaneMultigraph& g) {
    DartIndex idx(g);
    std::vector<std::vector<int>> faces;
    std::vector<int> seen(static_cast<std::size_t>(2 * g.edge_count()), 0);
    for (int start = 0; start < 2 * g.edge_count(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> orbit;
        int d = start;
        do {
            seen[static_cast<std::size_t>(d)] = 1;
            orbit.push_back(d);
            d = idx.prev(g, other(d));
        } while (d != start);
        faces.push_back(std::move(orbit));
    }
    return faces;
}

PlaneMultigraph tait_graph(const LinkDiagram& d, const Coloring& col, Color color) {
    if (!d.is_connected()) throw NotConnected("tait_graph requires a connected diagram");
    PlaneMultigraph g;
    // vertices: faces of the chosen color, in face id order
    std::map<int, int> vertex_of_face;
    for (const auto& f : d.faces())
        if (col.of(f.id) == color) {
            vertex_of_face[f.id] = g.vertex_count++;
        }
    // edges: one per crossing, joining the two same-color corners
    g.edges.resize(static_cast<std::size_t>(d.crossing_count()));
    for (const auto& x : d.crossings()) {
        int q0 = -1;
        for (int q = 0; q < 4 && q0 < 0; ++q)
            if (col.of(d.face_at_corner(x.id, q)) == color) q0 = q;
        int f_tail = d.face_at_corner(x.id, q0);
        int f_head = d.face_at_corner(x.id, q0 + 2);
        CrossingClass cc = classify_crossing(d, col, x.id);
        int w = (cc.color_type == ColorType::B) ? +1 : -1;
        if (color == Color::Black) w = -w;
        g.edges[static_cast<std::size_t>(x.id)] =
            GraphEdge{vertex_of_face.at(f_tail), vertex_of_face.at(f_head), w, x.id};
    }
    // rotation: corners along each face boundary; corner q of crossing x is
    // the tail end when q is the smaller same-color corner
    g.rotation.assign(static_cast<std::size_t>(g.vertex_count), {});
    for (const auto& f : d.faces()) {
        if (col.of(f.id) != color) continue;
        auto& rot = g.rotation[static_cast<std::size_t>(vertex_of_face.at(f.id))];
        for (auto [cr, q] : f.corners) rot.emplace_back(cr, q < 2 ? 0 : 1);
    }
    verify_embedding(g);
    return g;
}

PlaneMultigraph planar_dual(const PlaneMultigraph& g) {
    verify_embedding(g);
    auto faces = graph_faces(g);
    std::vector<int> face_of(static_cast<std::size_t>(2 * g.edge_count()), -1);
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        for (int d : faces[static_cast<std::size_t>(f)]) face_of[static_cast<std::size_t>(d)] = f;
    PlaneMultigraph h;
    h.vertex_count = static_cast<int>(faces.size());
    h.edges.resize(g.edges.size());
    for (int e = 0; e < g.edge_count(); ++e) {
        h.edges[static_cast<std::size_t>(e)] = GraphEdge{face_of[static_cast<std::size_t>(2 * e)],
                                                         face_of[static_cast<std::size_t>(2 * e + 1)],
                                                         -g.edges[static_cast<std::size_t>(e)].weight,
                                                         g.edges[static_cast<std::size_t>(e)].crossing};
    }
    h.rotation.assign(static_cast<std::size_t>(h.vertex_count), {});
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        for (int d : faces[static_cast<std::size_t>(f)])
            h.rotation[static_cast<std::size_t>(f)].emplace_back(d / 2, d % 2);
    verify_embedding(h);
    return h;
}

std::vector<OrientedEdgeVector> face_cycles(const PlaneMultigraph& g) {
    verify_embedding(g);
    if (!graph_connected(g)) throw NotConnected("face_cycles requires a connected graph");
    if (!bridge_edges(g).empty()) throw HasBridge("face_cycles requires a bridgeless graph");
    auto faces = graph_faces(g);
    std::vector<OrientedEdgeVector> cycles;
    for (const auto& f : faces) {
        OrientedEdgeVector c(static_cast<std::size_t>(g.edge_count()), 0);
        // walking with the face on the left, an outgoing tail dart traverses
        // the edge along its reference orientation
        for (int d : f) c[static_cast<std::size_t>(d / 2)] += (d % 2 == 0) ? +1 : -1;
        cycles.push_back(std::move(c));
    }
    return cycles;
}

std::string canonical_embedding_code(const PlaneMultigraph& g) {
    // breadth-first dart relabeling from every start dart; the code records,
    // per dart in discovery order, its rotation successor, its opposite end,
    // and the edge weight; the minimum over starts is canonical
    DartIndex idx(g);
    const int nd = 2 * g.edge_count();
    std::vector<int> sigma(static_cast<std::size_t>(nd));
    for (int v = 0; v < g.vertex_count; ++v) {
        const auto& rot = g.rotation[static_cast<std::size_t>(v)];
        int n = static_cast<int>(rot.size());
        for (int i = 0; i < n; ++i) {
            int d = 2 * rot[static_cast<std::size_t>(i)].first + rot[static_cast<std::size_t>(i)].second;
            const auto& e = rot[static_cast<std::size_t>((i + 1) % n)];
            sigma[static_cast<std::size_t>(d)] = 2 * e.first + e.second;
        }
    }
    std::string best;
    for (int start = 0; start < nd; ++start) {
        std::vector<int> label(static_cast<std::size_t>(nd), -1);
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(nd));
        auto visit = [&](int d) {
            if (label[static_cast<std::size_t>(d)] < 0) {
                label[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
                order.push_back(d);
            }
        };
        visit(start);
        for (std::size_t i = 0; i < order.size(); ++i) {
            visit(sigma[static_cast<std::size_t>(order[i])]);
            visit(other(order[i]));
        }
        if (static_cast<int>(order.size()) != nd) continue; // disconnected: caller compares pieces
        std::ostringstream os;
        for (int d : order)
            os << label[static_cast<std::size_t>(sigma[static_cast<std::size_t>(d)])] << ','
               << label[static_cast<std::size_t>(other(d))] << ','
               << g.edges[static_cast<std::size_t>(d / 2)].weight << ';';
        std::string code = os.str();
        if (best.empty() || code < best) best = code;
    }
    return best;
}

std::string graph_to_json(const PlaneMultigraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.vertex_count;
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({{"tail", e.tail}, {"head", e.head}, {"weight", e.weight}, {"crossing", e.crossing}});
    j["rotations"] = nlohmann::ordered_json::array();
    for (const auto& rot : g.rotation) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (auto [e, end] : rot) r.push_back({e, end});
        j["rotations"].push_back(r);
    }
    return j.dump();
}

PlaneMultigraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedCorpus(std::string("invalid graph JSON: ") + e.what());
    }
    PlaneMultigraph g;
    g.vertex_count = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges"))
        g.edges.push_back(GraphEdge{e.at("tail").get<int>(), e.at("head").get<int>(), e.at("weight").get<int>(),
                                    e.value("crossing", -1)});
    for (const auto& r : j.at("rotations")) {
        std::vector<std::pair<int, int>> rot;
        for (const auto& x : r) rot.emplace_back(x.at(0).get<int>(), x.at(1).get<int>());
        g.rotation.push_back(std::move(rot));
    }
    verify_embedding(g);
    return g;
}

} // namespace knotlattice
