#include "knotcalc/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <queue>
#include <sstream>

#include <nlohmann/json.hpp>

#include "knotcalc/errors.hpp"

namespace knotcalc {

namespace {

using json = nlohmann::json;

std::vector<std::array<int, 4>> tokenize_pd(const std::string& text) {
    std::vector<std::array<int, 4>> out;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (std::isspace(unsigned(text[i])) || text[i] == ','))
            ++i;
    };
    skip_ws();
    if (i >= text.size()) throw SyntaxError("empty PD code");
    if (text[i] == '[') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw SyntaxError(std::string("PD JSON: ") + e.what());
        }
        if (!j.is_array()) throw SyntaxError("PD JSON: expected an array of crossings");
        for (const auto& c : j) {
            if (!c.is_array() || c.size() != 4)
                throw SyntaxError("PD JSON: each crossing needs 4 edge labels");
            std::array<int, 4> t{};
            for (int k = 0; k < 4; ++k) {
                if (!c[k].is_number_integer()) throw SyntaxError("PD JSON: labels must be integers");
                t[k] = c[k].get<int>();
            }
            out.push_back(t);
        }
        return out;
    }
    // X[a,b,c,d] tokens; "PD[...]" wrapping tolerated
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text.compare(i, 3, "PD[") == 0) { i += 3; continue; }
        if (text[i] == ']') { ++i; continue; }
        if (text[i] != 'X' && text[i] != 'x')
            throw SyntaxError("PD code: expected 'X[' at '" + text.substr(i, 8) + "'");
        ++i;
        if (i >= text.size() || text[i] != '[') throw SyntaxError("PD code: expected '[' after X");
        ++i;
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
            skip_ws();
            bool neg = false;
            if (i < text.size() && text[i] == '-') { neg = true; ++i; }
            if (i >= text.size() || !std::isdigit(unsigned(text[i])))
                throw SyntaxError("PD code: expected integer label");
            long v = 0;
            while (i < text.size() && std::isdigit(unsigned(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            t[k] = int(neg ? -v : v);
        }
        skip_ws();
        if (i >= text.size() || text[i] != ']') throw SyntaxError("PD code: expected ']'");
        ++i;
        out.push_back(t);
    }
    if (out.empty()) throw SyntaxError("empty PD code");
    return out;
}

} // namespace

PlanarDiagram parse_pd(const std::string& text) {
    PlanarDiagram d;
    d.crossings = tokenize_pd(text);
    int n = d.size();
    int ne = 2 * n;

    std::vector<int> count(ne + 1, 0);
    for (const auto& c : d.crossings)
        for (int k = 0; k < 4; ++k) {
            if (c[k] < 1 || c[k] > ne)
                throw LabelMultiplicityError("edge labels must lie in 1.." + std::to_string(ne));
            ++count[c[k]];
        }
    for (int l = 1; l <= ne; ++l)
        if (count[l] != 2)
            throw LabelMultiplicityError("edge label " + std::to_string(l) + " appears " +
                                         std::to_string(count[l]) + " times (expected 2)");

    auto succ = [ne](int l) { return l % ne + 1; };

    // heads[l] / tails[l]: each edge must enter one crossing and leave one
    std::vector<int> heads(ne + 1, 0), tails(ne + 1, 0);
    d.over_in_slot.assign(n, 0);
    d.sign.assign(n, 0);
    for (int c = 0; c < n; ++c) {
        const auto& t = d.crossings[c];
        if (succ(t[0]) != t[2])
            throw LabelMultiplicityError("crossing " + std::to_string(c) +
                                         ": under-strand labels are not consecutive");
        bool bd = succ(t[1]) == t[3];  // over-strand runs b -> d, the preferred reading
        if (!bd && succ(t[3]) != t[1])
            throw LabelMultiplicityError("crossing " + std::to_string(c) +
                                         ": over-strand labels are not consecutive");
        d.over_in_slot[c] = bd ? 1 : 3;
        d.sign[c] = bd ? 1 : -1;
        ++heads[t[0]];
        ++tails[t[2]];
        ++heads[bd ? t[1] : t[3]];
        ++tails[bd ? t[3] : t[1]];
    }
    for (int l = 1; l <= ne; ++l)
        if (heads[l] != 1 || tails[l] != 1)
            throw LabelMultiplicityError("edge label " + std::to_string(l) +
                                         " is not traversed consistently");

    // connectivity of the underlying 4-valent map
    std::vector<std::vector<int>> by_label(ne + 1);
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) by_label[d.crossings[c][k]].push_back(c);
    std::vector<char> seen(n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        int c = bfs.front();
        bfs.pop();
        for (int k = 0; k < 4; ++k)
            for (int o : by_label[d.crossings[c][k]])
                if (!seen[o]) {
                    seen[o] = 1;
                    ++reached;
                    bfs.push(o);
                }
    }
    if (reached != n) throw DisconnectedDiagramError("diagram is a split union");
    return d;
}

namespace {

// dart id = 4 * crossing + slot; darts of equal label are partners
std::vector<int> dart_partners(const PlanarDiagram& d) {
    int n = d.size();
    std::vector<int> first(d.num_edges() + 1, -1);
    std::vector<int> partner(4 * n, -1);
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            int l = d.crossings[c][s];
            int id = 4 * c + s;
            if (first[l] < 0)
                first[l] = id;
            else {
                partner[id] = first[l];
                partner[first[l]] = id;
            }
        }
    return partner;
}

} // namespace

FaceSet faces(const PlanarDiagram& d) {
    int n = d.size();
    std::vector<int> partner = dart_partners(d);
    auto next = [&](int dart) {
        int p = partner[dart];
        return (p & ~3) | ((p + 1) & 3);
    };
    FaceSet fs;
    fs.verts = n;
    fs.edges = 2 * n;
    fs.dart_face.assign(n, {-1, -1, -1, -1});
    std::vector<char> used(4 * n, 0);
    for (int start = 0; start < 4 * n; ++start) {
        if (used[start]) continue;
        int id = fs.count();
        std::vector<int> boundary;
        int dart = start;
        do {
            used[dart] = 1;
            fs.dart_face[dart >> 2][dart & 3] = id;
            boundary.push_back(d.crossings[dart >> 2][dart & 3]);
            dart = next(dart);
        } while (dart != start);
        fs.faces.push_back(std::move(boundary));
    }
    if (fs.verts - fs.edges + fs.count() != 2)
        throw NonSphericalEmbeddingError("V - E + F = " +
                                         std::to_string(fs.verts - fs.edges + fs.count()));
    return fs;
}

bool is_alternating(const PlanarDiagram& d) {
    int ne = d.num_edges();
    // pass_type[l]: how the strand passes the crossing where edge l ends
    std::vector<int> pass(ne + 1, -1);
    for (int c = 0; c < d.size(); ++c) {
        const auto& t = d.crossings[c];
        pass[t[0]] = 0;                                 // under
        pass[t[d.over_in_slot[c]]] = 1;                 // over
    }
    for (int l = 1; l <= ne; ++l)
        if (pass[l] == pass[l % ne + 1]) return false;
    return true;
}

Shading shade(const PlanarDiagram& d) {
    Shading sh;
    sh.fs = faces(d);
    sh.color.assign(sh.fs.count(), -1);
    // White corners sit counterclockwise-after the over-strand: the faces
    // entered at slots 1 and 3; the under-slot faces are black.
    auto paint = [&](int face, int col) {
        if (sh.color[face] == -1)
            sh.color[face] = col;
        else if (sh.color[face] != col)
            throw NotAlternatingError("checkerboard convention conflicts at a crossing");
    };
    for (int c = 0; c < d.size(); ++c) {
        paint(sh.fs.dart_face[c][1], 1);
        paint(sh.fs.dart_face[c][3], 1);
        paint(sh.fs.dart_face[c][0], 0);
        paint(sh.fs.dart_face[c][2], 0);
    }
    for (int f = 0; f < sh.fs.count(); ++f) {
        if (sh.color[f] == 1) ++sh.whites;
        else if (sh.color[f] == 0) ++sh.blacks;
        else throw NotAlternatingError("uncolored region");  // unreachable: every face holds a dart
    }
    return sh;
}

WhiteGraph white_graph(const PlanarDiagram& d) {
    Shading sh = shade(d);
    int nf = sh.fs.count();

    // v0 = the white region incident to edge label 1
    std::vector<int> windex(nf, -1);
    int v0_face = -1;
    for (int c = 0; c < d.size() && v0_face < 0; ++c)
        for (int s = 0; s < 4; ++s)
            if (d.crossings[c][s] == 1 && sh.color[sh.fs.dart_face[c][s]] == 1) {
                v0_face = sh.fs.dart_face[c][s];
                break;
            }
    if (v0_face < 0) throw NotAlternatingError("no white region on edge 1");

    WhiteGraph w;
    windex[v0_face] = 0;
    w.vertices = 1;
    for (int f = 0; f < nf; ++f)
        if (sh.color[f] == 1 && windex[f] < 0) windex[f] = w.vertices++;

    std::map<std::pair<int, int>, std::pair<int, int>> agg;
    for (int c = 0; c < d.size(); ++c) {
        int fu = sh.fs.dart_face[c][1];
        int fv = sh.fs.dart_face[c][3];
        int u = windex[fu], v = windex[fv];
        if (u == v)
            throw ReducibleCrossingError("crossing " + std::to_string(c) +
                                         " joins a white region to itself");
        if (u > v) std::swap(u, v);
        auto& m = agg[{u, v}];
        if (d.sign[c] > 0) ++m.first;
        else { ++m.second; ++w.mu; }
        ++w.crossing_count;
    }
    for (const auto& kv : agg)
        w.edges.push_back({kv.first.first, kv.first.second, kv.second.first, kv.second.second});
    return w;
}

int WhiteGraph::multiplicity(int u, int v) const {
    for (const auto& e : edges)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.pos + e.neg;
    return 0;
}

EtaColoring eta_coloring(const WhiteGraph& w) {
    int n = w.vertices;
    // contract positive-crossing edges
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : w.edges)
        if (e.pos > 0) parent[find(e.u)] = find(e.v);

    // the resolved graph must be bipartite; eta = distance parity from v0
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : w.edges)
        if (e.neg > 0) {
            int a = find(e.u), b = find(e.v);
            if (a == b)
                throw NotBipartiteError("negative crossing inside a resolved class");
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    std::vector<int> parity(n, -1);
    std::queue<int> bfs;
    int root = find(0);
    parity[root] = 0;
    bfs.push(root);
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (int y : adj[x]) {
            if (parity[y] < 0) {
                parity[y] = parity[x] ^ 1;
                bfs.push(y);
            } else if (parity[y] == parity[x]) {
                throw NotBipartiteError("odd cycle of negative crossings");
            }
        }
    }
    EtaColoring ec;
    ec.eta.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        int p = parity[find(i)];
        if (p < 0)
            throw NotBipartiteError("resolved graph is disconnected");
        ec.eta[i] = p;
    }
    return ec;
}

std::string white_graph_to_json(const WhiteGraph& w) {
    json j;
    j["vertices"] = w.vertices;
    j["mu"] = w.mu;
    j["crossings"] = w.crossing_count;
    json edges = json::array();
    for (const auto& e : w.edges)
        edges.push_back({{"u", e.u}, {"v", e.v}, {"pos", e.pos}, {"neg", e.neg}});
    j["edges"] = edges;
    return j.dump();
}

WhiteGraph white_graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SyntaxError(std::string("white graph JSON: ") + e.what());
    }
    WhiteGraph w;
    w.vertices = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges")) {
        WhiteGraph::Edge ed;
        ed.u = e.at("u").get<int>();
        ed.v = e.at("v").get<int>();
        ed.pos = e.at("pos").get<int>();
        ed.neg = e.at("neg").get<int>();
        if (ed.u == ed.v) throw ReducibleCrossingError("loop edge in white graph");
        w.edges.push_back(ed);
        w.mu += ed.neg;
        w.crossing_count += ed.pos + ed.neg;
    }
    return w;
}

} // namespace knotcalc
