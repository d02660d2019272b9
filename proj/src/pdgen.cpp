#include "knotcalc/pdgen.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

#include "knotcalc/errors.hpp"

namespace knotcalc {
namespace pdgen {

namespace {

// 4-valent map under construction: darts 4c+s, arcs as partner pairing
struct Proto {
    std::vector<int> partner;  // -1 while unpaired

    int add_crossing() {
        int c = int(partner.size()) / 4;
        partner.insert(partner.end(), 4, -1);
        return c;
    }
    void pair(int a, int b) {
        partner[a] = b;
        partner[b] = a;
    }
    int crossings() const { return int(partner.size()) / 4; }
};

int face_next(const Proto& p, int dart) {
    int q = p.partner[dart];
    return (q & ~3) | ((q + 1) & 3);
}

// face id per dart + checkerboard coloring (faces of a 4-valent sphere map
// are always 2-colorable)
struct ProtoFaces {
    std::vector<int> face;
    std::vector<int> color;
    int count = 0;
};

ProtoFaces proto_faces(const Proto& p) {
    int nd = int(p.partner.size());
    ProtoFaces pf;
    pf.face.assign(nd, -1);
    for (int start = 0; start < nd; ++start) {
        if (pf.face[start] >= 0) continue;
        int d = start;
        do {
            pf.face[d] = pf.count;
            d = face_next(p, d);
        } while (d != start);
        ++pf.count;
    }
    // 2-color across arcs: the two darts of an arc see opposite faces
    pf.color.assign(pf.count, -1);
    std::vector<int> stack;
    pf.color[pf.face[0]] = 1;
    stack.push_back(pf.face[0]);
    std::vector<std::vector<int>> adj(pf.count);
    for (int d = 0; d < nd; ++d) {
        int f = pf.face[d], g = pf.face[p.partner[d]];
        adj[f].push_back(g);
    }
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int g : adj[f]) {
            if (pf.color[g] < 0) {
                pf.color[g] = pf.color[f] ^ 1;
                stack.push_back(g);
            } else if (pf.color[g] == pf.color[f]) {
                throw Error("pdgen: map faces are not checkerboard colorable");
            }
        }
    }
    return pf;
}

// Walk the single strand, label arcs 1..2n in order and emit PD text.
// under_diag[c] in {0,1}: the under-strand occupies slots {u, u+2}.
std::string emit_pd(const Proto& p, const std::vector<int>& under_diag) {
    int n = p.crossings();
    int nd = 4 * n;
    for (int d = 0; d < nd; ++d)
        if (p.partner[d] < 0) throw Error("pdgen: dangling arc end");

    std::vector<int> label(nd, 0);
    int arrival = 0;  // we "arrive" at dart 0 to start
    for (int l = 1; l <= 2 * n; ++l) {
        int exit = (arrival & ~3) | ((arrival + 2) & 3);
        int to = p.partner[exit];
        label[exit] = l;
        label[to] = l;
        arrival = to;
    }
    if (arrival != 0) throw Error("pdgen: closure is not a single-component knot");
    for (int d = 0; d < nd; ++d)
        if (label[d] == 0) throw Error("pdgen: closure is not a single-component knot");

    // slot0 of each crossing = the under-diagonal dart where the strand
    // arrives; the arc into a dart has the smaller cyclic label
    std::ostringstream out;
    std::vector<int> heads(2 * n + 1, 0);
    // recompute arrivals to know directions
    std::vector<char> is_arrival(nd, 0);
    arrival = 0;
    is_arrival[0] = 1;
    for (int l = 1; l <= 2 * n; ++l) {
        int exit = (arrival & ~3) | ((arrival + 2) & 3);
        arrival = p.partner[exit];
        is_arrival[arrival] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int u = under_diag[c];
        int s0 = is_arrival[4 * c + u] ? u : u + 2;
        if (!is_arrival[4 * c + (s0 & 3)]) throw Error("pdgen: bad under diagonal");
        if (c) out << ' ';
        out << "X[";
        for (int k = 0; k < 4; ++k) {
            if (k) out << ',';
            out << label[4 * c + ((s0 + k) & 3)];
        }
        out << ']';
    }
    return out.str();
}

} // namespace

std::pair<Int, Int> cf_fraction(const std::vector<int>& cf) {
    Int num = cf.back(), den = 1;
    for (int i = int(cf.size()) - 2; i >= 0; --i) {
        std::swap(num, den);
        num += Int(cf[size_t(i)]) * den;
    }
    return {num, den};
}

std::string two_bridge_pd(const std::vector<int>& cf, bool mirror) {
    if (cf.empty()) throw Error("two_bridge_pd: empty twist vector");
    for (int c : cf)
        if (c < 1) throw Error("two_bridge_pd: twist counts must be >= 1");

    Proto p;
    // loose ends at the four tangle corners: NW=0, NE=1, SW=2, SE=3;
    // each is a dart id, or encoded as ~j when still tied to corner j.
    // The innermost region is horizontal for odd m (start from the 0-tangle),
    // vertical for even m (start from the infinity tangle).
    long end[4] = {~1L, ~0L, ~3L, ~2L};
    if (cf.size() % 2 == 0) {
        end[0] = ~2L; end[2] = ~0L;  // NW tied to SW
        end[1] = ~3L; end[3] = ~1L;  // NE tied to SE
    }
    auto consume = [&](int corner, int dart) {
        long e = end[corner];
        if (e >= 0)
            p.pair(int(e), dart);
        else
            end[~e] = dart;
        end[corner] = LONG_MIN;
    };
    // build innermost region first; region i twists horizontally iff i is odd
    for (int i = int(cf.size()); i >= 1; --i) {
        bool horizontal = (i % 2 == 1);
        for (int k = 0; k < cf[size_t(i) - 1]; ++k) {
            int c = p.add_crossing();
            // crossing rays counterclockwise: slot0=NW, 1=SW, 2=SE, 3=NE
            if (horizontal) {  // twist the NE / SE ends
                consume(1, 4 * c + 0);
                consume(3, 4 * c + 1);
                end[3] = 4 * c + 2;
                end[1] = 4 * c + 3;
            } else {  // twist the SW / SE ends
                consume(2, 4 * c + 0);
                consume(3, 4 * c + 3);
                end[2] = 4 * c + 1;
                end[3] = 4 * c + 2;
            }
        }
    }
    // numerator closure: cap NW-NE and SW-SE
    auto close_pair = [&](int a, int b) {
        if (end[a] < 0 || end[b] < 0)
            throw Error("two_bridge_pd: closed component without crossings");
        p.pair(int(end[a]), int(end[b]));
    };
    close_pair(0, 1);
    close_pair(2, 3);

    // alternation: choose each under-diagonal so that the white corners sit
    // counterclockwise-after the over slots (the checkerboard convention)
    ProtoFaces pf = proto_faces(p);
    int white = mirror ? 0 : 1;
    std::vector<int> under_diag(p.crossings());
    for (int c = 0; c < p.crossings(); ++c) {
        if (pf.color[pf.face[4 * c + 1]] == white)
            under_diag[c] = 0;
        else
            under_diag[c] = 1;
    }
    return emit_pd(p, under_diag);
}

std::string braid_closure_pd(int strands, const std::vector<int>& word) {
    if (strands < 2) throw Error("braid_closure_pd: need at least 2 strands");
    Proto p;
    // cur[i]: the dart hanging at braid position i, or -(i0+1) while it is
    // still the initial arc of strand i0; top[i0]: dart of strand i0's start
    std::vector<long> cur(static_cast<size_t>(strands));
    std::vector<long> top(static_cast<size_t>(strands), LONG_MIN);
    for (int i = 0; i < strands; ++i) cur[size_t(i)] = -(i + 1);

    std::vector<int> under_diag;
    for (int letter : word) {
        int g = letter > 0 ? letter : -letter;
        if (g < 1 || g >= strands) throw Error("braid_closure_pd: generator out of range");
        int c = p.add_crossing();
        // rays counterclockwise: slot0=NW, 1=SW, 2=SE, 3=NE (braid runs downward)
        auto attach = [&](int strand_pos, int dart) {
            long e = cur[size_t(strand_pos)];
            if (e >= 0)
                p.pair(int(e), dart);
            else
                top[size_t(-e - 1)] = dart;
        };
        attach(g - 1, 4 * c + 0);
        attach(g, 4 * c + 3);
        cur[size_t(g - 1)] = 4 * c + 1;
        cur[size_t(g)] = 4 * c + 2;
        // positive letter: the NW->SE strand passes over, so the under
        // diagonal is NE-SW, slots {1,3}
        under_diag.push_back(letter > 0 ? 1 : 0);
    }
    for (int i = 0; i < strands; ++i) {
        if (cur[size_t(i)] < 0 || top[size_t(i)] == LONG_MIN)
            throw Error("braid_closure_pd: strand " + std::to_string(i) + " has no crossing");
        p.pair(int(cur[size_t(i)]), int(top[size_t(i)]));
    }
    return emit_pd(p, under_diag);
}

PlanarDiagram mirror_pd(const PlanarDiagram& d) {
    std::ostringstream out;
    for (int c = 0; c < d.size(); ++c) {
        const auto& t = d.crossings[c];
        int s0 = d.over_in_slot[c];
        if (c) out << ' ';
        out << "X[" << t[s0] << ',' << t[(s0 + 1) & 3] << ',' << t[(s0 + 2) & 3] << ','
            << t[(s0 + 3) & 3] << ']';
    }
    return parse_pd(out.str());
}

PlanarDiagram shift_labels(const PlanarDiagram& d, int k) {
    int ne = d.num_edges();
    auto sh = [&](int l) { return (l - 1 + k % ne + ne) % ne + 1; };
    std::ostringstream out;
    for (int c = 0; c < d.size(); ++c) {
        const auto& t = d.crossings[c];
        if (c) out << ' ';
        out << "X[" << sh(t[0]) << ',' << sh(t[1]) << ',' << sh(t[2]) << ',' << sh(t[3]) << ']';
    }
    return parse_pd(out.str());
}

PlanarDiagram reverse_pd(const PlanarDiagram& d) {
    int ne = d.num_edges();
    auto rv = [&](int l) { return ne + 1 - l; };
    std::ostringstream out;
    for (int c = 0; c < d.size(); ++c) {
        const auto& t = d.crossings[c];
        if (c) out << ' ';
        out << "X[" << rv(t[2]) << ',' << rv(t[3]) << ',' << rv(t[0]) << ',' << rv(t[1]) << ']';
    }
    return parse_pd(out.str());
}

std::string pd_to_text(const PlanarDiagram& d) {
    std::ostringstream out;
    for (int c = 0; c < d.size(); ++c) {
        const auto& t = d.crossings[c];
        if (c) out << ' ';
        out << "X[" << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3] << ']';
    }
    return out.str();
}

} // namespace pdgen
} // namespace knotcalc
