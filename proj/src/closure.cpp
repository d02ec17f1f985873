#include "cwl/closure.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <vector>

#include "cwl/errors.hpp"

namespace cwl {

namespace {

// Port-graph evaluation of one substitution choice. Segments are the chord
// edges plus one internal edge per 4-leg circle; a 2-leg circle joins the
// two ports that land on it; 3- and 4-leg circles terminate ports at
// trivalent vertex slots. Tracing the segments yields vertex-to-vertex
// paths and free loops.
struct Trace {
    int vertices = 0;
    // slot_path[v][s] = path id entering vertex v at cyclic slot s
    std::array<std::array<int, 3>, 2> slot_path{};
    // path endpoints as vertex ids (-1 while open)
    std::vector<std::pair<int, int>> paths;
    int loops = 0;
    bool overflow = false;  // more than two vertices: degree >= 2, discard
};

// one term of T4: which leg pairs go to the two vertices
struct Pairing {
    int u0, u1, w0, w1;
};

constexpr Pairing kAdjacent = {0, 1, 2, 3};   // vertices (l0 l1 m), (l2 l3 m)
constexpr Pairing kShifted = {1, 2, 3, 0};    // vertices (l1 l2 m), (l3 l0 m)

ClosureValue evaluate_choice(const ChordDiagram& d, const std::vector<int>& four_leg,
                             const std::vector<int>& three_leg, unsigned choice_bits,
                             const Rational& base) {
    const auto& chords = d.chords();
    const int num_chords = static_cast<int>(chords.size());

    // ports 2k, 2k+1 = the two ends of chord k; then one extra segment per
    // 4-leg circle
    const int num_ports = 2 * num_chords + 2 * static_cast<int>(four_leg.size());
    std::vector<int> seg_other(num_ports);            // other end of the same segment
    for (int k = 0; k < num_chords; ++k) {
        seg_other[2 * k] = 2 * k + 1;
        seg_other[2 * k + 1] = 2 * k;
    }
    for (size_t t = 0; t < four_leg.size(); ++t) {
        int m0 = 2 * num_chords + 2 * static_cast<int>(t);
        seg_other[m0] = m0 + 1;
        seg_other[m0 + 1] = m0;
    }

    // port at each leg
    std::vector<std::vector<int>> port_at(d.num_circles());
    for (int i = 0; i < d.num_circles(); ++i) port_at[i].assign(d.legs_on(i), -1);
    for (int k = 0; k < num_chords; ++k) {
        port_at[chords[k].first.circle][chords[k].first.pos] = 2 * k;
        port_at[chords[k].second.circle][chords[k].second.pos] = 2 * k + 1;
    }

    // junctions: join[p] = q when a 2-leg circle splices ports p,q;
    // slot_of[p] = (vertex, slot) when p terminates at a vertex
    std::vector<int> join(num_ports, -1);
    std::vector<std::pair<int, int>> slot_of(num_ports, {-1, -1});
    std::array<std::array<int, 3>, 2> vertex_slot_port{};
    int vertices = 0;

    auto add_vertex = [&](int pa, int pb, int pc) {
        if (vertices < 2) vertex_slot_port[vertices] = {pa, pb, pc};
        slot_of[pa] = {vertices, 0};
        slot_of[pb] = {vertices, 1};
        slot_of[pc] = {vertices, 2};
        ++vertices;
    };

    for (int i = 0; i < d.num_circles(); ++i) {
        if (d.legs_on(i) == 2) {
            join[port_at[i][0]] = port_at[i][1];
            join[port_at[i][1]] = port_at[i][0];
        }
    }
    for (int i : three_leg) add_vertex(port_at[i][0], port_at[i][1], port_at[i][2]);
    for (size_t t = 0; t < four_leg.size(); ++t) {
        const int i = four_leg[t];
        const Pairing& pr = ((choice_bits >> t) & 1u) ? kShifted : kAdjacent;
        const int m0 = 2 * num_chords + 2 * static_cast<int>(t);
        add_vertex(port_at[i][pr.u0], port_at[i][pr.u1], m0);
        add_vertex(port_at[i][pr.w0], port_at[i][pr.w1], m0 + 1);
    }

    if (vertices > 2) return {0, 0};  // degree >= 2 after closure
    assert(vertices % 2 == 0);

    // trace paths from vertex slots
    std::vector<char> visited(num_ports, 0);
    std::array<std::array<int, 3>, 2> slot_path{};
    std::vector<std::pair<int, int>> path_ends;
    for (int v = 0; v < vertices; ++v) {
        for (int s = 0; s < 3; ++s) {
            int start = vertex_slot_port[v][s];
            if (visited[start]) continue;
            int id = static_cast<int>(path_ends.size());
            slot_path[v][s] = id;
            visited[start] = 1;
            int p = seg_other[start];
            while (true) {
                visited[p] = 1;
                if (slot_of[p].first >= 0) {
                    slot_path[slot_of[p].first][slot_of[p].second] = id;
                    path_ends.push_back({v, slot_of[p].first});
                    break;
                }
                int q = join[p];
                assert(q >= 0);
                visited[q] = 1;
                p = seg_other[q];
            }
        }
    }

    // leftover segments form free loops
    int loops = 0;
    for (int p = 0; p < num_ports; ++p) {
        if (visited[p]) continue;
        ++loops;
        int q = p;
        while (!visited[q]) {
            visited[q] = 1;
            int r = seg_other[q];
            visited[r] = 1;
            q = join[r];
            assert(q >= 0);
        }
    }

    Rational weight = base;
    for (int t = 0; t < loops; ++t) weight *= -2;

    if (vertices == 0) return {weight, 0};

    // two vertices: self-loop kills the term (AS); otherwise a theta
    for (const auto& [from, to] : path_ends)
        if (from == to) return {0, 0};

    // sign from the two cyclic orders: reversed -> +, aligned -> -
    const auto& u = slot_path[0];
    const auto& w = slot_path[1];
    int j = 0;
    while (w[j] != u[0]) ++j;
    int sign;
    if (w[(j + 1) % 3] == u[2] && w[(j + 2) % 3] == u[1]) sign = +1;
    else {
        assert(w[(j + 1) % 3] == u[1] && w[(j + 2) % 3] == u[2]);
        sign = -1;
    }
    return {0, sign > 0 ? weight : -weight};
}

}  // namespace

ClosureValue iota1_le1(const ChordDiagram& d) {
    std::vector<int> four_leg, three_leg;
    for (int i = 0; i < d.num_circles(); ++i) {
        const int k = d.legs_on(i);
        if (k <= 1 || k >= 5) return {0, 0};
        if (k == 3) three_leg.push_back(i);
        if (k == 4) four_leg.push_back(i);
    }
    if (four_leg.size() > 20) throw ArgumentError("diagram too large to close");
    Rational base = 1;
    for (size_t t = 0; t < three_leg.size(); ++t) base /= 2;
    for (size_t t = 0; t < four_leg.size(); ++t) base /= 6;

    ClosureValue total{0, 0};
    const unsigned combos = 1u << four_leg.size();
    for (unsigned bits = 0; bits < combos; ++bits) {
        ClosureValue term = evaluate_choice(d, four_leg, three_leg, bits, base);
        total.c0 += term.c0;
        total.c1 += term.c1;
    }
    return total;
}

Rational iota_theta(const ChordDiagram& d) {
    std::vector<int> bare;
    for (int i = 0; i < d.num_circles(); ++i)
        if (d.legs_on(i) == 0) bare.push_back(i);
    if (bare.empty()) return iota1_le1(d).c1;
    if (bare.size() > 20) throw ArgumentError("diagram too large to close");

    // each bare circle takes the parallel (+1/24) or crossed (-1/24) part of
    // nu; leaving it bare sends the whole diagram to 0 under iota_1
    Rational total = 0;
    const unsigned combos = 1u << bare.size();
    for (unsigned bits = 0; bits < combos; ++bits) {
        Rational coeff = 1;
        std::vector<Chord> chords = d.chords();
        for (size_t t = 0; t < bare.size(); ++t) {
            const int i = bare[t];
            if ((bits >> t) & 1u) {
                chords.push_back({{i, 0}, {i, 2}});  // crossed
                chords.push_back({{i, 1}, {i, 3}});
                coeff /= -24;
            } else {
                chords.push_back({{i, 0}, {i, 1}});  // parallel
                chords.push_back({{i, 2}, {i, 3}});
                coeff /= 24;
            }
        }
        total += coeff * iota1_le1(ChordDiagram(d.num_circles(), std::move(chords))).c1;
    }
    return total;
}

DiagramClass structural_class(const ChordDiagram& d) {
    if (!is_connected(d)) return DiagramClass::Other;
    std::vector<int> legs = d.legs_per_circle();
    std::sort(legs.begin(), legs.end());
    const int n = static_cast<int>(legs.size());

    bool all_two = std::all_of(legs.begin(), legs.end(), [](int k) { return k == 2; });
    if (all_two) return DiagramClass::Chain;

    bool one_four = n >= 1 && legs[n - 1] == 4 &&
                    std::all_of(legs.begin(), legs.end() - 1, [](int k) { return k == 2; });
    bool two_three = n >= 2 && legs[n - 1] == 3 && legs[n - 2] == 3 &&
                     std::all_of(legs.begin(), legs.end() - 2, [](int k) { return k == 2; });
    if (!one_four && !two_three) return DiagramClass::Other;

    Rational t = iota_theta(d);
    if (t > 0) return DiagramClass::PlusEssential;
    if (t < 0) return DiagramClass::MinusEssential;
    return DiagramClass::Other;
}

const char* to_string(DiagramClass c) {
    switch (c) {
        case DiagramClass::Chain: return "chain";
        case DiagramClass::PlusEssential: return "essential-plus";
        case DiagramClass::MinusEssential: return "essential-minus";
        case DiagramClass::Other: return "other";
    }
    return "?";
}

}  // namespace cwl
