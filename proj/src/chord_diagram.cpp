#include "cwl/chord_diagram.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "cwl/errors.hpp"

namespace cwl {

namespace {

Chord normalized(Chord c) {
    if (c.second < c.first) std::swap(c.first, c.second);
    return c;
}

}  // namespace

ChordDiagram::ChordDiagram(int num_circles, std::vector<Chord> chords) {
    if (num_circles < 0) throw ArgumentError("negative circle count");
    std::vector<std::vector<int>> seen(num_circles);
    for (auto& c : chords) {
        for (const Leg* l : {&c.first, &c.second}) {
            if (l->circle < 0 || l->circle >= num_circles)
                throw IndexError("circle index out of range");
            if (l->pos < 0) throw IndexError("negative leg position");
            seen[l->circle].push_back(l->pos);
        }
        c = normalized(c);
    }
    legs_per_circle_.assign(num_circles, 0);
    for (int i = 0; i < num_circles; ++i) {
        auto& v = seen[i];
        std::sort(v.begin(), v.end());
        for (size_t p = 0; p < v.size(); ++p) {
            if (p > 0 && v[p] == v[p - 1])
                throw MatchingError("leg used by two chords");
            if (v[p] != static_cast<int>(p))
                throw IndexError("leg positions on a circle must be 0..k-1");
        }
        legs_per_circle_[i] = static_cast<int>(v.size());
    }
    std::sort(chords.begin(), chords.end());
    for (size_t k = 1; k < chords.size(); ++k)
        if (chords[k] == chords[k - 1]) throw MatchingError("duplicate chord");
    chords_ = std::move(chords);
}

ChordDiagram ChordDiagram::trivial(int num_circles) {
    return ChordDiagram(num_circles, {});
}

int ChordDiagram::legs_on(int circle) const {
    if (circle < 0 || circle >= num_circles()) throw IndexError("circle index out of range");
    return legs_per_circle_[circle];
}

Leg ChordDiagram::partner(Leg leg) const {
    for (const auto& c : chords_) {
        if (c.first == leg) return c.second;
        if (c.second == leg) return c.first;
    }
    throw IndexError("no chord at that leg");
}

std::string ChordDiagram::canonical_key() const {
    const int n = num_circles();
    // chord id at each leg, for fast lookup
    std::vector<std::vector<int>> chord_at(n);
    for (int i = 0; i < n; ++i) chord_at[i].assign(legs_per_circle_[i], -1);
    for (size_t k = 0; k < chords_.size(); ++k) {
        chord_at[chords_[k].first.circle][chords_[k].first.pos] = static_cast<int>(k);
        chord_at[chords_[k].second.circle][chords_[k].second.pos] = static_cast<int>(k);
    }

    long long combos = 1;
    for (int i = 0; i < n; ++i) combos *= std::max(legs_per_circle_[i], 1);
    if (combos > 4'000'000 || chords_.size() > 180 || n > 60)
        throw ArgumentError("diagram too large to canonicalize");

    // disjoint byte ranges: separator 1, leg counts from 2, chord ids from 70
    std::string best;
    std::vector<int> rot(n, 0);
    std::vector<int> renumber(chords_.size());
    while (true) {
        // encode under the current rotation tuple
        std::string enc;
        enc.reserve(chords_.size() * 2 + n * 2);
        std::fill(renumber.begin(), renumber.end(), -1);
        int next_id = 0;
        for (int i = 0; i < n; ++i) {
            const int k = legs_per_circle_[i];
            enc.push_back(static_cast<char>(2 + k));
            for (int p = 0; p < k; ++p) {
                int c = chord_at[i][(p + rot[i]) % k];
                if (renumber[c] < 0) renumber[c] = next_id++;
                enc.push_back(static_cast<char>(70 + renumber[c]));
            }
            enc.push_back(static_cast<char>(1));
        }
        if (best.empty() || enc < best) best = std::move(enc);
        // odometer over rotations
        int i = 0;
        while (i < n) {
            if (legs_per_circle_[i] > 0 && ++rot[i] < legs_per_circle_[i]) break;
            rot[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Local moves
// ---------------------------------------------------------------------------

namespace {

// Finds the stored (normalized) copy of c, or throws.
const Chord& locate(const ChordDiagram& d, const Chord& c) {
    Chord want = c;
    if (want.second < want.first) std::swap(want.first, want.second);
    for (const auto& k : d.chords())
        if (k == want) return k;
    throw IndexError("chord not in diagram");
}

}  // namespace

ChordDiagram smooth(const ChordDiagram& d, const Chord& chord) {
    const Chord c = locate(d, chord);
    const int n = d.num_circles();

    if (d.is_mixed(c)) {
        const int i = c.first.circle, j = c.second.circle;  // i < j by normalization
        const int p = c.first.pos, q = c.second.pos;
        const int ki = d.legs_on(i), kj = d.legs_on(j);
        // merged cyclic order: i's legs after p, then j's legs after q
        std::map<Leg, Leg> remap;
        int pos = 0;
        for (int t = 1; t < ki; ++t) remap[{i, (p + t) % ki}] = {i, pos++};
        for (int t = 1; t < kj; ++t) remap[{j, (q + t) % kj}] = {i, pos++};
        auto map_leg = [&](Leg l) -> Leg {
            if (l.circle == i || l.circle == j) return remap.at(l);
            return {l.circle > j ? l.circle - 1 : l.circle, l.pos};
        };
        std::vector<Chord> out;
        for (const auto& k : d.chords()) {
            if (k == c) continue;
            out.push_back({map_leg(k.first), map_leg(k.second)});
        }
        return ChordDiagram(n - 1, std::move(out));
    }

    // internal chord: the circle splits; the arc strictly between the stored
    // legs becomes the new circle n
    const int i = c.first.circle;
    const int p = c.first.pos, q = c.second.pos;  // p < q
    const int k = d.legs_on(i);
    std::map<Leg, Leg> remap;
    int pos = 0;
    for (int t = p + 1; t < q; ++t) remap[{i, t}] = {n, pos++};
    pos = 0;
    for (int t = q + 1; t < q + k - 1; ++t) {
        int tt = t % k;
        if (tt == p) break;
        remap[{i, tt}] = {i, pos++};
    }
    auto map_leg = [&](Leg l) -> Leg {
        if (l.circle == i) return remap.at(l);
        return l;
    };
    std::vector<Chord> out;
    for (const auto& kk : d.chords()) {
        if (kk == c) continue;
        out.push_back({map_leg(kk.first), map_leg(kk.second)});
    }
    return ChordDiagram(n + 1, std::move(out));
}

ChordDiagram inflate(const ChordDiagram& d, const Chord& c) { return inflate_chain(d, c, 1); }

ChordDiagram inflate_chain(const ChordDiagram& d, const Chord& chord, int length) {
    if (length < 0) throw ArgumentError("negative chain length");
    if (length == 0) return d;
    const Chord c = locate(d, chord);
    const int n = d.num_circles();
    std::vector<Chord> out;
    for (const auto& k : d.chords())
        if (!(k == c)) out.push_back(k);
    // path c.first - (n) - (n+1) - ... - (n+length-1) - c.second
    out.push_back({c.first, {n, 0}});
    for (int t = 0; t + 1 < length; ++t) out.push_back({{n + t, 1}, {n + t + 1, 0}});
    out.push_back({{n + length - 1, 1}, c.second});
    return ChordDiagram(n + length, std::move(out));
}

ChordDiagram infect(const ChordDiagram& d, int circle, int gap) {
    if (circle < 0 || circle >= d.num_circles()) throw IndexError("circle index out of range");
    const int k = d.legs_on(circle);
    const int n = d.num_circles();
    if (k == 0) {
        if (gap != 0) throw IndexError("bare circle has a single gap");
        std::vector<Chord> out = d.chords();
        out.push_back({{circle, 0}, {n, 0}});
        return ChordDiagram(n + 1, std::move(out));
    }
    if (gap < 0 || gap >= k) throw IndexError("gap index out of range");
    // new leg sits just after leg `gap`
    auto map_leg = [&](Leg l) -> Leg {
        if (l.circle == circle && l.pos > gap) return {circle, l.pos + 1};
        return l;
    };
    std::vector<Chord> out;
    for (const auto& c : d.chords()) out.push_back({map_leg(c.first), map_leg(c.second)});
    out.push_back({{circle, gap + 1}, {n, 0}});
    return ChordDiagram(n + 1, std::move(out));
}

bool is_connected(const ChordDiagram& d) {
    const int n = d.num_circles();
    if (n <= 1) return true;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& c : d.chords())
        if (d.is_mixed(c)) parent[find(c.first.circle)] = find(c.second.circle);
    int root = find(0);
    for (int i = 1; i < n; ++i)
        if (find(i) != root) return false;
    return true;
}

ChordDiagram relabel(const ChordDiagram& d, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != d.num_circles()) throw ArgumentError("bad permutation size");
    std::vector<Chord> out;
    for (const auto& c : d.chords())
        out.push_back({{perm[c.first.circle], c.first.pos}, {perm[c.second.circle], c.second.pos}});
    return ChordDiagram(d.num_circles(), std::move(out));
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

bool DiagramSet::insert(const ChordDiagram& d) {
    auto [it, fresh] = by_key_.insert(d.canonical_key());
    (void)it;
    if (fresh) items_.push_back(d);
    return fresh;
}

std::set<std::string> DiagramSet::keys() const { return by_key_; }

namespace {

// Closes a batch of diagrams under all circle relabelings. Star
// transpositions (i, n-1) generate the symmetric group.
DiagramSet orbit_closure(const std::vector<ChordDiagram>& start) {
    DiagramSet out;
    std::deque<ChordDiagram> queue;
    for (const auto& d : start)
        if (out.insert(d)) queue.push_back(d);
    while (!queue.empty()) {
        ChordDiagram d = std::move(queue.front());
        queue.pop_front();
        const int n = d.num_circles();
        std::vector<int> perm(n);
        for (int i = 0; i + 1 < n; ++i) {
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[i], perm[n - 1]);
            ChordDiagram r = relabel(d, perm);
            if (out.insert(r)) queue.push_back(r);
        }
    }
    return out;
}

}  // namespace

ChordDiagram one_circle_seed(Sign sign) {
    if (sign == Sign::Plus)
        return ChordDiagram(1, {{{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}});  // parallel
    return ChordDiagram(1, {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}});      // crossed
}

ChordDiagram two_circle_seed(Sign sign) {
    if (sign == Sign::Plus)  // "twisted" triple chord, closes into +(1/4)Θ
        return ChordDiagram(2, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 2}}, {{0, 2}, {1, 1}}});
    // "untwisted" triple chord, closes into -(1/4)Θ
    return ChordDiagram(2, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}});
}

DiagramSet enumerate_chains(int num_circles) {
    if (num_circles < 1) throw ArgumentError("chains need at least one circle");
    DiagramSet out;
    if (num_circles == 1) {
        out.insert(ChordDiagram(1, {{{0, 0}, {0, 1}}}));
        return out;
    }
    std::vector<int> order(num_circles - 1);
    std::iota(order.begin(), order.end(), 1);
    do {
        std::vector<int> cycle{0};
        cycle.insert(cycle.end(), order.begin(), order.end());
        std::vector<Chord> chords;
        for (int t = 0; t < num_circles; ++t) {
            int a = cycle[t], b = cycle[(t + 1) % num_circles];
            chords.push_back({{a, 1}, {b, 0}});
        }
        if (num_circles == 2) chords = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}};
        out.insert(ChordDiagram(num_circles, std::move(chords)));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

DiagramSet enumerate_essential(int num_circles, Sign sign) {
    if (num_circles < 1) throw ArgumentError("need at least one circle");
    DiagramSet level = orbit_closure({one_circle_seed(sign)});
    for (int m = 2; m <= num_circles; ++m) {
        std::vector<ChordDiagram> next;
        for (const auto& d : level.items())
            for (const auto& c : d.chords()) next.push_back(inflate(d, c));
        if (m == 2) next.push_back(two_circle_seed(sign));
        level = orbit_closure(next);
    }
    return level;
}

DiagramSet enumerate_infected(int num_circles) {
    if (num_circles < 1) throw ArgumentError("need at least one circle");
    if (num_circles == 1) return {};
    DiagramSet base = enumerate_essential(num_circles - 1, Sign::Minus);
    std::vector<ChordDiagram> raw;
    for (const auto& d : base.items())
        for (int i = 0; i < d.num_circles(); ++i)
            for (int g = 0; g < std::max(d.legs_on(i), 1); ++g) raw.push_back(infect(d, i, g));
    return orbit_closure(raw);
}

DiagramSet build_family(Sign sign, int a, int b) {
    if (a < b || b < 0) throw ArgumentError("profile must satisfy a >= b >= 0");
    const ChordDiagram seed = one_circle_seed(sign);
    std::vector<ChordDiagram> raw;
    for (int swap = 0; swap < 2; ++swap) {
        int la = swap ? b : a, lb = swap ? a : b;
        ChordDiagram d = inflate_chain(seed, seed.chords()[0], la);
        d = inflate_chain(d, seed.chords()[1], lb);  // chord 1's legs are untouched
        raw.push_back(d);
    }
    return orbit_closure(raw);
}

DiagramSet build_family(Sign sign, int a, int b, int c) {
    if (a < b || b < c || c < 0) throw ArgumentError("profile must satisfy a >= b >= c >= 0");
    const ChordDiagram seed = two_circle_seed(sign);
    std::vector<ChordDiagram> raw;
    // all assignments of the three lengths to the three seed chords; the
    // orbit closure and key dedup collapse whatever coincides
    int lens[3] = {a, b, c};
    std::sort(lens, lens + 3);
    do {
        ChordDiagram d = seed;
        for (int k = 0; k < 3; ++k) d = inflate_chain(d, seed.chords()[k], lens[k]);
        raw.push_back(d);
    } while (std::next_permutation(lens, lens + 3));
    return orbit_closure(raw);
}

// ---------------------------------------------------------------------------
// Textual format
// ---------------------------------------------------------------------------

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int parse_int(const std::string& s, size_t& i) {
    skip_ws(s, i);
    size_t j = i;
    if (j < s.size() && s[j] == '-') ++j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw ParseError("expected integer in diagram string");
    int v = std::stoi(s.substr(i, j - i));
    i = j;
    return v;
}

void expect(const std::string& s, size_t& i, char ch) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != ch)
        throw ParseError(std::string("expected '") + ch + "' in diagram string");
    ++i;
}

Leg parse_leg(const std::string& s, size_t& i) {
    expect(s, i, '(');
    int circle = parse_int(s, i);
    expect(s, i, ',');
    int pos = parse_int(s, i);
    expect(s, i, ')');
    if (circle < 1) throw ParseError("circle indices are 1-based");
    return {circle - 1, pos};
}

}  // namespace

ChordDiagram parse_diagram(const std::string& text) {
    size_t i = 0;
    int n = parse_int(text, i);
    expect(text, i, '|');
    std::vector<Chord> chords;
    skip_ws(text, i);
    while (i < text.size()) {
        Leg first = parse_leg(text, i);
        expect(text, i, '-');
        Leg second = parse_leg(text, i);
        chords.push_back({first, second});
        skip_ws(text, i);
        if (i < text.size()) {
            expect(text, i, ';');
            skip_ws(text, i);
        }
    }
    try {
        return ChordDiagram(n, std::move(chords));
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid diagram: ") + e.what());
    }
}

std::string print_diagram(const ChordDiagram& d) {
    std::ostringstream out;
    out << d.num_circles() << " |";
    bool first = true;
    for (const auto& c : d.chords()) {
        out << (first ? " " : "; ");
        out << "(" << c.first.circle + 1 << "," << c.first.pos << ")-(" << c.second.circle + 1
            << "," << c.second.pos << ")";
        first = false;
    }
    return out.str();
}

}  // namespace cwl
