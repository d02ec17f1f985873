#include "cwl/link.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "cwl/errors.hpp"

namespace cwl {

// ---------------------------------------------------------------------------
// polynomials
// ---------------------------------------------------------------------------

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Poly poly_mul_z(const Poly& a) {
    if (a.empty()) return {};
    Poly r(a.size() + 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i + 1] = a[i];
    return r;
}

Poly poly_scale(const Poly& a, const Rational& s) {
    if (s == 0) return {};
    Poly r = a;
    for (auto& c : r) c *= s;
    return r;
}

Rational poly_coeff(const Poly& a, int k) {
    if (k < 0 || k >= static_cast<int>(a.size())) return 0;
    return a[k];
}

std::string poly_to_string(const Poly& a) {
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < a.size(); ++k) {
        if (a[k] == 0) continue;
        Rational c = a[k];
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (c != 1 || k == 0) out << to_string(c);
        if (k > 0) {
            if (c != 1) out << "*";
            out << "z";
            if (k > 1) out << "^" << k;
        }
    }
    if (first) out << "0";
    return out.str();
}

// ---------------------------------------------------------------------------
// FramedLink
// ---------------------------------------------------------------------------

FramedLink::FramedLink(std::vector<std::vector<Pass>> components, std::vector<int> signs,
                       std::vector<int> framings)
    : components_(std::move(components)), signs_(std::move(signs)), framings_(std::move(framings)) {
    if (framings_.size() != components_.size())
        throw ArgumentError("one framing per component required");
    std::vector<int> over_seen(signs_.size(), 0), under_seen(signs_.size(), 0);
    for (const auto& comp : components_)
        for (const auto& p : comp) {
            if (p.crossing < 0 || p.crossing >= static_cast<int>(signs_.size()))
                throw IndexError("crossing id out of range");
            ++(p.over ? over_seen : under_seen)[p.crossing];
        }
    for (size_t c = 0; c < signs_.size(); ++c) {
        bool alive = over_seen[c] + under_seen[c] > 0;
        if (alive && (over_seen[c] != 1 || under_seen[c] != 1))
            throw ArgumentError("each crossing needs exactly one over and one under pass");
        if (signs_[c] != 1 && signs_[c] != -1) throw ArgumentError("crossing sign must be +-1");
    }
}

namespace {

struct ArcUse {
    int crossing = -1;
    int slot = -1;
};

}  // namespace

FramedLink FramedLink::from_pd(const std::vector<std::array<int, 4>>& pd,
                               std::vector<int> framings) {
    if (pd.empty()) throw ParseError("empty PD code");
    std::map<int, std::vector<ArcUse>> uses;
    for (size_t c = 0; c < pd.size(); ++c)
        for (int s = 0; s < 4; ++s) uses[pd[c][s]].push_back({static_cast<int>(c), s});
    for (const auto& [arc, u] : uses)
        if (u.size() != 2)
            throw ParseError("arc " + std::to_string(arc) + " must appear exactly twice");

    std::map<int, int> succ;
    std::set<int> key_used, val_used;
    auto commit = [&](int from, int to) {
        if (!key_used.insert(from).second || !val_used.insert(to).second)
            throw ParseError("inconsistent arc orientations in PD code");
        succ[from] = to;
    };
    for (const auto& x : pd) commit(x[0], x[2]);

    // over-strand directions: propagate forced choices, then fall back to the
    // lower-label-flows-to-higher convention for all-over components
    std::vector<int> over_in(pd.size(), -1);  // slot 1 or 3
    size_t undecided = pd.size();
    bool progress = true;
    while (undecided > 0) {
        if (!progress) {
            // every remaining crossing admits both orientations; fix one by
            // convention and resume propagation
            for (size_t c = 0; c < pd.size(); ++c) {
                if (over_in[c] >= 0) continue;
                int b = pd[c][1], dd = pd[c][3];
                if (dd == b + 1) { over_in[c] = 1; commit(b, dd); }
                else if (b == dd + 1) { over_in[c] = 3; commit(dd, b); }
                else { over_in[c] = b < dd ? 1 : 3; commit(std::min(b, dd), std::max(b, dd)); }
                --undecided;
                break;
            }
        }
        progress = false;
        for (size_t c = 0; c < pd.size(); ++c) {
            if (over_in[c] >= 0) continue;
            int b = pd[c][1], dd = pd[c][3];
            bool bd = !key_used.count(b) && !val_used.count(dd);
            bool db = !key_used.count(dd) && !val_used.count(b);
            if (!bd && !db) throw ParseError("unorientable PD code");
            if (bd && db) continue;
            over_in[c] = bd ? 1 : 3;
            commit(bd ? b : dd, bd ? dd : b);
            --undecided;
            progress = true;
        }
    }

    // components: cycles of succ, ordered by smallest arc
    std::map<int, ArcUse> incoming_at;  // arc -> crossing/slot where it ends
    for (size_t c = 0; c < pd.size(); ++c) {
        incoming_at[pd[c][0]] = {static_cast<int>(c), 0};
        incoming_at[pd[c][over_in[c]]] = {static_cast<int>(c), over_in[c]};
    }
    std::set<int> remaining;
    for (const auto& [arc, u] : uses) remaining.insert(arc);
    std::vector<std::vector<Pass>> comps;
    while (!remaining.empty()) {
        int start = *remaining.begin();
        std::vector<Pass> comp;
        int a = start;
        do {
            remaining.erase(a);
            const ArcUse& in = incoming_at.at(a);
            comp.push_back({in.crossing, in.slot != 0});
            a = succ.at(a);
        } while (a != start);
        comps.push_back(std::move(comp));
    }

    std::vector<int> signs(pd.size());
    for (size_t c = 0; c < pd.size(); ++c) signs[c] = over_in[c] == 3 ? +1 : -1;

    if (framings.size() != comps.size())
        throw ParseError("framing count does not match component count");
    return FramedLink(std::move(comps), std::move(signs), std::move(framings));
}

std::pair<int, int> FramedLink::crossing_components(int crossing) const {
    int a = -1, b = -1;
    for (int i = 0; i < num_components(); ++i)
        for (const auto& p : components_[i])
            if (p.crossing == crossing) (a < 0 ? a : b) = i;
    if (b < 0) b = a;
    if (a < 0) throw IndexError("crossing not present");
    return {a, b};
}

FramedLink FramedLink::switched(int crossing) const {
    auto comps = components_;
    for (auto& comp : comps)
        for (auto& p : comp)
            if (p.crossing == crossing) p.over = !p.over;
    auto signs = signs_;
    signs[crossing] = -signs[crossing];
    return FramedLink(std::move(comps), std::move(signs), framings_);
}

FramedLink FramedLink::smoothed(int crossing) const {
    // locate the two passes
    int ca = -1, ia = -1, cb = -1, ib = -1;
    for (int i = 0; i < num_components(); ++i)
        for (size_t j = 0; j < components_[i].size(); ++j)
            if (components_[i][j].crossing == crossing) {
                if (ca < 0) { ca = i; ia = static_cast<int>(j); }
                else { cb = i; ib = static_cast<int>(j); }
            }
    if (ca < 0 || cb < 0) throw IndexError("crossing not present");

    auto comps = components_;
    if (ca != cb) {
        // oriented merge: A's incoming continues as B's outgoing
        const auto& A = components_[ca];
        const auto& B = components_[cb];
        std::vector<Pass> merged;
        merged.insert(merged.end(), A.begin(), A.begin() + ia);
        merged.insert(merged.end(), B.begin() + ib + 1, B.end());
        merged.insert(merged.end(), B.begin(), B.begin() + ib);
        merged.insert(merged.end(), A.begin() + ia + 1, A.end());
        comps[ca] = std::move(merged);
        comps.erase(comps.begin() + cb);
        auto framings = framings_;
        framings.erase(framings.begin() + cb);  // framing data is per-component; merged keeps A's
        return FramedLink(std::move(comps), signs_, std::move(framings));
    }
    // self-crossing: the component splits into its two arcs
    const auto& A = components_[ca];
    std::vector<Pass> first(A.begin() + ia + 1, A.begin() + ib);
    std::vector<Pass> second(A.begin() + ib + 1, A.end());
    second.insert(second.end(), A.begin(), A.begin() + ia);
    comps[ca] = std::move(first);
    comps.push_back(std::move(second));
    auto framings = framings_;
    framings.push_back(0);
    return FramedLink(std::move(comps), signs_, std::move(framings));
}

FramedLink FramedLink::sublink(const std::vector<int>& keep) const {
    if (keep.empty()) throw ArgumentError("sublink needs a nonempty component set");
    std::vector<bool> kept(num_components(), false);
    for (int i : keep) {
        if (i < 0 || i >= num_components()) throw IndexError("component index out of range");
        kept[i] = true;
    }
    // crossings survive only if both passes lie on kept components
    std::vector<int> count(signs_.size(), 0);
    for (int i = 0; i < num_components(); ++i)
        if (kept[i])
            for (const auto& p : components_[i]) ++count[p.crossing];

    std::vector<std::vector<Pass>> comps;
    std::vector<int> framings;
    for (int i = 0; i < num_components(); ++i) {
        if (!kept[i]) continue;
        std::vector<Pass> comp;
        for (const auto& p : components_[i])
            if (count[p.crossing] == 2) comp.push_back(p);
        comps.push_back(std::move(comp));
        framings.push_back(framings_[i]);
    }
    return FramedLink(std::move(comps), signs_, std::move(framings));
}

std::string FramedLink::serialize() const {
    std::ostringstream out;
    std::map<int, int> renum;
    for (const auto& comp : components_) {
        out << "/";
        for (const auto& p : comp) {
            auto [it, fresh] = renum.insert({p.crossing, static_cast<int>(renum.size())});
            (void)fresh;
            out << it->second << (p.over ? 'o' : 'u') << (signs_[p.crossing] > 0 ? '+' : '-');
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// invariants
// ---------------------------------------------------------------------------

IntMatrix linking_matrix(const FramedLink& link) {
    const int n = link.num_components();
    std::vector<std::vector<int>> acc(n, std::vector<int>(n, 0));
    std::set<int> alive;
    for (const auto& comp : link.components())
        for (const auto& p : comp) alive.insert(p.crossing);
    for (int c : alive) {
        auto [i, j] = link.crossing_components(c);
        if (i == j) continue;
        acc[i][j] += link.sign(c);
        acc[j][i] += link.sign(c);
    }
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = link.framings()[i];
        for (int j = i + 1; j < n; ++j) {
            assert(acc[i][j] % 2 == 0);
            m.at(i, j) = acc[i][j] / 2;
            m.at(j, i) = m.at(i, j);
        }
    }
    return m;
}

namespace {

Poly conway_impl(const FramedLink& link, std::map<std::string, Poly>& memo) {
    const std::string key = link.serialize();
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // first crossing met on its under-strand while walking components in
    // order breaks the descending condition
    int bad = -1, bad_sign = 0;
    {
        std::set<int> seen;
        for (const auto& comp : link.components()) {
            for (const auto& p : comp) {
                if (!seen.insert(p.crossing).second) continue;
                if (!p.over) { bad = p.crossing; bad_sign = link.sign(p.crossing); break; }
            }
            if (bad >= 0) break;
        }
    }

    Poly result;
    if (bad < 0) {
        // descending diagram: an unlink
        result = link.num_components() == 1 ? Poly{Rational(1)} : Poly{};
    } else {
        Poly sw = conway_impl(link.switched(bad), memo);
        Poly sm = conway_impl(link.smoothed(bad), memo);
        result = poly_add(sw, poly_scale(poly_mul_z(sm), Rational(bad_sign)));
    }
    memo[key] = result;
    return result;
}

}  // namespace

Poly conway(const FramedLink& link) {
    std::map<std::string, Poly> memo;
    return conway_impl(link, memo);
}

Rational conway_coeff(const FramedLink& link, int k) { return poly_coeff(conway(link), k); }

}  // namespace cwl
