#pragma once

// Chord diagrams on n ordered, oriented circles, and the three local moves
// (smoothing, inflation, infection) that the whole diagram calculus is built
// from.
//
// Conventions, fixed once for the entire library:
//   * circles are 0-based internally and ordered; the textual format uses
//     1-based circle indices and 0-based positions;
//   * positions on a circle follow its orientation and are cyclic;
//   * two diagrams are equal iff one is obtained from the other by rotating
//     the cyclic leg order of individual circles. Circle order and
//     orientation are part of the data; reflections are NOT identified.

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cwl {

struct Leg {
    int circle = 0;
    int pos = 0;
    auto operator<=>(const Leg&) const = default;
};

using Chord = std::pair<Leg, Leg>;

class ChordDiagram {
public:
    // Validates that the chords form a perfect matching of the legs of
    // `num_circles` circles: the positions used on circle c must be exactly
    // 0..k-1 for some k >= 0.
    ChordDiagram(int num_circles, std::vector<Chord> chords);

    // Trivial diagram (no chords) on n circles.
    static ChordDiagram trivial(int num_circles);

    int num_circles() const { return static_cast<int>(legs_per_circle_.size()); }
    int legs_on(int circle) const;
    const std::vector<int>& legs_per_circle() const { return legs_per_circle_; }
    int degree() const { return static_cast<int>(chords_.size()); }
    const std::vector<Chord>& chords() const { return chords_; }

    // The other end of the chord at `leg`.
    Leg partner(Leg leg) const;

    bool is_mixed(const Chord& c) const { return c.first.circle != c.second.circle; }

    // Equal up to independent rotation of each circle's cyclic leg order.
    std::string canonical_key() const;

    bool operator==(const ChordDiagram& o) const { return canonical_key() == o.canonical_key(); }

private:
    std::vector<int> legs_per_circle_;
    std::vector<Chord> chords_;  // normalized: legs sorted within a chord, chords sorted
};

// ---------------------------------------------------------------------------
// Local moves (all pure; the input diagram is never modified)
// ---------------------------------------------------------------------------

// Removes chord c and re-splices the skeleton. A mixed chord between circles
// i < j merges them into circle i (labels above j shift down); an internal
// chord splits its circle, the arc strictly between the chord's two stored
// legs becoming the new last circle.
ChordDiagram smooth(const ChordDiagram& d, const Chord& c);

// Replaces chord c by two chords joined through a new 2-leg circle labeled
// n+1. Degree and circle count both grow by one.
ChordDiagram inflate(const ChordDiagram& d, const Chord& c);

// Adds a new 1-leg circle labeled n+1, joined by a new chord to a fresh leg
// inserted in the given gap of `circle`. Gap g is the interval following leg
// g in cyclic order; a bare circle has the single gap 0.
ChordDiagram infect(const ChordDiagram& d, int circle, int gap);

// Replaces chord c by a path through `length` new 2-leg circles (labeled
// n+1..n+length in path order). length = 1 is inflate; length = 0 returns d.
ChordDiagram inflate_chain(const ChordDiagram& d, const Chord& c, int length);

// Connectivity of the circles-and-chords incidence graph.
bool is_connected(const ChordDiagram& d);

// Applies a relabeling of circles: circle i becomes perm[i].
ChordDiagram relabel(const ChordDiagram& d, const std::vector<int>& perm);

// ---------------------------------------------------------------------------
// Diagram families
// ---------------------------------------------------------------------------

enum class Sign : int8_t { Plus = +1, Minus = -1 };

// Deduplicated set of diagrams, keyed canonically.
class DiagramSet {
public:
    bool insert(const ChordDiagram& d);
    bool contains(const ChordDiagram& d) const { return by_key_.count(d.canonical_key()) > 0; }
    size_t size() const { return items_.size(); }
    const std::vector<ChordDiagram>& items() const& { return items_; }
    std::vector<ChordDiagram> items() && { return std::move(items_); }  // safe on temporaries
    std::set<std::string> keys() const;

private:
    std::set<std::string> by_key_;
    std::vector<ChordDiagram> items_;
};

// All chains on m circles, one per canonical key, every labeling: a single
// diagram for m <= 2, (m-1)!/2 for m >= 3.
DiagramSet enumerate_chains(int num_circles);

// E^+(n) / E^-(n): every essential diagram on n circles, generated by
// iterated inflations from the two seeds of the given sign and closed under
// circle relabelings.
DiagramSet enumerate_essential(int num_circles, Sign sign);

// P(n): single infections of E^-(n-1), closed under relabelings. P(1) is
// empty.
DiagramSet enumerate_infected(int num_circles);

// {D±(a,b)} on a+b+1 circles (a >= b >= 0), or {D±(a,b,c)} on a+b+c+2
// circles (a >= b >= c >= 0): the template grown from the 1- resp. 2-circle
// seed by chains of the stated lengths, in every circle order.
DiagramSet build_family(Sign sign, int a, int b);
DiagramSet build_family(Sign sign, int a, int b, int c);

// The four seeds. one_circle_seed(+) has parallel chords, (-) crossed;
// two_circle_seed(±) are the triple-chord diagrams closing into ±(1/4)Θ.
ChordDiagram one_circle_seed(Sign sign);
ChordDiagram two_circle_seed(Sign sign);

// ---------------------------------------------------------------------------
// Textual format: "n | (c1,p1)-(c2,p2); ..." with 1-based circles and
// 0-based positions. parse/print round-trip exactly.
// ---------------------------------------------------------------------------

ChordDiagram parse_diagram(const std::string& text);
std::string print_diagram(const ChordDiagram& d);

}  // namespace cwl
