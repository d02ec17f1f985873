#pragma once

// The degree-<=1 closure engine: the map iota_1 that replaces skeleton
// circles by trees, reduced in A(∅) to the basis {empty, Θ}.
//
// Substitution rules, per circle with k legs:
//   k = 2          -> an edge joining the two legs
//   k = 3          -> (1/2) x  single trivalent vertex  (T3)
//   k = 4          -> (1/6) x (adjacent pairing 01|23)  +  (1/6) x (12|30)  (T4)
//   k = 0, 1, >= 5 -> the whole diagram maps to 0
// Afterwards each closed dashed loop with no vertex counts (-2); a component
// with a self-loop at a vertex vanishes (AS); the two-vertex theta component
// is ±Θ according to whether its vertex cyclic orders are mutually reversed
// (+) or aligned (-). Graphs with more than two vertices have degree >= 2
// and are discarded.

#include "cwl/chord_diagram.hpp"
#include "cwl/rational.hpp"

namespace cwl {

// An element of A_{<=1}(∅): c0 * empty + c1 * Θ.
struct ClosureValue {
    Rational c0;
    Rational c1;
    bool operator==(const ClosureValue&) const = default;
};

// (iota_1(D))_{<=1}, exactly.
ClosureValue iota1_le1(const ChordDiagram& d);

// The Θ-coefficient of iota_1(D # nu^n) where nu is the degree-<=2
// truncation of the Kontsevich integral of the 0-framed unknot:
// nu = 1 + (1/24)(parallel chords) - (1/24)(crossed chords). Only bare
// circles pick up a nu contribution; everywhere else the nu terms push the
// leg count past 4 and die.
Rational iota_theta(const ChordDiagram& d);

enum class DiagramClass { Chain, PlusEssential, MinusEssential, Other };

// Chain: connected with two legs on every circle. Plus/MinusEssential:
// connected, leg profile one 4-leg circle or two 3-leg circles (rest 2),
// and iota_theta nonzero of the matching sign. Everything else: Other.
DiagramClass structural_class(const ChordDiagram& d);

const char* to_string(DiagramClass c);

}  // namespace cwl
