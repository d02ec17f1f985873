#pragma once

// Framed link diagrams and their classical invariants.
//
// PD convention: a crossing is a 4-tuple [a,b,c,d] of arc labels read
// counterclockwise starting from the incoming under-strand, so the
// under-strand runs a -> c. The over-strand direction is recovered globally
// (arcs must chain into one cycle per component); a component that never
// passes under carries no orientation information, in which case lower arc
// labels are taken to flow into higher ones. Sign: over-strand entering at
// slot d is a positive crossing.
//
// Components are ordered by their smallest arc label. Framings are supplied
// separately; nothing is inferred from writhe.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwl/int_matrix.hpp"
#include "cwl/rational.hpp"

namespace cwl {

// Conway polynomial, little-endian coefficient list in z.
using Poly = std::vector<Rational>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul_z(const Poly& a);        // multiply by z
Poly poly_scale(const Poly& a, const Rational& s);
Rational poly_coeff(const Poly& a, int k);
std::string poly_to_string(const Poly& a);  // e.g. "1 + z^2"

struct Pass {
    int crossing = 0;
    bool over = false;
};

// Combinatorial oriented link diagram: per component, the cyclic sequence of
// crossing passes; per crossing, its sign. This is what the skein engine
// rewrites; it is deliberately free of planar data.
class FramedLink {
public:
    FramedLink(std::vector<std::vector<Pass>> components, std::vector<int> signs,
               std::vector<int> framings);

    // Parses a PD code (see header comment). framings.size() must match the
    // component count.
    static FramedLink from_pd(const std::vector<std::array<int, 4>>& pd,
                              std::vector<int> framings);

    int num_components() const { return static_cast<int>(components_.size()); }
    int num_crossings() const { return static_cast<int>(signs_.size()); }
    const std::vector<std::vector<Pass>>& components() const { return components_; }
    int sign(int crossing) const { return signs_[crossing]; }
    const std::vector<int>& framings() const { return framings_; }

    // Skein moves at a crossing (positions are found internally).
    FramedLink switched(int crossing) const;   // over <-> under, sign flips
    FramedLink smoothed(int crossing) const;   // oriented smoothing

    FramedLink sublink(const std::vector<int>& keep) const;  // 0-based, nonempty

    // Component of each pass of a crossing, by crossing id.
    std::pair<int, int> crossing_components(int crossing) const;

    std::string serialize() const;  // canonical enough for memoization

private:
    std::vector<std::vector<Pass>> components_;
    std::vector<int> signs_;
    std::vector<int> framings_;
};

// Linking matrix: framings on the diagonal, half the signed mixed crossing
// count off it.
IntMatrix linking_matrix(const FramedLink& link);

// Conway polynomial by the descending skein tree. Exact; framing-independent.
Poly conway(const FramedLink& link);

Rational conway_coeff(const FramedLink& link, int k);

}  // namespace cwl
