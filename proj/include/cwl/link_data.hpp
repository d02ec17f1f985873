#pragma once

// LinkInvariantData: everything the formula layer consumes — the linking
// matrix and the Conway polynomial of every nonempty sublink. It can be
// computed from a diagram or supplied directly as JSON, so the formulas stay
// testable on synthetic tables where no diagram is known.
//
// Subsets of components are bitmasks over 0-based component indices; the
// JSON keys use sorted, comma-separated 1-based indices ("1,3").

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cwl/int_matrix.hpp"
#include "cwl/link.hpp"
#include "cwl/rational.hpp"

namespace cwl {

using Subset = uint32_t;

class LinkInvariantData {
public:
    LinkInvariantData(IntMatrix linking, std::map<Subset, Poly> conway_table);

    // Computes the full table of a diagram (2^n - 1 skein evaluations).
    static LinkInvariantData from_link(const FramedLink& link);

    static LinkInvariantData from_json(const std::string& text);
    std::string to_json() const;

    int num_components() const { return linking_.dim(); }
    const IntMatrix& linking() const { return linking_; }
    Rational l(int i, int j) const { return Rational(linking_.at(i, j)); }

    bool has(Subset s) const { return conway_.count(s) > 0; }
    bool complete() const;  // every nonempty subset present

    const Poly& conway(Subset s) const;          // IncompleteDataError if absent
    Rational conway_coeff(Subset s, int k) const;  // 0 off the stored range

    // The data with components relabeled: component i becomes perm[i].
    LinkInvariantData relabeled(const std::vector<int>& perm) const;

    // Split union with an extra component (framing fr, conway table of the
    // new knot given). Conway polynomials of split sublinks vanish.
    LinkInvariantData with_split_component(int fr, const Poly& knot_conway) const;

private:
    IntMatrix linking_;
    std::map<Subset, Poly> conway_;
};

// Data of a split union of two links: block-diagonal linking matrix, Conway
// tables inherited from the factors, and zero on every mixed sublink.
LinkInvariantData split_union(const LinkInvariantData& a, const LinkInvariantData& b);

std::string subset_to_string(Subset s);       // "1,3" style, 1-based
Subset subset_from_string(const std::string& text, int n);

}  // namespace cwl
