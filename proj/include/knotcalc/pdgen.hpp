#pragma once

#include <string>
#include <vector>

#include "knotcalc/diagram.hpp"

namespace knotcalc {
namespace pdgen {

// Standard alternating 4-plat diagram of the two-bridge knot with positive
// continued fraction [c_1, ..., c_m] (all c_i >= 1). The determinant of the
// result is the numerator of the fraction; it must be odd (a knot, not a
// link). `mirror` selects the other checkerboard branch, i.e. the mirror
// diagram.
std::string two_bridge_pd(const std::vector<int>& cf, bool mirror = false);

// fraction numerator/denominator of c_1 + 1/(c_2 + 1/(...))
std::pair<Int, Int> cf_fraction(const std::vector<int>& cf);

// Trace closure of a braid word on `strands` strands; letters are +-k for
// the k-th Artin generator. The closure must be a knot.
std::string braid_closure_pd(int strands, const std::vector<int>& word);

// over/under switch at every crossing (the mirror knot)
PlanarDiagram mirror_pd(const PlanarDiagram& d);

// cyclic relabel l -> l + k and string-orientation reversal
PlanarDiagram shift_labels(const PlanarDiagram& d, int k);
PlanarDiagram reverse_pd(const PlanarDiagram& d);

std::string pd_to_text(const PlanarDiagram& d);

} // namespace pdgen
} // namespace knotcalc
