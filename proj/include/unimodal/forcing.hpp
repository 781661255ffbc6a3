#pragma once

#include <optional>
#include <vector>

#include "unimodal/monoid.hpp"

namespace unimodal {

enum class ForcingOrder { Less, Greater, Equal };

// The total order on transitive shapes: s1 comes before s2 when any
// continuous unimodal map with an s2-orbit also carries an s1-orbit.
// Computed from the sign sequence of the two maximal elements.
ForcingOrder forcing_compare(const Shape& s1, const Shape& s2);

// The forcing-minimal shape of each length, found by scanning Delta_k.
// Guarded at k <= 12.
Shape min_shape(int k);

// The Sharkovskii order on cycle lengths, read off the forcing order of the
// per-length minima.
bool sarkovskii_less(int k, int l);
std::vector<int> sarkovskii_sort(std::vector<int> lengths);

// The double is the immediate forcing successor; a shape has an immediate
// predecessor exactly when it is a double.
Shape successor(const Shape& s);
std::optional<Shape> predecessor(const Shape& s);

}  // namespace unimodal
