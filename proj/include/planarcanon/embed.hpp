#pragma once

#include "planarcanon/rotation.hpp"

namespace planarcanon {

// Computes a genus-0 rotation system of a triconnected planar graph by
// incremental face splitting. Deterministic: identical inputs yield the
// identical rotation system. Throws NotTriconnected / NotPlanar.
RotationSystem embed(const Graph& g);

}  // namespace planarcanon
