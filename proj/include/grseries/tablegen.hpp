#pragma once

#include <cstdint>
#include <string>

#include "grseries/builders.hpp"

namespace grseries {

/// A synthetic model + curve table drawn deterministically from a seed.
/// Tables mix generic, exceptional and toroidal classes (as the underlying
/// model permits), always within the hypotheses of the degree-zero closed
/// form: nonnegative squares, kappa.E = -1, exceptional counts in {0,1},
/// pairwise nonnegative intersections.
struct GeneratedTable {
    ModelPtr model;
    CurveTable table;
    std::string model_name;
};

GeneratedTable random_table(std::uint64_t seed, std::int64_t torder, std::int64_t sorder);

}  // namespace grseries
