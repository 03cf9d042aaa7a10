#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "rssiprox/ml/matrix.hpp"
#include "rssiprox/types.hpp"

namespace rssiprox {

/// Header of the feature CSV: label followed by the 18 feature names.
std::string feature_header();

void write_feature_matrix(std::ostream& out, const Dataset& ds,
                          std::span<const std::string> comments = {});

struct FeatureTable {
    ml::Matrix x;
    ml::Labels y;
};

/// Parses a feature CSV. '#' lines are skipped; throws InputError with the
/// line number on malformed rows.
FeatureTable read_feature_matrix(std::istream& in);

} // namespace rssiprox
