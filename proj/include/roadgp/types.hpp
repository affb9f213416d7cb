#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace roadgp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Segment indices into a RoadNetwork's canonical (id-sorted) order.
using IndexList = std::vector<int>;

} // namespace roadgp
