#pragma once

#include <Eigen/Dense>

namespace splab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

} // namespace splab
