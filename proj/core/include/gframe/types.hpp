#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace gframe {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Default classification tolerance shared by certification and factorization.
inline constexpr double kDefaultTolerance = 1e-8;

}  // namespace gframe
