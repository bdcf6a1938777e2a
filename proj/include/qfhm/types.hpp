#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qfhm {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

}  // namespace qfhm
