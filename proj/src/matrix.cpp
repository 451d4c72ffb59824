// Copyright 2026 The quditc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quditc/matrix.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace quditc {

double unitarity_deviation(const Matrix &u) {
  if (u.rows() != u.cols() || u.rows() == 0) {
    return std::numeric_limits<double>::infinity();
  }
  const Matrix residual = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return residual.cwiseAbs().maxCoeff();
}

Matrix permutation_matrix(std::span<const int> image) {
  const auto n = static_cast<Eigen::Index>(image.size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    m(image[static_cast<std::size_t>(j)], j) = 1.0;
  }
  return m;
}

bool exactly_equal(const Matrix &a, const Matrix &b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.array() == b.array()).all();
}

namespace gates {

Matrix h() {
  const double r = 1.0 / std::numbers::sqrt2;
  Matrix m(2, 2);
  m << r, r, r, -r;
  return m;
}

Matrix x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix y() {
  const Complex i(0.0, 1.0);
  Matrix m(2, 2);
  m << 0.0, -i, i, 0.0;
  return m;
}

Matrix z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Matrix s() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, Complex(0.0, 1.0);
  return m;
}

Matrix t() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4);
  return m;
}

Matrix tdg() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, std::polar(1.0, -std::numbers::pi / 4);
  return m;
}

Matrix rx(double angle) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  Matrix m(2, 2);
  m << c, Complex(0.0, -s), Complex(0.0, -s), c;
  return m;
}

Matrix ry(double angle) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  Matrix m(2, 2);
  m << c, -s, s, c;
  return m;
}

Matrix rz(double angle) {
  Matrix m(2, 2);
  m << std::polar(1.0, -angle / 2), 0.0, 0.0, std::polar(1.0, angle / 2);
  return m;
}

}  // namespace gates

}  // namespace quditc
