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

#pragma once

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace quditc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Tolerance for user-supplied gate matrices.
inline constexpr double kInputUnitaryTol = 1e-10;
// Tolerance for products of many gates.
inline constexpr double kComposedUnitaryTol = 1e-9;

// max-abs(U^dagger U - I). Non-square input yields +infinity.
double unitarity_deviation(const Matrix &u);

inline bool is_unitary(const Matrix &u, double tol = kInputUnitaryTol) {
  return unitarity_deviation(u) <= tol;
}

// Matrix with M(image[j], j) = 1, i.e. basis state |j> goes to |image[j]>.
Matrix permutation_matrix(std::span<const int> image);

// Entrywise exact equality, including shape.
bool exactly_equal(const Matrix &a, const Matrix &b);

namespace gates {

Matrix h();
Matrix x();
Matrix y();
Matrix z();
Matrix s();
Matrix t();
Matrix tdg();
Matrix rx(double angle);
Matrix ry(double angle);
Matrix rz(double angle);

}  // namespace gates

}  // namespace quditc
