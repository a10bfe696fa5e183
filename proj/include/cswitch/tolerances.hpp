// Copyright 2026 The cswitch Authors
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

// Numerical policy. Every tolerance used by the library is defined here.
namespace cswitch::tol {

// Max entrywise deviation from Hermiticity for a density operator.
inline constexpr double hermitian = 1e-10;
// Smallest admissible eigenvalue of a density operator.
inline constexpr double psd_floor = 1e-10;
// |Tr rho - 1| for a density operator.
inline constexpr double unit_trace = 1e-10;
// Hermiticity precondition of the eigensolver.
inline constexpr double eig_hermitian = 1e-8;
// Frobenius norm of sum K^dag K - I.
inline constexpr double kraus_completeness = 1e-9;
// Smallest admissible Choi eigenvalue.
inline constexpr double choi_psd_floor = 1e-9;
// Choi eigenvalues below this are dropped when extracting Kraus operators.
inline constexpr double kraus_drop = 1e-10;
// Minimum partial-transpose eigenvalue still counted as PPT.
inline constexpr double ppt = 1e-10;
// Heralded branches below this probability are omitted.
inline constexpr double branch_probability = 1e-12;
// Unitarity and Hilbert-Schmidt orthogonality of basis elements.
inline constexpr double unitary = 1e-10;
inline constexpr double basis_orthogonality = 1e-9;

}  // namespace cswitch::tol
