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


#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "cswitch/matrix_core.hpp"
#include "cswitch/random.hpp"
#include "oracles.hpp"

using namespace cswitch;
using Catch::Matchers::WithinAbs;

namespace {

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("tensor of identities is identity") {
  const CMatrix i2 = CMatrix::Identity(2, 2);
  CHECK(max_abs(tensor(i2, i2) - CMatrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("tensor of basis projectors places a single one") {
  const CMatrix t = tensor(matrix_unit(2, 0, 0), matrix_unit(2, 1, 1));
  CHECK(t(1, 1) == Complex(1.0));
  CHECK(t.cwiseAbs().sum() == 1.0);
}

TEST_CASE("tensor uses the first factor as the block index") {
  CMatrix expected = CMatrix::Zero(4, 4);
  expected(0, 2) = 1;
  expected(1, 3) = -1;
  expected(2, 0) = 1;
  expected(3, 1) = -1;
  const CMatrix xz = tensor(pauli_x(), pauli_z());
  CHECK(max_abs(xz - expected) == 0.0);
  // (X (x) I)(I (x) Z) = X (x) Z
  const CMatrix i2 = CMatrix::Identity(2, 2);
  CHECK(max_abs(tensor(pauli_x(), i2) * tensor(i2, pauli_z()) - xz) < 1e-15);
}

TEST_CASE("tensor is associative and matches the index oracle") {
  Rng rng(7);
  const CMatrix a = ginibre(2, 3, rng), b = ginibre(3, 2, rng), c = ginibre(2, 2, rng);
  CHECK(max_abs(tensor(tensor(a, b), c) - tensor(a, tensor(b, c))) < 1e-14);
  CHECK(max_abs(tensor(a, b) - oracle::kron(a, b)) == 0.0);
}

TEST_CASE("partial trace of a product state") {
  Rng rng(11);
  const CMatrix rho = random_density_matrix(2, rng);
  const CMatrix sigma = random_density_matrix(3, rng);
  const CMatrix prod = tensor(rho, sigma);
  CHECK(max_abs(partial_trace(prod, DimVector{2, 3}, {0}) - rho) < 1e-14);
  CHECK(max_abs(partial_trace(prod, DimVector{2, 3}, {1}) - sigma) < 1e-14);
}

TEST_CASE("marginals of the maximally entangled state are maximally mixed") {
  const CVector phi = max_entangled(2);
  const CMatrix proj = phi * phi.adjoint();
  for (int keep : {0, 1}) {
    CHECK(max_abs(partial_trace(proj, DimVector{2, 2}, {keep}) - CMatrix::Identity(2, 2) / 2.0) < 1e-15);
  }
}

TEST_CASE("partial trace agrees with the index-sum oracle and preserves trace") {
  Rng rng(3);
  const CMatrix h = random_hermitian(6, rng);
  const CMatrix keep0 = partial_trace(h, DimVector{2, 3}, {0});
  const CMatrix keep1 = partial_trace(h, DimVector{2, 3}, {1});
  CHECK(max_abs(keep0 - oracle::partial_trace_pair(h, 2, 3, true)) < 1e-13);
  CHECK(max_abs(keep1 - oracle::partial_trace_pair(h, 2, 3, false)) < 1e-13);
  CHECK(std::abs(keep0.trace() - h.trace()) < 1e-12);
  CHECK(std::abs(keep1.trace() - h.trace()) < 1e-12);
}

TEST_CASE("partial trace of a tensor product scales by the discarded trace") {
  Rng rng(5);
  const CMatrix a = ginibre(3, 3, rng), b = ginibre(2, 2, rng);
  CHECK(max_abs(partial_trace(tensor(a, b), DimVector{3, 2}, {0}) - a * b.trace()) < 1e-13);
}

TEST_CASE("partial trace over three factors keeps the requested pair") {
  Rng rng(9);
  const CMatrix a = random_density_matrix(2, rng), b = random_density_matrix(3, rng),
                c = random_density_matrix(2, rng);
  const CMatrix abc = tensor(tensor(a, b), c);
  CHECK(max_abs(partial_trace(abc, DimVector{2, 3, 2}, {0, 2}) - tensor(a, c)) < 1e-14);
}

TEST_CASE("partial trace rejects inconsistent dims and bad indices") {
  const CMatrix m = CMatrix::Identity(6, 6);
  CHECK_THROWS_AS(partial_trace(m, DimVector{2, 2}, {0}), DimensionMismatch);
  CHECK_THROWS_AS(partial_trace(m, DimVector{2, 3}, {2}), std::out_of_range);
}

TEST_CASE("partial transpose is an involution preserving trace and hermiticity") {
  Rng rng(13);
  const CMatrix h = random_hermitian(6, rng);
  for (int s : {0, 1}) {
    const CMatrix pt = partial_transpose(h, DimVector{2, 3}, s);
    CHECK(max_abs(partial_transpose(pt, DimVector{2, 3}, s) - h) == 0.0);
    CHECK(std::abs(pt.trace() - h.trace()) < 1e-13);
    CHECK(hermiticity_error(pt) < 1e-14);
  }
}

TEST_CASE("partial transpose of the Bell state has eigenvalue -1/2") {
  const CVector phi = max_entangled(2);
  const auto ev = eigenvalues_hermitian(partial_transpose(phi * phi.adjoint(), DimVector{2, 2}, 1));
  CHECK_THAT(ev.front(), WithinAbs(-0.5, 1e-12));
}

TEST_CASE("partial transpose of a product state stays positive") {
  Rng rng(17);
  const CMatrix prod = tensor(random_density_matrix(2, rng), random_density_matrix(3, rng));
  for (int s : {0, 1}) {
    CHECK(eigenvalues_hermitian(partial_transpose(prod, DimVector{2, 3}, s)).front() > -1e-14);
  }
  CHECK_THROWS_AS(partial_transpose(prod, DimVector{2, 3}, 2), std::out_of_range);
}

TEST_CASE("hermitian eigensolver") {
  SECTION("Pauli Z") {
    const auto e = eig_hermitian(pauli_z());
    CHECK_THAT(e.values[0], WithinAbs(-1.0, 1e-15));
    CHECK_THAT(e.values[1], WithinAbs(1.0, 1e-15));
  }
  SECTION("maximally mixed") {
    for (double v : eigenvalues_hermitian(CMatrix::Identity(4, 4) / 4.0)) CHECK_THAT(v, WithinAbs(0.25, 1e-15));
  }
  SECTION("random 6x6: trace identity and reconstruction") {
    Rng rng(19);
    const CMatrix h = random_hermitian(6, rng);
    const auto e = eig_hermitian(h);
    const double sum = std::accumulate(e.values.begin(), e.values.end(), 0.0);
    CHECK_THAT(sum, WithinAbs(h.trace().real(), 1e-10));
    CHECK(std::is_sorted(e.values.begin(), e.values.end()));
    const Eigen::VectorXd lam = Eigen::Map<const Eigen::VectorXd>(e.values.data(), 6);
    const CMatrix rebuilt = e.vectors * lam.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    CHECK((rebuilt - h).norm() <= 1e-9 * h.norm());
  }
  SECTION("non-hermitian input is rejected") {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(eig_hermitian(m), PreconditionError);
  }
}

TEST_CASE("density operator validation") {
  CHECK_NOTHROW(DensityOperator::maximally_mixed(3));
  CHECK_THROWS_AS(DensityOperator(CMatrix::Identity(2, 2)), PreconditionError);
  CMatrix neg(2, 2);
  neg << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(DensityOperator(neg), PreconditionError);
  CMatrix nonherm(2, 2);
  nonherm << 0.5, 0.1, 0.0, 0.5;
  CHECK_THROWS_AS(DensityOperator(nonherm), PreconditionError);
  CHECK_THROWS_AS(DensityOperator(CMatrix::Identity(4, 4) / 4.0, DimVector{2, 3}), DimensionMismatch);
  CMatrix nan = CMatrix::Identity(2, 2) / 2.0;
  nan(0, 0) = std::nan("");
  CHECK_THROWS(DensityOperator(nan));
}

TEST_CASE("von Neumann entropy") {
  Rng rng(23);
  CHECK_THAT(von_neumann_entropy(DensityOperator::pure(haar_state(3, rng))), WithinAbs(0.0, 1e-12));
  for (int d : {2, 3, 5}) {
    CHECK_THAT(von_neumann_entropy(DensityOperator::maximally_mixed(d)), WithinAbs(std::log2(d), 1e-12));
  }
  CMatrix diag = CMatrix::Zero(2, 2);
  diag(0, 0) = 0.75;
  diag(1, 1) = 0.25;
  CHECK_THAT(von_neumann_entropy(DensityOperator(diag)), WithinAbs(0.8112781244591328, 1e-12));
  CHECK_THROWS_AS(von_neumann_entropy(DensityOperator(diag), 1.0), std::invalid_argument);
  CHECK_THAT(von_neumann_entropy(DensityOperator(diag), std::exp(1.0)),
             WithinAbs(0.8112781244591328 * std::log(2.0), 1e-12));
}

TEST_CASE("entropy is unitarily invariant") {
  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix rho = random_density_matrix(4, rng);
    const CMatrix u = haar_unitary(4, rng);
    CHECK_THAT(von_neumann_entropy(CMatrix(u * rho * u.adjoint())), WithinAbs(von_neumann_entropy(rho), 1e-10));
  }
}

TEST_CASE("dim vectors reject non-positive entries") {
  CHECK_THROWS(DimVector{2, 0});
  CHECK(DimVector{2, 3}.total() == 6);
}
