#include "anderson/hamiltonian.hpp"

#include <stdexcept>
#include <vector>

namespace anderson {

double HamiltonianMatrix::trace() const {
  double t = 0.0;
  for (long i = 0; i < matrix.rows(); ++i) t += matrix.coeff(i, i);
  return t;
}

double HamiltonianMatrix::frobenius_squared() const {
  double f = 0.0;
  for (int k = 0; k < matrix.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(matrix, k); it; ++it)
      f += it.value() * it.value();
  return f;
}

namespace {

void add_hoppings(const LatticeCube& cube,
                  std::vector<Eigen::Triplet<double>>& triplets) {
  const long n = cube.volume();
  std::vector<long> rel;
  for (long i = 0; i < n; ++i) {
    rel = cube.site(i);
    for (int a = 0; a < cube.dimension(); ++a) {
      long next = rel[a] + 1;
      if (next == cube.side()) {
        if (cube.boundary() != Boundary::Periodic) continue;
        next = 0;
      }
      const long saved = rel[a];
      rel[a] = next;
      const long j = cube.index(rel);
      rel[a] = saved;
      triplets.emplace_back(i, j, 1.0);
      triplets.emplace_back(j, i, 1.0);
    }
  }
}

}  // namespace

HamiltonianMatrix build_laplacian(const LatticeCube& cube) {
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * cube.dimension() * cube.volume());
  add_hoppings(cube, triplets);
  Eigen::SparseMatrix<double> m(cube.volume(), cube.volume());
  m.setFromTriplets(triplets.begin(), triplets.end());
  return HamiltonianMatrix{cube, std::move(m)};
}

HamiltonianMatrix assemble(const LatticeCube& cube, const PotentialField& field) {
  if (!field.parent.contains_cube(cube))
    throw std::invalid_argument("cube exceeds the potential field's parent extent");
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve((2 * cube.dimension() + 1) * cube.volume());
  add_hoppings(cube, triplets);
  for (long i = 0; i < cube.volume(); ++i)
    triplets.emplace_back(i, i, field.at_abs(cube.site_abs(i)));
  Eigen::SparseMatrix<double> m(cube.volume(), cube.volume());
  m.setFromTriplets(triplets.begin(), triplets.end());
  return HamiltonianMatrix{cube, std::move(m)};
}

HamiltonianMatrix subcube(const PotentialField& field, std::vector<long> origin,
                          long side, Boundary boundary) {
  LatticeCube cube(field.parent.dimension(), side, boundary, std::move(origin));
  if (!field.parent.contains_cube(cube))
    throw std::invalid_argument("sub-cube origin/side outside the parent field");
  return assemble(cube, field);
}

}  // namespace anderson
