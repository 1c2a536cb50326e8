#pragma once

#include <Eigen/SparseCore>
#include <span>

#include "anderson/disorder.hpp"
#include "anderson/lattice.hpp"

namespace anderson {

// Finite-volume Anderson Hamiltonian H = -Laplacian + V on a lattice cube.
// Hopping entries are +1 between nearest neighbours (so the free spectrum is
// sums of 2 cos terms); the diagonal carries the potential. Some codebases
// use -1 hoppings instead, which reflects the spectrum but leaves every
// statistic in this toolkit unchanged.
struct HamiltonianMatrix {
  LatticeCube cube;
  Eigen::SparseMatrix<double> matrix;

  long dimension() const { return matrix.rows(); }
  double trace() const;
  double frobenius_squared() const;
};

// -Laplacian on `cube`: +1 on nearest-neighbour pairs (wrapping iff periodic),
// zero diagonal.
HamiltonianMatrix build_laplacian(const LatticeCube& cube);

// -Laplacian on `cube` plus the potential restricted to it. The cube must lie
// inside the field's parent.
HamiltonianMatrix assemble(const LatticeCube& cube, const PotentialField& field);

// Hamiltonian on the sub-cube of side `side` at `origin`, reusing the parent
// field's disorder values.
HamiltonianMatrix subcube(const PotentialField& field, std::vector<long> origin,
                          long side, Boundary boundary);

}  // namespace anderson
