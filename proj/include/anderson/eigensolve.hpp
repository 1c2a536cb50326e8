#pragma once

#include <Eigen/Dense>
#include <vector>

#include "anderson/hamiltonian.hpp"
#include "anderson/interval.hpp"

namespace anderson {

inline constexpr long kDimensionCap = 8192;

// Full spectrum of one Hamiltonian: eigenvalues sorted ascending with
// multiplicity, optional orthonormal eigenvectors as aligned columns.
struct SpectralData {
  LatticeCube cube;
  std::vector<double> eigenvalues;
  Eigen::MatrixXd eigenvectors;       // n x k, empty when not requested
  std::vector<long> global_indices;   // position in the full sorted spectrum

  bool has_vectors() const { return eigenvectors.size() > 0; }
  long count() const { return static_cast<long>(eigenvalues.size()); }
};

// Dense symmetric diagonalization (Householder reduction + divide and
// conquer via LAPACK dsyevd). Refuses matrices above kDimensionCap.
SpectralData full_spectrum(const HamiltonianMatrix& h, bool want_vectors);

// Eigenpairs with eigenvalue in I, order and global indices preserved.
SpectralData window(const SpectralData& spec, const Interval& I);

}  // namespace anderson
