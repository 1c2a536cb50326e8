#include "anderson/eigensolve.hpp"

#include <lapacke.h>

#include <stdexcept>
#include <string>

#include "anderson/errors.hpp"

namespace anderson {

SpectralData full_spectrum(const HamiltonianMatrix& h, bool want_vectors) {
  const long n = h.dimension();
  if (n > kDimensionCap)
    throw DimensionCapError("matrix dimension " + std::to_string(n) +
                            " exceeds the cap " + std::to_string(kDimensionCap) +
                            "; reduce the cube side L");
  Eigen::MatrixXd dense(h.matrix);
  std::vector<double> w(n);
  const int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'L',
                                  static_cast<int>(n), dense.data(),
                                  static_cast<int>(n), w.data());
  if (info != 0)
    throw std::runtime_error("dsyevd failed with info=" + std::to_string(info));

  SpectralData spec{h.cube, std::move(w), Eigen::MatrixXd(), {}};
  if (want_vectors) spec.eigenvectors = std::move(dense);
  spec.global_indices.resize(n);
  for (long i = 0; i < n; ++i) spec.global_indices[i] = i;
  return spec;
}

SpectralData window(const SpectralData& spec, const Interval& I) {
  SpectralData out{spec.cube, {}, Eigen::MatrixXd(), {}};
  std::vector<long> cols;
  for (long j = 0; j < spec.count(); ++j) {
    if (I.contains(spec.eigenvalues[j])) {
      out.eigenvalues.push_back(spec.eigenvalues[j]);
      out.global_indices.push_back(spec.global_indices[j]);
      cols.push_back(j);
    }
  }
  if (spec.has_vectors()) {
    out.eigenvectors.resize(spec.eigenvectors.rows(), static_cast<long>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
      out.eigenvectors.col(static_cast<long>(c)) = spec.eigenvectors.col(cols[c]);
  }
  return out;
}

}  // namespace anderson
