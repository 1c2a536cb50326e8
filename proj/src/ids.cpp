#include "anderson/ids.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anderson/eigensolve.hpp"
#include "anderson/hamiltonian.hpp"
#include "anderson/parallel.hpp"

namespace anderson {

IdsModel::IdsModel(std::vector<double> knots, std::vector<double> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
  if (knots_.size() != values_.size() || knots_.size() < 2)
    throw std::invalid_argument("IDS model needs >= 2 aligned knots and values");
  for (size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i - 1] < knots_[i]))
      throw std::invalid_argument("IDS knots must be strictly increasing");
    if (values_[i - 1] > values_[i])
      throw std::invalid_argument("IDS values must be nondecreasing");
  }
  for (double v : values_)
    if (v < 0.0 || v > 1.0) throw std::invalid_argument("IDS values must lie in [0,1]");
}

IdsModel IdsModel::from_samples(std::vector<double> pooled, long max_knots) {
  if (pooled.size() < 2) throw std::invalid_argument("need >= 2 pooled eigenvalues");
  std::sort(pooled.begin(), pooled.end());
  const long n = static_cast<long>(pooled.size());

  // Plotting-position CDF anchored at 0 and 1 on the extreme order
  // statistics, thinned to at most max_knots knots.
  std::vector<double> knots, values;
  const long stride = std::max<long>(1, (n + max_knots - 1) / max_knots);
  for (long i = 0; i < n; i += stride) {
    knots.push_back(pooled[i]);
    values.push_back(static_cast<double>(i) / (n - 1));
  }
  if (knots.back() != pooled[n - 1]) {
    knots.push_back(pooled[n - 1]);
    values.push_back(1.0);
  } else {
    values.back() = 1.0;
  }
  // Collapse ties in the energy grid (keep the largest CDF value).
  std::vector<double> k2, v2;
  for (size_t i = 0; i < knots.size(); ++i) {
    if (!k2.empty() && knots[i] == k2.back())
      v2.back() = values[i];
    else {
      k2.push_back(knots[i]);
      v2.push_back(values[i]);
    }
  }
  if (k2.size() < 2) {  // fully degenerate sample
    k2 = {knots.front(), knots.front() + 1.0};
    v2 = {0.0, 1.0};
  }
  IdsModel model(std::move(k2), std::move(v2));
  model.weak = n < 100;
  return model;
}

double IdsModel::evaluate(double energy) const {
  if (energy <= knots_.front()) return energy < knots_.front() ? 0.0 : values_.front();
  if (energy >= knots_.back()) return energy > knots_.back() ? 1.0 : values_.back();
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), energy);
  const size_t i = static_cast<size_t>(it - knots_.begin());
  const double t = (energy - knots_[i - 1]) / (knots_[i] - knots_[i - 1]);
  return values_[i - 1] + t * (values_[i] - values_[i - 1]);
}

double IdsModel::inverse(double y) const {
  if (y < 0.0 || y > 1.0) throw std::invalid_argument("inverse argument must be in [0,1]");
  if (y <= values_.front()) return knots_.front();
  if (y > values_.back()) return knots_.back();
  const auto it = std::lower_bound(values_.begin(), values_.end(), y);
  const size_t i = static_cast<size_t>(it - values_.begin());
  const double dv = values_[i] - values_[i - 1];
  if (dv == 0.0) return knots_[i];
  const double t = (y - values_[i - 1]) / dv;
  return knots_[i - 1] + t * (knots_[i] - knots_[i - 1]);
}

double IdsModel::grid_resolution() const {
  return (knots_.back() - knots_.front()) / static_cast<double>(knots_.size() - 1);
}

double IdsModel::default_bandwidth() const {
  return 4.0 * (knots_.back() - knots_.front()) / static_cast<double>(knots_.size());
}

double IdsModel::density(double energy, double bandwidth) const {
  if (!(bandwidth > 0)) throw std::invalid_argument("bandwidth must be > 0");
  if (bandwidth < grid_resolution())
    throw std::invalid_argument("bandwidth below the IDS grid resolution");
  const double q = (evaluate(energy + bandwidth) - evaluate(energy - bandwidth)) /
                   (2.0 * bandwidth);
  return std::max(0.0, q);
}

Interval IdsModel::mass_window(double energy, double target) const {
  const double mid = evaluate(energy);
  const double lo = std::max(0.0, mid - 0.5 * target);
  const double hi = std::min(1.0, mid + 0.5 * target);
  return Interval(inverse(lo), inverse(hi));
}

IdsModel estimate_ids(int dimension, long box_side, Boundary boundary,
                      const DisorderConfig& base, int realizations, int workers) {
  if (realizations < 1) throw std::invalid_argument("need at least one realization");
  const LatticeCube box(dimension, box_side, boundary);
  std::vector<std::vector<double>> per_run(realizations);
  parallel_for_index(realizations, workers, [&](long r) {
    const auto field = sample_potential(box, base.with_realization(static_cast<std::uint64_t>(r)));
    per_run[r] = full_spectrum(assemble(box, field), false).eigenvalues;
  });
  std::vector<double> pooled;
  pooled.reserve(static_cast<size_t>(realizations) * static_cast<size_t>(box.volume()));
  for (auto& run : per_run) pooled.insert(pooled.end(), run.begin(), run.end());

  IdsModel model = IdsModel::from_samples(std::move(pooled));
  model.ensemble_size = realizations;
  model.box_side = box_side;
  model.dimension = dimension;
  model.disorder_digest = base.digest();
  return model;
}

}  // namespace anderson
