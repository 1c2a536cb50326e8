#pragma once

#include <string>
#include <vector>

#include "anderson/disorder.hpp"
#include "anderson/interval.hpp"
#include "anderson/lattice.hpp"

namespace anderson {

// Empirical integrated density of states: a monotone piecewise-linear CDF of
// eigenvalues per site, with generalized inverse and smoothed density.
class IdsModel {
 public:
  // Knots strictly increasing, values nondecreasing in [0,1].
  IdsModel(std::vector<double> knots, std::vector<double> values);

  // Pooled empirical CDF of the given eigenvalues (states per site).
  static IdsModel from_samples(std::vector<double> pooled, long max_knots = 20000);

  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& values() const { return values_; }

  // Clamped piecewise-linear N(E): 0 below the grid, 1 above.
  double evaluate(double energy) const;

  // Generalized inverse: smallest E with evaluate(E) >= y.
  double inverse(double y) const;

  // Symmetric difference quotient (N(E+h)-N(E-h))/(2h), floored at 0.
  // h must be at least the grid resolution.
  double density(double energy, double bandwidth) const;

  // Mass N(I) = N(hi) - N(lo).
  double mass(const Interval& I) const { return evaluate(I.hi) - evaluate(I.lo); }

  double grid_resolution() const;
  double default_bandwidth() const;

  // Interval around `energy` holding total IDS mass `target`, found by the
  // generalized inverse on both sides.
  Interval mass_window(double energy, double target) const;

  // Ensemble metadata (0 / empty when the model was built from raw samples).
  int ensemble_size = 0;
  long box_side = 0;
  int dimension = 0;
  std::string disorder_digest;
  bool weak = false;  // fewer than 100 pooled eigenvalues

 private:
  std::vector<double> knots_;
  std::vector<double> values_;
};

// Diagonalizes `realizations` periodic boxes of side `box_side` (realization
// indices 0..R-1 over `base`) and pools all eigenvalues into an IdsModel.
IdsModel estimate_ids(int dimension, long box_side, Boundary boundary,
                      const DisorderConfig& base, int realizations, int workers = 1);

}  // namespace anderson
