#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "anderson/lattice.hpp"

namespace anderson {

enum class Distribution { Uniform, SmoothBump };

std::string to_string(Distribution d);
Distribution distribution_from_string(const std::string& name);

// On-site disorder: i.i.d. draws scaled by `coupling`. The value at a site is
// a pure function of (master_seed, realization_index, absolute coordinate),
// so ensembles are reproducible under any iteration order or thread count.
struct DisorderConfig {
  Distribution distribution = Distribution::Uniform;
  double lo = -1.0;         // Uniform support
  double hi = 1.0;
  double center = 0.0;      // SmoothBump support midpoint
  double halfwidth = 1.0;   // SmoothBump support half-width
  double coupling = 1.0;    // lambda >= 0
  std::uint64_t master_seed = 0;
  std::uint64_t realization_index = 0;

  void validate() const;

  // Stable content digest; independent of realization_index so one ensemble
  // shares a digest.
  std::string digest() const;

  DisorderConfig with_realization(std::uint64_t index) const {
    DisorderConfig c = *this;
    c.realization_index = index;
    return c;
  }
};

// Counter-based generator: one splitmix64 finalizer chain over the key tuple.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t key_chain(std::uint64_t state, std::uint64_t word);

// Uniform double in [0,1) keyed on (seed, realization, absolute coordinate).
double site_uniform(std::uint64_t master_seed, std::uint64_t realization_index,
                    std::span<const long> abs_coord);

// Inverse CDF of the normalized C^inf bump density exp(-1/(1-t^2)) on (-1,1),
// tabulated on 4096 nodes with linear interpolation.
double smooth_bump_quantile(double u);

// Single draw from the configured distribution (before coupling).
double draw_value(const DisorderConfig& cfg, double u);

// i.i.d. potential values on every site of `parent`, indexed by the parent's
// row-major order so sub-cubes can address the same realization.
struct PotentialField {
  LatticeCube parent;
  std::vector<double> values;

  double at_abs(std::span<const long> abs) const;
  double at_index(long parent_index) const { return values[parent_index]; }
};

PotentialField sample_potential(const LatticeCube& parent, const DisorderConfig& cfg);

}  // namespace anderson
