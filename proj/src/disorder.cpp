#include "anderson/disorder.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace anderson {

std::string to_string(Distribution d) {
  return d == Distribution::Uniform ? "uniform" : "smooth_bump";
}

Distribution distribution_from_string(const std::string& name) {
  if (name == "uniform") return Distribution::Uniform;
  if (name == "smooth_bump") return Distribution::SmoothBump;
  throw std::invalid_argument("unknown distribution: " + name);
}

void DisorderConfig::validate() const {
  if (distribution == Distribution::Uniform && !(lo < hi))
    throw std::invalid_argument("uniform distribution requires lo < hi");
  if (distribution == Distribution::SmoothBump && !(halfwidth > 0))
    throw std::invalid_argument("smooth bump requires halfwidth > 0");
  if (!(coupling >= 0)) throw std::invalid_argument("coupling must be >= 0");
}

std::string DisorderConfig::digest() const {
  std::ostringstream os;
  os << to_string(distribution) << '|';
  if (distribution == Distribution::Uniform)
    os << lo << ',' << hi;
  else
    os << center << ',' << halfwidth;
  os << "|lambda=" << coupling << "|seed=" << master_seed;
  // FNV-1a over the canonical text
  std::uint64_t h = 1469598103934665603ull;
  for (char c : os.str()) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t key_chain(std::uint64_t state, std::uint64_t word) {
  return mix64(state ^ (word + 0x9e3779b97f4a7c15ull + (state << 6) + (state >> 2)));
}

double site_uniform(std::uint64_t master_seed, std::uint64_t realization_index,
                    std::span<const long> abs_coord) {
  std::uint64_t state = key_chain(mix64(master_seed), realization_index);
  for (long c : abs_coord) {
    // zigzag so negative coordinates key distinctly
    const auto u = static_cast<std::uint64_t>((c << 1) ^ (c >> (sizeof(long) * 8 - 1)));
    state = key_chain(state, u);
  }
  return static_cast<double>(state >> 11) * 0x1.0p-53;
}

namespace {

// CDF of exp(-1/(1-t^2)) on (-1,1), inverted onto equiprobable nodes.
struct BumpTable {
  static constexpr int kNodes = 4096;
  std::array<double, kNodes> quantile{};

  BumpTable() {
    constexpr int kFine = 1 << 16;
    std::vector<double> t(kFine + 1), cdf(kFine + 1, 0.0);
    auto density = [](double x) {
      const double s = 1.0 - x * x;
      return s > 0 ? std::exp(-1.0 / s) : 0.0;
    };
    for (int i = 0; i <= kFine; ++i) t[i] = -1.0 + 2.0 * i / kFine;
    for (int i = 1; i <= kFine; ++i)
      cdf[i] = cdf[i - 1] + 0.5 * (density(t[i - 1]) + density(t[i])) * (t[i] - t[i - 1]);
    const double total = cdf[kFine];
    for (auto& c : cdf) c /= total;
    int j = 0;
    for (int i = 0; i < kNodes; ++i) {
      const double u = static_cast<double>(i) / (kNodes - 1);
      while (j < kFine && cdf[j + 1] < u) ++j;
      const double du = cdf[j + 1] - cdf[j];
      const double frac = du > 0 ? (u - cdf[j]) / du : 0.0;
      quantile[i] = t[j] + frac * (t[j + 1] - t[j]);
    }
    quantile[0] = -1.0;
    quantile[kNodes - 1] = 1.0;
  }
};

const BumpTable& bump_table() {
  static const BumpTable table;
  return table;
}

}  // namespace

double smooth_bump_quantile(double u) {
  if (u < 0.0 || u > 1.0) throw std::invalid_argument("quantile argument must be in [0,1]");
  const auto& q = bump_table().quantile;
  const double pos = u * (BumpTable::kNodes - 1);
  const int i = std::min(static_cast<int>(pos), BumpTable::kNodes - 2);
  const double frac = pos - i;
  return q[i] + frac * (q[i + 1] - q[i]);
}

double draw_value(const DisorderConfig& cfg, double u) {
  switch (cfg.distribution) {
    case Distribution::Uniform:
      return cfg.lo + u * (cfg.hi - cfg.lo);
    case Distribution::SmoothBump:
      return cfg.center + cfg.halfwidth * smooth_bump_quantile(u);
  }
  throw std::logic_error("unreachable");
}

double PotentialField::at_abs(std::span<const long> abs) const {
  std::vector<long> rel(abs.begin(), abs.end());
  for (int a = 0; a < parent.dimension(); ++a) rel[a] -= parent.origin()[a];
  return values[parent.index(rel)];
}

PotentialField sample_potential(const LatticeCube& parent, const DisorderConfig& cfg) {
  cfg.validate();
  PotentialField field{parent, std::vector<double>(parent.volume())};
  for (long i = 0; i < parent.volume(); ++i) {
    const auto abs = parent.site_abs(i);
    const double u = site_uniform(cfg.master_seed, cfg.realization_index, abs);
    field.values[i] = cfg.coupling * draw_value(cfg, u);
  }
  return field;
}

}  // namespace anderson
