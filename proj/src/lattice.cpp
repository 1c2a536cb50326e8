#include "anderson/lattice.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace anderson {

std::string to_string(Boundary b) {
  return b == Boundary::Periodic ? "periodic" : "dirichlet";
}

Boundary boundary_from_string(const std::string& name) {
  if (name == "periodic") return Boundary::Periodic;
  if (name == "dirichlet") return Boundary::Dirichlet;
  throw std::invalid_argument("unknown boundary condition: " + name);
}

LatticeCube::LatticeCube(int dimension, long side, Boundary boundary,
                         std::vector<long> origin)
    : dimension_(dimension), side_(side), boundary_(boundary), origin_(std::move(origin)) {
  if (dimension_ < 1) throw std::invalid_argument("lattice dimension must be >= 1");
  if (side_ < 1) throw std::invalid_argument("cube side must be >= 1");
  if (boundary_ == Boundary::Periodic && side_ < 3)
    throw std::invalid_argument(
        "periodic boundary requires side >= 3 (shorter rings create doubled edges)");
  if (origin_.empty()) origin_.assign(dimension_, 0);
  if (static_cast<int>(origin_.size()) != dimension_)
    throw std::invalid_argument("origin length must equal the lattice dimension");

  volume_ = 1;
  for (int a = 0; a < dimension_; ++a) {
    if (volume_ > std::numeric_limits<long>::max() / side_)
      throw std::invalid_argument("cube volume overflows");
    volume_ *= side_;
  }
}

std::vector<long> LatticeCube::site(long index) const {
  if (index < 0 || index >= volume_) throw std::out_of_range("site index out of range");
  std::vector<long> rel(dimension_);
  for (int a = dimension_ - 1; a >= 0; --a) {
    rel[a] = index % side_;
    index /= side_;
  }
  return rel;
}

long LatticeCube::index(std::span<const long> rel) const {
  if (static_cast<int>(rel.size()) != dimension_)
    throw std::invalid_argument("coordinate length must equal the lattice dimension");
  long idx = 0;
  for (int a = 0; a < dimension_; ++a) {
    if (rel[a] < 0 || rel[a] >= side_) throw std::out_of_range("coordinate outside cube");
    idx = idx * side_ + rel[a];
  }
  return idx;
}

std::vector<long> LatticeCube::site_abs(long index) const {
  auto rel = site(index);
  for (int a = 0; a < dimension_; ++a) rel[a] += origin_[a];
  return rel;
}

bool LatticeCube::contains_abs(std::span<const long> abs) const {
  if (static_cast<int>(abs.size()) != dimension_) return false;
  for (int a = 0; a < dimension_; ++a) {
    const long rel = abs[a] - origin_[a];
    if (rel < 0 || rel >= side_) return false;
  }
  return true;
}

bool LatticeCube::contains_cube(const LatticeCube& inner) const {
  if (inner.dimension() != dimension_) return false;
  for (int a = 0; a < dimension_; ++a) {
    const long lo = inner.origin()[a] - origin_[a];
    if (lo < 0 || lo + inner.side() > side_) return false;
  }
  return true;
}

double LatticeCube::distance(std::span<const long> a, std::span<const long> b) const {
  double sq = 0.0;
  for (int ax = 0; ax < dimension_; ++ax) {
    double dx = std::abs(static_cast<double>(a[ax] - b[ax]));
    if (boundary_ == Boundary::Periodic) dx = std::min(dx, static_cast<double>(side_) - dx);
    sq += dx * dx;
  }
  return std::sqrt(sq);
}

}  // namespace anderson
