#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace anderson {

enum class Boundary { Periodic, Dirichlet };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& name);

// A finite cube of the lattice Z^d: `side` sites per axis, lowest corner at
// `origin`. Sites are enumerated row-major (last axis fastest).
class LatticeCube {
 public:
  LatticeCube(int dimension, long side, Boundary boundary,
              std::vector<long> origin = {});

  int dimension() const { return dimension_; }
  long side() const { return side_; }
  Boundary boundary() const { return boundary_; }
  const std::vector<long>& origin() const { return origin_; }

  long volume() const { return volume_; }

  // Relative coordinates (each in [0, side)) of the site at `index`.
  std::vector<long> site(long index) const;

  // Inverse of site(): row-major index of relative coordinates.
  long index(std::span<const long> rel) const;

  // Absolute coordinates of the site at `index` (origin + relative).
  std::vector<long> site_abs(long index) const;

  bool contains_abs(std::span<const long> abs) const;

  // True if `inner` lies entirely inside this cube (absolute coordinates).
  bool contains_cube(const LatticeCube& inner) const;

  // Distance between two sites given by relative coordinates: torus metric
  // under periodic boundary, Euclidean otherwise.
  double distance(std::span<const long> a, std::span<const long> b) const;

  bool operator==(const LatticeCube& other) const = default;

 private:
  int dimension_;
  long side_;
  Boundary boundary_;
  std::vector<long> origin_;
  long volume_;
};

}  // namespace anderson
