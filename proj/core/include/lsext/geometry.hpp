#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "lsext/bit_matrix.hpp"
#include "lsext/code.hpp"
#include "lsext/field.hpp"

// The PG(k-1,q) view of a code: generator columns become points, messages
// become hyperplane normals, and the weight of v*G equals n minus the number
// of points (with multiplicity) on the hyperplane with normal v.

namespace lsext {

/// A point of PG(k-1,q) in canonical coordinates.
struct ProjectivePoint {
  KVector coords;

  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// The hyperplane {x : <normal, x> = 0}; normal is canonical.
struct Hyperplane {
  KVector normal;

  bool contains(const ProjectivePoint& p, const FieldSpec& f) const {
    return inner_product(normal, p.coords, f).code == 0;
  }
};

/// Multiset of points keyed by canonical coordinates (so iteration follows
/// canonical order).
struct PointMultiset {
  FieldSpec field;
  unsigned k = 0;
  std::map<KVector, std::size_t> multiplicity;

  std::size_t total() const;
  std::size_t count(const KVector& point) const {
    auto it = multiplicity.find(point);
    return it == multiplicity.end() ? 0 : it->second;
  }
  bool is_set() const;
};

/// Rows are hyperplanes and columns are points, both in canonical order.
/// A bit is set when the point lies on the hyperplane.
struct IncidenceMatrix {
  FieldSpec field;
  unsigned k = 0;
  BitMatrix bits;
};

/// Throws DegenerateCodeError when the code has an all-zero column.
PointMultiset code_points(const LinearCode& code);

/// Throws ResourceLimitError when the matrix would be too large.
IncidenceMatrix incidence_matrix(const FieldSpec& field, unsigned k);

/// Number of points of P (with multiplicity) on the hyperplane.
std::size_t intersection_number(const PointMultiset& points, const Hyperplane& plane);

/// Whether adding the chosen points to P raises the minimum distance above d:
/// every hyperplane through all chosen points must meet P in fewer than n-d
/// points. Agrees with the covering criterion on the intersection matrix.
bool points_extend_code(const PointMultiset& points, std::span<const ProjectivePoint> chosen,
                        std::size_t n, std::size_t d);

/// The stronger condition that every hyperplane through at least one chosen
/// point meets P in fewer than n-d points. Sufficient for points_extend_code,
/// and equivalent to it for a single chosen point.
bool hyperplanes_through_any_are_light(const PointMultiset& points,
                                       std::span<const ProjectivePoint> chosen, std::size_t n,
                                       std::size_t d);

}  // namespace lsext
