#include "lsext/geometry.hpp"

#include <algorithm>
#include <string>

#include "lsext/errors.hpp"
#include "lsext/limits.hpp"

namespace lsext {
namespace {

template <typename Pred>
bool light_hyperplanes(const PointMultiset& points, std::span<const ProjectivePoint> chosen,
                       std::size_t n, std::size_t d, Pred selects) {
  if (chosen.empty()) throw ArgumentError("no points chosen");
  if (d > n) throw ArgumentError("distance exceeds length");
  const auto& f = points.field;
  for (const auto& p : chosen) {
    if (p.coords.size() != points.k) throw ShapeError("chosen point has the wrong dimension");
  }
  const auto h = projective_count(f.q(), points.k);
  check_enumeration_cap(h, "hyperplane scan");
  CanonicalCursor cursor(f, points.k, 0);
  do {
    const Hyperplane plane{cursor.current()};
    if (selects(plane) && intersection_number(points, plane) >= n - d) return false;
  } while (cursor.advance());
  return true;
}

}  // namespace

std::size_t PointMultiset::total() const {
  std::size_t sum = 0;
  for (const auto& [p, m] : multiplicity) sum += m;
  return sum;
}

bool PointMultiset::is_set() const {
  return std::all_of(multiplicity.begin(), multiplicity.end(),
                     [](const auto& kv) { return kv.second == 1; });
}

PointMultiset code_points(const LinearCode& code) {
  if (code.degenerate()) {
    throw DegenerateCodeError("code " + code.parameters() +
                              " has an all-zero column and no point-multiset view");
  }
  PointMultiset points{code.field(), code.k(), {}};
  for (std::size_t j = 0; j < code.n(); ++j) {
    ++points.multiplicity[normalize(code.generator().column(j), code.field())];
  }
  return points;
}

IncidenceMatrix incidence_matrix(const FieldSpec& field, unsigned k) {
  const auto h = projective_count(field.q(), k);
  check_enumeration_cap(h, "incidence matrix");
  if (h > kIncidenceCellCap / h) {
    throw ResourceLimitError("incidence matrix of side " + std::to_string(h) + " exceeds " +
                             std::to_string(kIncidenceCellCap) + " cells");
  }
  const auto reps = canonical_representatives(field, k);
  IncidenceMatrix m{field, k, BitMatrix(h, h)};
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < h; ++c) {
      if (inner_product(reps[r], reps[c], field).code == 0) m.bits.set(r, c);
    }
  }
  return m;
}

std::size_t intersection_number(const PointMultiset& points, const Hyperplane& plane) {
  std::size_t total = 0;
  for (const auto& [coords, mult] : points.multiplicity) {
    if (inner_product(plane.normal, coords, points.field).code == 0) total += mult;
  }
  return total;
}

bool points_extend_code(const PointMultiset& points, std::span<const ProjectivePoint> chosen,
                        std::size_t n, std::size_t d) {
  return light_hyperplanes(points, chosen, n, d, [&](const Hyperplane& plane) {
    return std::all_of(chosen.begin(), chosen.end(),
                       [&](const ProjectivePoint& p) { return plane.contains(p, points.field); });
  });
}

bool hyperplanes_through_any_are_light(const PointMultiset& points,
                                       std::span<const ProjectivePoint> chosen, std::size_t n,
                                       std::size_t d) {
  return light_hyperplanes(points, chosen, n, d, [&](const Hyperplane& plane) {
    return std::any_of(chosen.begin(), chosen.end(),
                       [&](const ProjectivePoint& p) { return plane.contains(p, points.field); });
  });
}

}  // namespace lsext
