#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace lsext {

/// One element of GF(q), stored as its integer code 0..q-1. For extension
/// fields the code is read in base p as polynomial coefficients, lowest
/// degree first (so in GF(4) the code 2 is x and 3 is x+1).
struct Element {
  std::uint8_t code = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

/// A vector over GF(q). Ordering is lexicographic on element codes.
using KVector = std::vector<Element>;

/// GF(q) for every prime q < 256 and the prime powers 4, 8 and 9.
///
/// The extension fields use fixed moduli: x^2+x+1 for GF(4), x^3+x+1 for
/// GF(8) and x^2+1 for GF(9). All arithmetic goes through tables built once
/// at construction; copies share the tables and are safe to read from any
/// thread.
class FieldSpec {
 public:
  explicit FieldSpec(unsigned q);

  unsigned p() const noexcept { return tables_->p; }
  unsigned e() const noexcept { return tables_->e; }
  unsigned q() const noexcept { return tables_->q; }
  /// Monic modulus coefficients, lowest degree first; empty for prime fields.
  const std::vector<unsigned>& modulus() const noexcept { return tables_->modulus; }

  Element zero() const noexcept { return Element{0}; }
  Element one() const noexcept { return Element{1}; }
  /// Validated conversion from an integer code.
  Element element(unsigned code) const;
  bool contains(Element a) const noexcept { return a.code < q(); }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;

  /// Raw q*q tables indexed by a*q+b; inputs are assumed valid.
  std::span<const std::uint8_t> add_table() const noexcept { return tables_->add; }
  std::span<const std::uint8_t> mul_table() const noexcept { return tables_->mul; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.q() == b.q();
  }

 private:
  struct Tables {
    unsigned p = 0;
    unsigned e = 0;
    unsigned q = 0;
    std::vector<unsigned> modulus;
    std::vector<std::uint8_t> add;
    std::vector<std::uint8_t> mul;
    std::vector<std::uint8_t> neg;
    std::vector<std::uint8_t> inv;
  };

  void check(Element a) const;

  std::shared_ptr<const Tables> tables_;
};

// Free-function spelling of the field operations.
inline Element add(Element a, Element b, const FieldSpec& f) { return f.add(a, b); }
inline Element mul(Element a, Element b, const FieldSpec& f) { return f.mul(a, b); }
inline Element inv(Element a, const FieldSpec& f) { return f.inv(a); }

/// Sum of a[i]*b[i]; throws ShapeError on a length mismatch.
Element inner_product(std::span<const Element> a, std::span<const Element> b, const FieldSpec& f);

/// Number of one-dimensional subspaces of GF(q)^k, (q^k-1)/(q-1).
/// Throws ResourceLimitError if the value does not fit in 64 bits.
std::uint64_t projective_count(unsigned q, unsigned k);

/// True when v is nonzero and its first nonzero entry is 1.
bool is_canonical(std::span<const Element> v);

/// The scalar multiple of v whose first nonzero entry is 1. Throws
/// ArgumentError for the zero vector.
KVector normalize(std::span<const Element> v, const FieldSpec& f);

/// Every canonical representative of GF(q)^k in lexicographic order.
/// Position i of this list is the canonical index used throughout the
/// library for columns, points and hyperplanes.
std::vector<KVector> canonical_representatives(const FieldSpec& f, unsigned k);

/// The representative at a canonical index, without materializing the list.
KVector canonical_at(const FieldSpec& f, unsigned k, std::uint64_t index);

/// Inverse of canonical_at; v must be canonical.
std::uint64_t canonical_index(const FieldSpec& f, std::span<const Element> v);

/// Walks canonical representatives in order starting at a given index.
/// After each step, first_changed() is the lowest coordinate that differs
/// from the previous vector, which lets callers reuse partial products.
class CanonicalCursor {
 public:
  CanonicalCursor(const FieldSpec& f, unsigned k, std::uint64_t start);

  const KVector& current() const noexcept { return v_; }
  std::uint64_t index() const noexcept { return index_; }
  unsigned first_changed() const noexcept { return first_changed_; }
  /// Moves to the next representative; false once past the last one.
  bool advance();

 private:
  unsigned q_;
  unsigned k_;
  std::uint64_t index_;
  std::uint64_t end_;
  unsigned lead_;
  unsigned first_changed_ = 0;
  KVector v_;
};

}  // namespace lsext
