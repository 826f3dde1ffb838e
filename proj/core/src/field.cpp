#include "lsext/field.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "lsext/errors.hpp"
#include "lsext/limits.hpp"

namespace lsext {
namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Coefficients of a code in base p, lowest degree first.
std::vector<unsigned> to_poly(unsigned code, unsigned p, unsigned e) {
  std::vector<unsigned> c(e, 0);
  for (unsigned i = 0; i < e; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

unsigned from_poly(const std::vector<unsigned>& c, unsigned p) {
  unsigned code = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) code = code * p + *it;
  return code;
}

// Product of two residues modulo a monic polynomial of degree e over GF(p).
unsigned poly_mul_mod(unsigned a, unsigned b, unsigned p, unsigned e,
                      const std::vector<unsigned>& modulus) {
  const auto pa = to_poly(a, p, e);
  const auto pb = to_poly(b, p, e);
  std::vector<unsigned> prod(2 * e, 0);
  for (unsigned i = 0; i < e; ++i) {
    for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
  }
  for (unsigned deg = 2 * e - 1; deg >= e; --deg) {
    const unsigned lead = prod[deg];
    if (lead == 0) continue;
    // subtract lead * x^(deg-e) * modulus
    for (unsigned i = 0; i <= e; ++i) {
      const unsigned sub = (lead * modulus[i]) % p;
      prod[deg - e + i] = (prod[deg - e + i] + p - sub) % p;
    }
  }
  prod.resize(e);
  return from_poly(prod, p);
}

}  // namespace

FieldSpec::FieldSpec(unsigned q) {
  auto t = std::make_shared<Tables>();
  t->q = q;
  if (is_prime(q) && q < 256) {
    t->p = q;
    t->e = 1;
  } else if (q == 4) {
    t->p = 2;
    t->e = 2;
    t->modulus = {1, 1, 1};
  } else if (q == 8) {
    t->p = 2;
    t->e = 3;
    t->modulus = {1, 1, 0, 1};
  } else if (q == 9) {
    t->p = 3;
    t->e = 2;
    t->modulus = {1, 0, 1};
  } else {
    throw EncodingError("unsupported field order q=" + std::to_string(q) +
                        " (primes below 256 and q in {4, 8, 9} are supported)");
  }

  const unsigned p = t->p;
  const unsigned e = t->e;
  t->add.resize(q * q);
  t->mul.resize(q * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const auto pa = to_poly(a, p, e);
    for (unsigned b = 0; b < q; ++b) {
      const auto pb = to_poly(b, p, e);
      std::vector<unsigned> sum(e);
      for (unsigned i = 0; i < e; ++i) sum[i] = (pa[i] + pb[i]) % p;
      t->add[a * q + b] = static_cast<std::uint8_t>(from_poly(sum, p));
      const unsigned prod = e == 1 ? (a * b) % p : poly_mul_mod(a, b, p, e, t->modulus);
      t->mul[a * q + b] = static_cast<std::uint8_t>(prod);
    }
  }
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      if (t->add[a * q + b] == 0) t->neg[a] = static_cast<std::uint8_t>(b);
      if (t->mul[a * q + b] == 1) t->inv[a] = static_cast<std::uint8_t>(b);
    }
  }
  tables_ = std::move(t);
}

void FieldSpec::check(Element a) const {
  if (!contains(a)) {
    throw EncodingError("element code " + std::to_string(a.code) + " out of range for GF(" +
                        std::to_string(q()) + ")");
  }
}

Element FieldSpec::element(unsigned code) const {
  if (code >= q()) {
    throw EncodingError("element code " + std::to_string(code) + " out of range for GF(" +
                        std::to_string(q()) + ")");
  }
  return Element{static_cast<std::uint8_t>(code)};
}

Element FieldSpec::add(Element a, Element b) const {
  check(a);
  check(b);
  return Element{tables_->add[a.code * q() + b.code]};
}

Element FieldSpec::sub(Element a, Element b) const { return add(a, neg(b)); }

Element FieldSpec::neg(Element a) const {
  check(a);
  return Element{tables_->neg[a.code]};
}

Element FieldSpec::mul(Element a, Element b) const {
  check(a);
  check(b);
  return Element{tables_->mul[a.code * q() + b.code]};
}

Element FieldSpec::inv(Element a) const {
  check(a);
  if (a.code == 0) throw DivisionByZeroError("inverse of zero in GF(" + std::to_string(q()) + ")");
  return Element{tables_->inv[a.code]};
}

Element inner_product(std::span<const Element> a, std::span<const Element> b, const FieldSpec& f) {
  if (a.size() != b.size()) {
    throw ShapeError("inner product of vectors of length " + std::to_string(a.size()) + " and " +
                     std::to_string(b.size()));
  }
  Element acc = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

std::uint64_t projective_count(unsigned q, unsigned k) {
  std::uint64_t power = 1;
  std::uint64_t count = 0;
  for (unsigned i = 0; i < k; ++i) {
    count += power;
    if (power > std::numeric_limits<std::uint64_t>::max() / q) {
      throw ResourceLimitError("(q^k-1)/(q-1) overflows for q=" + std::to_string(q) +
                               ", k=" + std::to_string(k));
    }
    power *= q;
  }
  return count;
}

bool is_canonical(std::span<const Element> v) {
  for (auto x : v) {
    if (x.code != 0) return x.code == 1;
  }
  return false;
}

KVector normalize(std::span<const Element> v, const FieldSpec& f) {
  auto lead = std::find_if(v.begin(), v.end(), [](Element x) { return x.code != 0; });
  if (lead == v.end()) throw ArgumentError("cannot normalize the zero vector");
  const Element scale = f.inv(*lead);
  KVector out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [&](Element x) { return f.mul(x, scale); });
  return out;
}

std::vector<KVector> canonical_representatives(const FieldSpec& f, unsigned k) {
  if (k == 0) throw ArgumentError("dimension k must be at least 1");
  const auto h = projective_count(f.q(), k);
  check_enumeration_cap(h, "canonical representatives");
  std::vector<KVector> reps;
  reps.reserve(h);
  CanonicalCursor cursor(f, k, 0);
  do {
    reps.push_back(cursor.current());
  } while (cursor.advance());
  return reps;
}

KVector canonical_at(const FieldSpec& f, unsigned k, std::uint64_t index) {
  if (k == 0) throw ArgumentError("dimension k must be at least 1");
  const unsigned q = f.q();
  std::uint64_t offset = 0;
  std::uint64_t block = 1;
  // The block of vectors whose leading 1 sits at position k-1-m has q^m members.
  for (unsigned m = 0; m < k; ++m) {
    if (index < offset + block) {
      KVector v(k);
      const unsigned lead = k - 1 - m;
      v[lead] = Element{1};
      std::uint64_t tail = index - offset;
      for (unsigned pos = k - 1; pos > lead; --pos) {
        v[pos] = Element{static_cast<std::uint8_t>(tail % q)};
        tail /= q;
      }
      return v;
    }
    offset += block;
    block *= q;
  }
  throw ArgumentError("canonical index " + std::to_string(index) + " out of range for q=" +
                      std::to_string(q) + ", k=" + std::to_string(k));
}

std::uint64_t canonical_index(const FieldSpec& f, std::span<const Element> v) {
  if (!is_canonical(v)) throw ArgumentError("vector is not in canonical form");
  const unsigned q = f.q();
  const std::size_t k = v.size();
  std::size_t lead = 0;
  while (v[lead].code == 0) ++lead;
  const std::size_t m = k - 1 - lead;
  std::uint64_t offset = 0;
  std::uint64_t block = 1;
  for (std::size_t i = 0; i < m; ++i) {
    offset += block;
    block *= q;
  }
  std::uint64_t tail = 0;
  for (std::size_t pos = lead + 1; pos < k; ++pos) {
    if (v[pos].code >= q) throw EncodingError("element code out of range");
    tail = tail * q + v[pos].code;
  }
  return offset + tail;
}

CanonicalCursor::CanonicalCursor(const FieldSpec& f, unsigned k, std::uint64_t start)
    : q_(f.q()), k_(k), index_(start), end_(projective_count(f.q(), k)) {
  v_ = canonical_at(f, k, start);
  lead_ = 0;
  while (v_[lead_].code == 0) ++lead_;
}

bool CanonicalCursor::advance() {
  if (index_ + 1 >= end_) return false;
  ++index_;
  for (unsigned pos = k_ - 1; pos > lead_; --pos) {
    if (v_[pos].code + 1u < q_) {
      ++v_[pos].code;
      first_changed_ = pos;
      return true;
    }
    v_[pos].code = 0;
  }
  // Tail wrapped around: the leading 1 moves one position to the left.
  v_[lead_].code = 0;
  --lead_;
  v_[lead_].code = 1;
  first_changed_ = lead_;
  return true;
}

}  // namespace lsext
