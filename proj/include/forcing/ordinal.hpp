#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace forcing {

struct CnfTerm {
  std::uint64_t exponent = 0;
  std::uint64_t coefficient = 0;

  friend auto operator<=>(const CnfTerm&, const CnfTerm&) = default;
};

// An ordinal below w^w in Cantor normal form: a finite sum of terms
// w^e * c with c > 0 and exponents strictly decreasing. The empty sum is 0.
// Lexicographic comparison of the term lists is the ordinal order.
class Ordinal {
 public:
  Ordinal() = default;
  explicit Ordinal(std::uint64_t n);

  // Validates the CNF invariants; throws Error("not-cnf").
  static Ordinal from_terms(std::vector<CnfTerm> terms);
  static Ordinal omega_power(std::uint64_t exponent, std::uint64_t coefficient = 1);
  static Ordinal omega() { return omega_power(1); }

  // Text form "w^2*3 + w*1 + 4". The parser also accepts "w", "w^2" and
  // "w*5" shorthands; terms must be strictly descending.
  // Throws Error("bad-ordinal-syntax") or Error("not-cnf").
  static Ordinal parse(std::string_view text);
  std::string str() const;

  const std::vector<CnfTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const noexcept;
  bool is_successor() const noexcept;
  bool is_limit() const noexcept { return !is_zero() && !is_successor(); }

  // Value of a finite ordinal; throws Error("not-finite").
  std::uint64_t finite_value() const;
  // Exponent of the leading term; throws Error("zero-ordinal") on 0.
  std::uint64_t leading_exponent() const;
  // Predecessor of a successor ordinal; throws Error("not-successor").
  Ordinal predecessor() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    return a.terms_ <=> b.terms_;
  }
  friend bool operator==(const Ordinal&, const Ordinal&) = default;

 private:
  std::vector<CnfTerm> terms_;
};

// Ordinal sum; not commutative (1 + w = w, w + 1 > w).
Ordinal ord_add(const Ordinal& a, const Ordinal& b);
// Ordinal product, left factor repeated right-factor times.
Ordinal ord_mul(const Ordinal& a, const Ordinal& b);
// The unique o with a + o = b, i.e. the order type of [a, b).
// Throws Error("not-ordered") when a > b.
Ordinal interval_type(const Ordinal& a, const Ordinal& b);

struct DivMod {
  Ordinal quotient;
  Ordinal remainder;
};
// Left division: n = d * quotient + remainder with remainder < d.
// Throws Error("division-by-zero").
DivMod ord_divmod(const Ordinal& n, const Ordinal& d);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return ord_add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return ord_mul(a, b); }

// The set {start + step * j : j < count}. Finite sets of ordinals are
// progressions with count 1; {n : n < w} is (0, 1, w).
struct OrdinalProgression {
  Ordinal start;
  Ordinal step;
  Ordinal count;

  static OrdinalProgression single(const Ordinal& o) { return {o, Ordinal(), Ordinal(1)}; }
  bool empty() const noexcept { return count.is_zero(); }
  std::optional<Ordinal> max() const;
  // Least ordinal not below every element when no maximum exists.
  Ordinal limit() const;
  Ordinal at(const Ordinal& j) const;
};

// Strong supremum: least ordinal strictly greater than every element.
// Throws Error("undefined-ssup-of-empty").
Ordinal ssup(std::span<const Ordinal> ys);
Ordinal ssup(std::span<const OrdinalProgression> ys);
// Union (plain supremum) of the same families; 0 for the empty family.
Ordinal sup(std::span<const OrdinalProgression> ys);

// Canonical bijection between {o : o < bound} and N for w <= bound < w^w.
// [0, bound) splits into the infinite blocks w^e contributed by each CNF
// term with e >= 1 plus a finite tail. Tail points take the first naturals;
// the remaining naturals are dealt round-robin across the blocks, and inside
// a block of type w^e the e coordinates are packed by iterated Cantor
// pairing. For bound = w the bijection is the identity.
class OmegaBijection {
 public:
  // Throws Error("finite-ordinal-no-omega-bijection").
  explicit OmegaBijection(Ordinal bound);

  const Ordinal& bound() const noexcept { return bound_; }
  // Throws Error("out-of-domain") when o >= bound.
  std::uint64_t forward(const Ordinal& o) const;
  Ordinal backward(std::uint64_t n) const;

 private:
  struct Run {
    std::uint64_t exponent;
    std::uint64_t count;
    Ordinal start;
    std::uint64_t first_block;
  };

  Ordinal bound_;
  std::vector<Run> runs_;
  std::uint64_t blocks_ = 0;
  std::uint64_t tail_ = 0;
  Ordinal tail_start_;
};

OmegaBijection omega_bijection(const Ordinal& bound);

}  // namespace forcing
