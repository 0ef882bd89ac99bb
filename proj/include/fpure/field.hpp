#pragma once

#include <cstdint>
#include <ostream>

namespace fpure {

/// Residue class in F_p, always stored reduced into [0, p).
struct FieldElem {
  std::uint32_t residue = 0;

  friend bool operator==(FieldElem, FieldElem) = default;
  bool is_zero() const noexcept { return residue == 0; }
};

inline std::ostream& operator<<(std::ostream& os, FieldElem a) { return os << a.residue; }

/// The prime field F_p for p < 2^31. Products are formed in 64 bits and reduced.
class PrimeField {
 public:
  /// Throws InputError unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  FieldElem make(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return FieldElem{static_cast<std::uint32_t>(r)};
  }
  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1 % p_}; }

  FieldElem add(FieldElem a, FieldElem b) const noexcept {
    std::uint64_t s = std::uint64_t{a.residue} + b.residue;
    return {static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  FieldElem sub(FieldElem a, FieldElem b) const noexcept {
    return {a.residue >= b.residue ? a.residue - b.residue : a.residue + (p_ - b.residue)};
  }
  FieldElem neg(FieldElem a) const noexcept { return {a.residue == 0 ? 0 : p_ - a.residue}; }
  FieldElem mul(FieldElem a, FieldElem b) const noexcept {
    return {static_cast<std::uint32_t>(std::uint64_t{a.residue} * b.residue % p_)};
  }
  FieldElem pow(FieldElem a, std::uint64_t k) const noexcept;

  /// Multiplicative inverse; throws MathError("division by zero in F_p") on zero.
  FieldElem inv(FieldElem a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// C(n, k) mod p via Lucas: product of digit binomials in base p.
FieldElem lucas_binomial(std::uint64_t n, std::uint64_t k, std::uint32_t p);
FieldElem lucas_binomial(std::uint64_t n, std::uint64_t k, const PrimeField& field);

}  // namespace fpure
