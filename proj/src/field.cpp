#include "fpure/field.hpp"

#include <string>

#include "fpure/errors.hpp"

namespace fpure {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (std::uint32_t{1} << 31))
    throw InputError("characteristic " + std::to_string(p) + " exceeds 2^31");
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
}

FieldElem PrimeField::pow(FieldElem a, std::uint64_t k) const noexcept {
  FieldElem r = one();
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

FieldElem PrimeField::inv(FieldElem a) const {
  if (a.is_zero()) throw MathError("division by zero in F_p");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.residue;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  return make(t);
}

FieldElem lucas_binomial(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  return lucas_binomial(n, k, PrimeField(p));
}

FieldElem lucas_binomial(std::uint64_t n, std::uint64_t k, const PrimeField& field) {
  const std::uint32_t p = field.characteristic();
  FieldElem result = field.one();
  while (k > 0 || n > 0) {
    std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return field.zero();
    // C(nd, kd) with nd < p: numerator and denominator are units mod p.
    FieldElem num = field.one(), den = field.one();
    for (std::uint64_t i = 0; i < kd; ++i) {
      num = field.mul(num, field.make(static_cast<std::int64_t>(nd - i)));
      den = field.mul(den, field.make(static_cast<std::int64_t>(i + 1)));
    }
    result = field.mul(result, field.mul(num, field.inv(den)));
    n /= p;
    k /= p;
  }
  return result;
}

}  // namespace fpure
