#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpure/field.hpp"

namespace fpure {

/// Sixteen user variables plus room for the elimination tag.
inline constexpr std::size_t kMaxVars = 18;
inline constexpr std::size_t kMaxUserVars = 16;
inline constexpr std::uint32_t kMaxExponent = 0x7fffffffu;

enum class MonomialOrder { kDegRevLex, kDegLex, kLex };

std::string to_string(MonomialOrder order);
/// Accepts "degrevlex", "deglex" and "lex".
MonomialOrder parse_monomial_order(std::string_view name);

/// Exponent vector. Slots past the ring's arity are kept at zero.
struct Monomial {
  std::array<std::uint32_t, kMaxVars> exp{};
  std::uint64_t degree = 0;

  std::uint32_t operator[](std::size_t i) const noexcept { return exp[i]; }

  void set(std::size_t i, std::uint32_t v) noexcept {
    degree = degree - exp[i] + v;
    exp[i] = v;
  }

  bool is_one() const noexcept { return degree == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exp == b.exp; }
};

/// Product of monomials; throws OverflowError when an exponent leaves 31 bits.
Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b, assuming b divides a.
Monomial operator/(const Monomial& a, const Monomial& b) noexcept;
bool divides(const Monomial& divisor, const Monomial& m) noexcept;
Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
bool coprime(const Monomial& a, const Monomial& b) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// The ambient ring F_p[x_1..x_n] together with its monomial order.
///
/// `elimination_block` > 0 turns the order into a block order: the first
/// `elimination_block` variables are compared first (graded reverse
/// lexicographic inside the block), ties broken by `order` on the rest.
/// That is the elimination order used for intersections.
class RingContext {
 public:
  RingContext(PrimeField field, std::vector<std::string> names, MonomialOrder order,
              std::size_t elimination_block = 0);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  std::size_t num_vars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  MonomialOrder order() const noexcept { return order_; }
  std::size_t elimination_block() const noexcept { return elim_block_; }

  /// Index of a variable name, or nullopt.
  std::optional<std::size_t> index_of(std::string_view name) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept;

  /// Same field, names and order (block included).
  bool same_as(const RingContext& other) const noexcept;

 private:
  std::strong_ordering compare_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                     std::size_t hi, MonomialOrder order) const noexcept;

  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::size_t elim_block_;
};

using Ring = std::shared_ptr<const RingContext>;

Ring make_ring(std::uint32_t p, std::vector<std::string> names,
               MonomialOrder order = MonomialOrder::kDegRevLex);

/// Copy of `ring` with a fresh variable prepended and eliminated first.
Ring ring_with_tag(const Ring& ring);

struct Term {
  Monomial mono;
  FieldElem coeff;
};

/// Sparse polynomial over F_p. Terms are strictly decreasing in the ring's
/// order with no zero coefficients, so the leading term is `terms().front()`.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(Ring ring, std::int64_t c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial monomial(Ring ring, const Monomial& m, FieldElem c);
  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }

  /// Largest total degree of a term; 0 for the zero polynomial.
  std::uint64_t total_degree() const noexcept;
  /// Smallest total degree of a term (ord); nullopt for zero.
  std::optional<std::uint64_t> order() const noexcept;
  bool is_constant() const noexcept { return terms_.empty() || terms_.front().mono.is_one(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  Polynomial scaled(FieldElem c) const;
  Polynomial times_monomial(const Monomial& m, FieldElem c) const;
  Polynomial monic() const;

  /// Removes and returns the leading term.
  Term pop_leading();

  /// this -= c * m * g, done as a single ordered merge.
  void sub_scaled_shift(FieldElem c, const Monomial& m, const Polynomial& g);

  std::string to_string() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  Polynomial(Ring ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}
  void merge_with(const Polynomial& g, bool subtract);

  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& f, std::uint64_t k);

/// Maps variable i of f's ring to `target[i]` in `ring`; kSubstituteOne sends it to 1.
inline constexpr int kSubstituteOne = -1;
Polynomial remap(const Polynomial& f, const Ring& ring, std::span<const int> target);

/// q = p^e, throwing OverflowError unless q < 2^31.
std::uint64_t power_of_p(std::uint32_t p, unsigned e);

/// f^{p^e}: coefficients are fixed by Frobenius on F_p, exponents scale by p^e.
Polynomial frobenius_image(const Polynomial& f, unsigned e);
/// Scales every exponent by q (q a power of the characteristic).
Polynomial frobenius_scale(const Polynomial& f, std::uint64_t q);

/// f^t modulo the monomial ideal m^[q]. When q is a power of p the exponent
/// is expanded in base p and the digits are applied through Frobenius, with
/// the truncation bound adjusted per digit; otherwise plain truncated squaring.
Polynomial truncated_power(const Polynomial& f, std::uint64_t t, std::uint64_t q);
/// Repeated squaring with truncation after every product. Always valid.
Polynomial truncated_power_by_squaring(const Polynomial& f, std::uint64_t t, std::uint64_t q);
/// Drops every term with some exponent >= q.
Polynomial truncate_below(const Polynomial& f, std::uint64_t q);

/// Minimum total degree over terms whose exponents are all < q; nullopt
/// (standing for +infinity) when f lies in m^[q].
std::optional<std::uint64_t> min_degree_below_q(const Polynomial& f, std::uint64_t q);

/// Parses the ASCII grammar
///   expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
///   factor := base ('^' natural)?, base := natural | variable | '(' expr ')'.
Polynomial parse_poly(std::string_view text, const Ring& ring);

}  // namespace fpure
