#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpure/errors.hpp"
#include "fpure/groebner.hpp"

namespace fpure {

/// A Theta_e value. nullopt is the NOT_FPURE sentinel: the colon ideal lies
/// in m^[q] (or in the corresponding differential power at a prime).
using ThetaValue = std::optional<std::uint64_t>;

/// Raised by operations whose result only exists for F-pure inputs.
class NotFpureError : public MathError {
 public:
  using MathError::MathError;
};

/// I^[q]: generated by the Frobenius images of the generators of I.
Ideal bracket_power(const Ideal& I, unsigned e);

/// I^[q] : I. Throws InputError for the unit ideal.
Ideal fedder_colon(const Ideal& I, unsigned e);

struct FedderWitness {
  unsigned e = 0;
  std::uint64_t q = 0;
  /// Reduced Groebner basis of I^[q] : I.
  std::vector<Polynomial> colon_generators;
  bool fpure = false;
  /// A colon element outside m^[q], and one of its monomials with every exponent < q.
  std::optional<Polynomial> witness;
  std::optional<Monomial> witness_monomial;
  /// False when some generator of I has a term of degree 1; mfpt is then not meaningful.
  bool inside_m_squared = true;
};

/// Fedder's test at the origin: F-pure iff I^[q] : I is not inside m^[q].
/// Membership in m^[q] is decided monomial by monomial. Generators of I must
/// vanish at the origin.
FedderWitness is_fpure_at_origin(const Ideal& I, unsigned e);

/// Theta_e((f)) at the origin from f^{q-1} mod m^[q]; never builds a Groebner basis.
ThetaValue hypersurface_theta(const Polynomial& f, unsigned e);

/// f^{q-1} (I^[q] : I) + (I + (f))^[q], the Fedder colon of I + (f) when S/I
/// is Gorenstein and f is a nonzerodivisor on it. Those hypotheses are the
/// caller's responsibility and are not checked.
Ideal gorenstein_colon_shift(const Ideal& I, const Polynomial& f, unsigned e);

/// Throws InputError unless every generator vanishes at the origin.
void require_inside_maximal_ideal(const Ideal& I);

}  // namespace fpure
