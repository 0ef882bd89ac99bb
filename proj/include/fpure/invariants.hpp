#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "fpure/frobenius.hpp"

namespace fpure {

using Rational = boost::rational<std::int64_t>;

/// Always "num/den", den included even when it is 1.
std::string to_string(const Rational& r);

struct Interval {
  Rational lo, hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  Rational width() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// m^[q] : (I^[q] : I), whose image in S/I is the splitting ideal I_e.
Ideal splitting_ideal_pullback(const Ideal& I, unsigned e);

/// Least t with m^t inside J. J must contain m^[q] (checked); the answer is at
/// most n(q-1)+1. Each probe sweeps the degree-t monomials with exponents
/// below q, at most `monomial_cap` of them.
std::uint64_t loewy_length(const Ideal& J, std::uint64_t q, std::uint64_t monomial_cap = 1000000);

enum class ThetaMethod { kAuto, kGeneric, kHypersurface };

/// Theta_e at the origin: the least degree of a monomial with all exponents
/// below q among the generators of I^[q] : I. kAuto takes the hypersurface
/// path for principal ideals.
ThetaValue theta_local(const Ideal& I, unsigned e, ThetaMethod method = ThetaMethod::kAuto);

struct MainFormulaResult {
  bool holds = false;
  std::uint64_t loewy = 0;
  std::uint64_t theta = 0;
  /// n(q-1)+1
  std::uint64_t expected = 0;
};

/// loewy(S / pullback) + Theta_e = n(q-1)+1, both sides computed independently.
/// Throws NotFpureError when S/I is not F-pure at the origin.
MainFormulaResult main_formula_check(const Ideal& I, unsigned e);

/// n - dim S/I. Throws MathError for the unit ideal.
std::size_t height_of(const Ideal& I);

struct FptOptions {
  ThetaMethod method = ThetaMethod::kAuto;
  /// Refuse presentations with a generator of order 1 (mfpt needs edim = n).
  bool require_minimal = true;
};

struct InvariantReport {
  unsigned e = 0;
  std::uint64_t q = 0;
  std::size_t num_vars = 0;
  std::uint64_t theta = 0;
  std::uint64_t loewy = 0;
  std::uint64_t b_value = 0;
  std::size_t height = 0;
  std::size_t dim_r = 0;
  Interval fpt, dfpt;
  std::optional<Interval> mfpt;
  /// fpt and dfpt intersected with [0, dim R].
  Interval fpt_feasible, dfpt_feasible;
  bool clamped = false;
  bool fpure = true;
};

/// Certified bounds at level e:
///   fpt  in [b/q, (b+n)/q]          with b = n(q-1) - Theta_e = loewy - 1,
///   dfpt in [Theta_e/q - ht, (Theta_e+n)/q - ht],
///   mfpt in [Theta_e/q, (Theta_e+n)/q].
/// Throws NotFpureError, or InputError("presentation not minimal").
InvariantReport fpt_bounds(const Ideal& I, unsigned e, const FptOptions& options = {});

/// Largest t with I^t not inside J^[q]. Each generator of I must have a p-power in J.
std::uint64_t nu_value(const Ideal& I, const Ideal& J, unsigned e,
                       std::uint64_t product_cap = 1000000);

struct SignatureTerm {
  unsigned e = 0;
  std::uint64_t q = 0;
  /// Colength of the pullback; nullopt when infinite, value is then 0.
  std::optional<std::uint64_t> colength;
  Rational value;
};

/// colength(S / pullback_e) / q^{dim R} for e = 1..e_max.
std::vector<SignatureTerm> fsignature_estimate(const Ideal& I, unsigned e_max);

}  // namespace fpure
