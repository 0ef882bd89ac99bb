#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpure/invariants.hpp"

namespace fpure {

using VarSet = std::vector<std::size_t>;

/// Minimal primes of a monomial ideal, as sorted variable index sets, themselves
/// sorted by size then lexicographically. (0) gives the single empty set.
/// Throws InputError for a non-monomial generator.
std::vector<VarSet> monomial_minimal_primes(const Ideal& I);

/// Sets every variable outside `keep` to 1 and returns the ideal in the ring
/// of the kept variables (same order and characteristic).
Ideal localize_at_variables(const Ideal& I, const VarSet& keep);

struct StratumLevel {
  unsigned e = 0;
  std::uint64_t q = 0;
  /// Theta_e at P through operator sweeps.
  ThetaValue theta;
  /// Theta_e at the origin of the localized ideal; must agree with `theta`.
  ThetaValue local_theta;
  /// [Theta/q - ht, (Theta + |P|)/q - ht]
  std::optional<Interval> dfpt;
  /// dim S_P - fpt(R_P) in [Theta/q, (Theta + |P|)/q]; equals mfpt when I_P lies in P^2.
  std::optional<Interval> presentation_defect;
  /// edim(R_P) - fpt(R_P), from a minimal presentation of the localization.
  std::optional<Interval> mfpt;
};

struct StratumRecord {
  VarSet prime;
  std::vector<std::string> prime_names;
  std::size_t height = 0;
  /// dim S_P = |P|
  std::size_t local_dim = 0;
  /// Embedding dimension of R_P.
  std::size_t edim = 0;
  std::vector<StratumLevel> levels;
};

/// Every monomial prime containing a minimal prime of the squarefree monomial
/// ideal I, ordered by size then lexicographically. Only monomial primes are
/// visited. `jobs` > 1 computes strata on that many threads.
std::vector<StratumRecord> stratify_monomial(const Ideal& I, const std::vector<unsigned>& levels,
                                             unsigned jobs = 1);

/// Pairs (P, Q) with P inside Q but theta_P > theta_Q at some level.
std::vector<std::pair<std::size_t, std::size_t>> semicontinuity_violations(
    const std::vector<StratumRecord>& strata);

/// Outcome of a structural check, with the exact values it used.
struct VerdictRecord {
  std::string check;
  unsigned e = 0;
  bool precondition_ok = true;
  bool passed = false;
  /// hyperplane_check: the inequality is an equality.
  bool equality = false;
  std::vector<std::pair<std::string, std::string>> values;
  std::string message;
};

/// Theta_e(I + (f)) >= Theta_e(I) + (q-1) ord(f). Gorenstein S/I and f a
/// nonzerodivisor are the caller's claims; the shifted Gorenstein colon is
/// recomputed and its agreement recorded.
VerdictRecord hyperplane_check(const Ideal& I, const Polynomial& f, unsigned e);

/// Theta_e(I + (f_i)) = Theta_e(I + (f_i + h_i)) for each i, where every
/// monomial of h_i must lie in m^[q] or have degree > n(q-1).
VerdictRecord perturbation_check(const Ideal& I, const std::vector<Polynomial>& f,
                                 const std::vector<Polynomial>& h, unsigned e);

/// Theta_e(I + J) = Theta_e(I) + Theta_e(J) for ideals in disjoint variable sets.
VerdictRecord tensor_check(const Ideal& I, const Ideal& J, unsigned e);

}  // namespace fpure
