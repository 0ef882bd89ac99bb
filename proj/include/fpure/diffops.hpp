#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fpure/frobenius.hpp"

namespace fpure {

/// Index of the divided-power operator d^(alpha) of level e. Every alpha_i < p^e.
struct DividedPowerIndex {
  std::vector<std::uint32_t> alpha;
  unsigned e = 1;
};

/// d^(alpha) x^beta = prod C(beta_i, alpha_i) x^(beta - alpha), zero when some
/// beta_i < alpha_i. Throws InputError for an index that does not fit the ring.
Polynomial apply_divided_power(const DividedPowerIndex& idx, const Polynomial& f);
/// Same action without the level check; `alpha` uses the first num_vars slots.
Polynomial apply_divided_power(const Monomial& alpha, const Polynomial& f);

/// Visits every alpha with |alpha| = degree and alpha_i <= bound[i], in
/// lexicographic order. Stops early when `visit` returns false; the return
/// value says whether the walk ran to completion.
bool for_each_index_of_degree(const std::vector<std::uint32_t>& bound, std::uint64_t degree,
                              const std::function<bool(const Monomial&)>& visit);

/// f lies in P^{<n, q>}: d^(alpha) f is in P for every alpha with |alpha| <= n-1
/// and alpha_i < q.
bool diff_power_member(const Polynomial& f, const Ideal& P, std::uint64_t n, unsigned e);

/// Largest n with I^[q] : I inside P^{<n, q>}. nullopt when no bound exists,
/// i.e. every operator image of the colon stays in P (S/I is not F-pure at P).
/// P must be prime and contain I; neither is checked.
ThetaValue theta_at_prime(const Ideal& I, const Ideal& P, unsigned e);

/// Largest n such that the image ideal of I^[q] : I under operators of order
/// <= n-1 is proper; nullopt when even all of D^(q) leaves it proper.
ThetaValue theta_global(const Ideal& I, unsigned e);

/// The full operator image of I^[q] : I is the unit ideal. Over F_p this is
/// also the geometric Fedder criterion.
bool global_fedder(const Ideal& I, unsigned e);

}  // namespace fpure
