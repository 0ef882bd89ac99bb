#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fpure/poly.hpp"

namespace fpure {

/// Cap on S-pairs processed by a single Buchberger run (default 2e6).
/// Exceeding it raises BudgetExhausted. Process-wide; set before computing.
void set_pair_budget(std::uint64_t max_pairs) noexcept;
std::uint64_t pair_budget() noexcept;

/// An ideal given by generators, with a lazily computed reduced Groebner basis.
///
/// Copies share the cache. The basis is computed at most once under
/// std::call_once, so concurrent readers either wait or see the finished basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(Ring ring, std::vector<Polynomial> generators);

  static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(Ring ring);
  /// The homogeneous maximal ideal m = (x_1, ..., x_n).
  static Ideal maximal(Ring ring);
  /// Ideal generated by the listed variables.
  static Ideal of_variables(Ring ring, const std::vector<std::size_t>& vars);
  /// Parses each generator string in `ring`.
  static Ideal parse(Ring ring, const std::vector<std::string>& generators);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  /// Reduced Groebner basis: monic, sorted by leading monomial, empty iff I = (0).
  const std::vector<Polynomial>& groebner_basis() const&;
  /// On a temporary the basis is returned by value so range-for stays safe.
  std::vector<Polynomial> groebner_basis() && { return groebner_basis_ref(); }
  bool has_cached_basis() const noexcept;

  std::string to_string() const;

 private:
  const std::vector<Polynomial>& groebner_basis_ref() const;

  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
    bool ready = false;
  };

  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Buchberger's algorithm with the coprime and chain criteria (Gebauer-Moeller
/// update) and normal pair selection. Returns the reduced basis.
std::vector<Polynomial> compute_groebner_basis(const Ring& ring, std::vector<Polynomial> gens);

/// Remainder of full multivariate division of f by `basis`.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis);

/// Remainder of f modulo the reduced basis of I; zero iff f is in I.
Polynomial normal_form(const Polynomial& f, const Ideal& I);
bool contains(const Ideal& I, const Polynomial& f);
/// J is a subset of I.
bool contains(const Ideal& I, const Ideal& J);
/// Equal reduced bases.
bool same_ideal(const Ideal& I, const Ideal& J);

/// Verifies that every S-polynomial of `basis` reduces to zero.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// I cap J via t*I + (1-t)*J and elimination of t.
Ideal ideal_intersection(const Ideal& I, const Ideal& J);
/// (I : f) = (I cap (f)) / f. f must be nonzero.
Ideal colon_by_element(const Ideal& I, const Polynomial& f);
/// (I : J) as the intersection of (I : g) over the generators g of J.
Ideal colon_by_ideal(const Ideal& I, const Ideal& J);

/// Quotient of an exact division; throws Error("internal error: ...") if g is not a multiple of f.
Polynomial exact_divide(const Polynomial& g, const Polynomial& f);

bool is_unit_ideal(const Ideal& I);

/// dim S/I from the largest variable set independent modulo the leading ideal.
/// Throws MathError("empty variety") for the unit ideal.
std::size_t krull_dimension(const Ideal& I);

/// dim_F S/I as the number of standard monomials; nullopt when infinite.
std::optional<std::uint64_t> colength(const Ideal& I);

/// Counts monomials outside the monomial ideal generated by `leading` in
/// `num_vars` variables; nullopt when infinite.
std::optional<std::uint64_t> count_standard_monomials(std::vector<Monomial> leading,
                                                      std::size_t num_vars);

}  // namespace fpure
