#include "fpure/diffops.hpp"

#include <algorithm>
#include <limits>

#include "fpure/errors.hpp"

namespace fpure {
namespace {

/// Per-variable cap on useful alpha_i: beyond the largest exponent of f (or q-1) the image is zero.
std::vector<std::uint32_t> index_box(const Polynomial& f, std::uint64_t q) {
  const std::size_t n = f.ring()->num_vars();
  std::vector<std::uint32_t> box(n, 0);
  for (const Term& t : f.terms())
    for (std::size_t i = 0; i < n; ++i) box[i] = std::max(box[i], t.mono[i]);
  for (auto& b : box) b = static_cast<std::uint32_t>(std::min<std::uint64_t>(b, q - 1));
  return box;
}

std::uint64_t box_degree(const std::vector<std::uint32_t>& box) {
  std::uint64_t s = 0;
  for (auto b : box) s += b;
  return s;
}

/// Membership test in P, specialised to primes generated by variables.
class PrimeMembership {
 public:
  explicit PrimeMembership(const Ideal& P) : P_(P) {
    const std::size_t n = P.ring()->num_vars();
    in_prime_.assign(n, false);
    monomial_ = true;
    for (const Polynomial& g : P.generators()) {
      if (!g.is_monomial() || g.leading_monomial().degree != 1) {
        monomial_ = false;
        break;
      }
      for (std::size_t i = 0; i < n; ++i)
        if (g.leading_monomial()[i] == 1) in_prime_[i] = true;
    }
  }

  bool contains(const Polynomial& f) const {
    if (f.is_zero()) return true;
    if (!monomial_) return normal_form(f, P_).is_zero();
    for (const Term& t : f.terms()) {
      bool hit = false;
      for (std::size_t i = 0; i < in_prime_.size() && !hit; ++i)
        hit = in_prime_[i] && t.mono[i] > 0;
      if (!hit) return false;
    }
    return true;
  }

 private:
  const Ideal& P_;
  std::vector<bool> in_prime_;
  bool monomial_ = false;
};

void check_same_ring(const Ideal& I, const Ideal& P) {
  if (!I.ring()->same_as(*P.ring())) throw InputError("ideals live in different rings");
}

}  // namespace

Polynomial apply_divided_power(const Monomial& alpha, const Polynomial& f) {
  const Ring& ring = f.ring();
  const PrimeField& field = ring->field();
  const std::size_t n = ring->num_vars();
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    FieldElem c = t.coeff;
    bool alive = true;
    for (std::size_t i = 0; i < n && alive; ++i) {
      if (alpha[i] == 0) continue;
      if (t.mono[i] < alpha[i]) {
        alive = false;
        break;
      }
      c = field.mul(c, lucas_binomial(t.mono[i], alpha[i], field));
      alive = !c.is_zero();
    }
    if (alive) out.push_back({t.mono / alpha, c});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

Polynomial apply_divided_power(const DividedPowerIndex& idx, const Polynomial& f) {
  const std::size_t n = f.ring()->num_vars();
  if (idx.alpha.size() != n) throw InputError("operator index has the wrong number of entries");
  const std::uint64_t q = power_of_p(f.ring()->characteristic(), idx.e);
  Monomial alpha;
  for (std::size_t i = 0; i < n; ++i) {
    if (idx.alpha[i] >= q) throw InputError("operator index entry not below p^e");
    alpha.set(i, idx.alpha[i]);
  }
  return apply_divided_power(alpha, f);
}

bool for_each_index_of_degree(const std::vector<std::uint32_t>& bound, std::uint64_t degree,
                              const std::function<bool(const Monomial&)>& visit) {
  const std::size_t n = bound.size();
  std::vector<std::uint64_t> tail(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) tail[i] = tail[i + 1] + bound[i];
  if (degree > tail[0]) return true;
  Monomial alpha;
  std::function<bool(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i + 1 == n) {
      alpha.set(i, static_cast<std::uint32_t>(left));
      return visit(alpha);
    }
    std::uint64_t lo = left > tail[i + 1] ? left - tail[i + 1] : 0;
    std::uint64_t hi = std::min<std::uint64_t>(bound[i], left);
    for (std::uint64_t a = hi + 1; a-- > lo;) {
      alpha.set(i, static_cast<std::uint32_t>(a));
      if (!rec(i + 1, left - a)) return false;
    }
    alpha.set(i, 0);
    return true;
  };
  if (n == 0) return degree == 0 ? visit(alpha) : true;
  return rec(0, degree);
}

bool diff_power_member(const Polynomial& f, const Ideal& P, std::uint64_t n, unsigned e) {
  if (!f.ring()->same_as(*P.ring())) throw InputError("polynomial and ideal live in different rings");
  if (n == 0) return true;
  const std::uint64_t q = power_of_p(f.ring()->characteristic(), e);
  if (f.is_zero()) return true;
  PrimeMembership member(P);
  auto box = index_box(f, q);
  const std::uint64_t top = std::min<std::uint64_t>(n - 1, box_degree(box));
  for (std::uint64_t d = 0; d <= top; ++d) {
    bool ok = for_each_index_of_degree(
        box, d, [&](const Monomial& a) { return member.contains(apply_divided_power(a, f)); });
    if (!ok) return false;
  }
  return true;
}

ThetaValue theta_at_prime(const Ideal& I, const Ideal& P, unsigned e) {
  check_same_ring(I, P);
  const std::uint64_t q = power_of_p(I.ring()->characteristic(), e);
  PrimeMembership member(P);
  Ideal colon = fedder_colon(I, e);
  ThetaValue best;
  for (const Polynomial& g : colon.groebner_basis()) {
    auto box = index_box(g, q);
    std::uint64_t top = box_degree(box);
    if (best) top = std::min(top, *best);
    for (std::uint64_t d = 0; d <= top; ++d) {
      bool all_in = for_each_index_of_degree(
          box, d, [&](const Monomial& a) { return member.contains(apply_divided_power(a, g)); });
      if (!all_in) {
        best = d;
        break;
      }
    }
  }
  return best;
}

ThetaValue theta_global(const Ideal& I, unsigned e) {
  const Ring& ring = I.ring();
  const std::uint64_t q = power_of_p(ring->characteristic(), e);
  const std::vector<Polynomial> colon = fedder_colon(I, e).groebner_basis();
  std::vector<std::vector<std::uint32_t>> boxes;
  std::uint64_t top = 0;
  for (const Polynomial& g : colon) {
    boxes.push_back(index_box(g, q));
    top = std::max(top, box_degree(boxes.back()));
  }
  std::vector<Polynomial> basis;
  for (std::uint64_t d = 0; d <= top; ++d) {
    std::vector<Polynomial> fresh;
    bool unit = false;
    for (std::size_t k = 0; k < colon.size() && !unit; ++k) {
      for_each_index_of_degree(boxes[k], d, [&](const Monomial& a) {
        Polynomial h = reduce(apply_divided_power(a, colon[k]), basis);
        if (h.is_zero()) return true;
        if (h.is_constant()) {
          unit = true;
          return false;
        }
        basis.push_back(h.monic());
        fresh.push_back(h);
        return true;
      });
    }
    if (unit) return d;
    if (!fresh.empty()) {
      basis = compute_groebner_basis(ring, std::move(basis));
      if (basis.size() == 1 && basis.front().is_constant()) return d;
    }
  }
  return std::nullopt;
}

bool global_fedder(const Ideal& I, unsigned e) { return theta_global(I, e).has_value(); }

}  // namespace fpure
