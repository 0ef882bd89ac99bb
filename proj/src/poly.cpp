#include "fpure/poly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "fpure/errors.hpp"

namespace fpure {

std::string to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::kDegRevLex: return "degrevlex";
    case MonomialOrder::kDegLex: return "deglex";
    case MonomialOrder::kLex: return "lex";
  }
  return "?";
}

MonomialOrder parse_monomial_order(std::string_view name) {
  if (name == "degrevlex") return MonomialOrder::kDegRevLex;
  if (name == "deglex") return MonomialOrder::kDegLex;
  if (name == "lex") return MonomialOrder::kLex;
  throw InputError("unknown monomial order '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Monomials

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint64_t s = std::uint64_t{a.exp[i]} + b.exp[i];
    if (s > kMaxExponent) throw OverflowError("exponent overflow in monomial product");
    r.exp[i] = static_cast<std::uint32_t>(s);
  }
  r.degree = a.degree + b.degree;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = a.exp[i] - b.exp[i];
  r.degree = a.degree - b.degree;
  return r;
}

bool divides(const Monomial& d, const Monomial& m) noexcept {
  if (d.degree > m.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (d.exp[i] > m.exp[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
    r.degree += r.exp[i];
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] && b.exp[i]) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint32_t e : m.exp) {
    h ^= e;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// Rings

RingContext::RingContext(PrimeField field, std::vector<std::string> names, MonomialOrder order,
                         std::size_t elimination_block)
    : field_(field), names_(std::move(names)), order_(order), elim_block_(elimination_block) {
  if (names_.empty()) throw InputError("a ring needs at least one variable");
  if (names_.size() > kMaxVars) throw InputError("too many variables");
  if (elim_block_ > names_.size()) throw InputError("elimination block larger than the ring");
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw InputError("empty variable name");
    if (!seen.insert(name).second) throw InputError("duplicate variable name '" + name + "'");
  }
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::strong_ordering RingContext::compare_range(const Monomial& a, const Monomial& b,
                                                std::size_t lo, std::size_t hi,
                                                MonomialOrder order) const noexcept {
  if (order != MonomialOrder::kLex) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a.exp[i];
      db += b.exp[i];
    }
    if (da != db) return da <=> db;
  }
  if (order == MonomialOrder::kDegRevLex) {
    for (std::size_t i = hi; i-- > lo;)
      if (a.exp[i] != b.exp[i]) return b.exp[i] <=> a.exp[i];
    return std::strong_ordering::equal;
  }
  for (std::size_t i = lo; i < hi; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] <=> b.exp[i];
  return std::strong_ordering::equal;
}

std::strong_ordering RingContext::compare(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = names_.size();
  if (elim_block_ == 0) {
    if (order_ != MonomialOrder::kLex && a.degree != b.degree) return a.degree <=> b.degree;
    return compare_range(a, b, 0, n, order_);
  }
  auto head = compare_range(a, b, 0, elim_block_, MonomialOrder::kDegRevLex);
  if (head != 0) return head;
  return compare_range(a, b, elim_block_, n, order_);
}

bool RingContext::same_as(const RingContext& other) const noexcept {
  return field_ == other.field_ && names_ == other.names_ && order_ == other.order_ &&
         elim_block_ == other.elim_block_;
}

Ring make_ring(std::uint32_t p, std::vector<std::string> names, MonomialOrder order) {
  if (names.size() > kMaxUserVars) throw InputError("at most 16 variables are supported");
  return std::make_shared<const RingContext>(PrimeField(p), std::move(names), order);
}

Ring ring_with_tag(const Ring& ring) {
  std::vector<std::string> names;
  names.reserve(ring->num_vars() + 1);
  std::string tag = "_t";
  while (ring->index_of(tag)) tag += "_";
  names.push_back(tag);
  for (const auto& n : ring->names()) names.push_back(n);
  return std::make_shared<const RingContext>(ring->field(), std::move(names), ring->order(), 1);
}

// ---------------------------------------------------------------------------
// Polynomials

namespace {

void sort_terms(const RingContext& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [&ring](const Term& a, const Term& b) {
    return ring.compare(a.mono, b.mono) > 0;
  });
}

std::vector<Term> drain(const std::unordered_map<Monomial, std::uint32_t, MonomialHash>& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, FieldElem{c}});
  return terms;
}

bool below_bound(const Monomial& m, std::uint64_t bound) noexcept {
  for (std::uint32_t e : m.exp)
    if (e >= bound) return false;
  return true;
}

// f * g keeping only products whose exponents all stay below `bound`
// (bound == 0 means no truncation).
Polynomial multiply(const Polynomial& f, const Polynomial& g, std::uint64_t bound) {
  const Ring& ring = f.ring();
  const PrimeField& field = ring->field();
  const std::uint32_t p = field.characteristic();
  if (f.is_zero() || g.is_zero()) return Polynomial(ring);
  const std::size_t n = ring->num_vars();

  // Packed 64-bit keys whenever every kept exponent fits the per-variable field.
  unsigned bits = 0;
  if (bound > 0) bits = std::max(1u, static_cast<unsigned>(std::bit_width(bound - 1)));
  if (bound > 0 && bits * n <= 64) {
    std::unordered_map<std::uint64_t, std::uint32_t> acc;
    acc.reserve(std::min<std::size_t>(f.size() * g.size(), std::size_t{1} << 22));
    for (const Term& a : f.terms()) {
      for (const Term& b : g.terms()) {
        std::uint64_t key = 0;
        bool keep = true;
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t e = std::uint64_t{a.mono.exp[i]} + b.mono.exp[i];
          if (e >= bound) {
            keep = false;
            break;
          }
          key |= e << (bits * i);
        }
        if (!keep) continue;
        std::uint32_t& slot = acc[key];
        slot = static_cast<std::uint32_t>(
            (std::uint64_t{slot} + std::uint64_t{a.coeff.residue} * b.coeff.residue) % p);
      }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    const std::uint64_t mask = bits == 64 ? ~0ull : ((1ull << bits) - 1);
    for (const auto& [key, c] : acc) {
      if (c == 0) continue;
      Term t{{}, FieldElem{c}};
      for (std::size_t i = 0; i < n; ++i) {
        t.mono.exp[i] = static_cast<std::uint32_t>((key >> (bits * i)) & mask);
        t.mono.degree += t.mono.exp[i];
      }
      terms.push_back(t);
    }
    return Polynomial::from_terms(ring, std::move(terms));
  }

  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(f.size() * g.size(), std::size_t{1} << 22));
  for (const Term& a : f.terms()) {
    for (const Term& b : g.terms()) {
      Monomial m = a.mono * b.mono;
      if (bound > 0 && !below_bound(m, bound)) continue;
      std::uint32_t& slot = acc[m];
      slot = static_cast<std::uint32_t>(
          (std::uint64_t{slot} + std::uint64_t{a.coeff.residue} * b.coeff.residue) % p);
    }
  }
  return Polynomial::from_terms(ring, drain(acc));
}

}  // namespace

Polynomial Polynomial::constant(Ring ring, std::int64_t c) {
  FieldElem v = ring->field().make(c);
  if (v.is_zero()) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), std::vector<Term>{{Monomial{}, v}});
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring->num_vars()) throw InputError("variable index out of range");
  Monomial m;
  m.set(index, 1);
  FieldElem one = ring->field().one();
  return Polynomial(std::move(ring), std::vector<Term>{{m, one}});
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, FieldElem c) {
  if (c.is_zero()) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), std::vector<Term>{{m, c}});
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  const RingContext& ctx = *ring;
  sort_terms(ctx, terms);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = ctx.field().add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree);
  return d;
}

std::optional<std::uint64_t> Polynomial::order() const noexcept {
  if (terms_.empty()) return std::nullopt;
  std::uint64_t d = terms_.front().mono.degree;
  for (const Term& t : terms_) d = std::min(d, t.mono.degree);
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

void Polynomial::merge_with(const Polynomial& g, bool subtract) {
  if (g.is_zero()) return;
  if (!ring_) ring_ = g.ring_;
  const RingContext& ctx = *ring_;
  const PrimeField& field = ctx.field();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    FieldElem bc = subtract ? field.neg(b->coeff) : b->coeff;
    if (a == terms_.end()) {
      out.push_back({b->mono, bc});
      ++b;
      continue;
    }
    auto cmp = ctx.compare(a->mono, b->mono);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      out.push_back({b->mono, bc});
      ++b;
    } else {
      FieldElem c = field.add(a->coeff, bc);
      if (!c.is_zero()) out.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  merge_with(g, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  merge_with(g, true);
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (!f.ring()) return f;
  if (f.size() == 1) return g.times_monomial(f.leading_monomial(), f.leading_term().coeff);
  if (g.size() == 1) return f.times_monomial(g.leading_monomial(), g.leading_term().coeff);
  return multiply(f, g, 0);
}

Polynomial Polynomial::scaled(FieldElem c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, FieldElem c) const {
  if (c.is_zero() || is_zero()) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back({t.mono * m, ring_->field().mul(t.coeff, c)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading_term().coeff));
}

Term Polynomial::pop_leading() {
  Term t = terms_.front();
  terms_.erase(terms_.begin());
  return t;
}

void Polynomial::sub_scaled_shift(FieldElem c, const Monomial& m, const Polynomial& g) {
  if (c.is_zero() || g.is_zero()) return;
  const RingContext& ctx = *ring_;
  const PrimeField& field = ctx.field();
  const FieldElem negc = field.neg(c);
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    Monomial bm = b->mono * m;
    if (a == terms_.end()) {
      out.push_back({bm, field.mul(b->coeff, negc)});
      ++b;
      continue;
    }
    auto cmp = ctx.compare(a->mono, bm);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      out.push_back({bm, field.mul(b->coeff, negc)});
      ++b;
    } else {
      FieldElem v = field.add(a->coeff, field.mul(b->coeff, negc));
      if (!v.is_zero()) out.push_back({a->mono, v});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  const auto& names = ring_->names();
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (t.coeff.residue != 1 || t.mono.is_one()) {
      os << t.coeff.residue;
      wrote = true;
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (wrote) os << '*';
      os << names[i];
      if (t.mono.exp[i] > 1) os << '^' << t.mono.exp[i];
      wrote = true;
    }
  }
  return os.str();
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (!(f.terms_[i].mono == g.terms_[i].mono) || !(f.terms_[i].coeff == g.terms_[i].coeff))
      return false;
  return true;
}

Polynomial pow(const Polynomial& f, std::uint64_t k) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial remap(const Polynomial& f, const Ring& ring, std::span<const int> target) {
  const RingContext& src = *f.ring();
  if (target.size() != src.num_vars()) throw InputError("remap: variable map has wrong length");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) {
    Term r{{}, t.coeff};
    for (std::size_t i = 0; i < src.num_vars(); ++i) {
      if (t.mono.exp[i] == 0 || target[i] == kSubstituteOne) continue;
      auto j = static_cast<std::size_t>(target[i]);
      if (j >= ring->num_vars()) throw InputError("remap: target index out of range");
      std::uint64_t e = std::uint64_t{r.mono.exp[j]} + t.mono.exp[i];
      if (e > kMaxExponent) throw OverflowError("exponent overflow in remap");
      r.mono.set(j, static_cast<std::uint32_t>(e));
    }
    out.push_back(r);
  }
  return Polynomial::from_terms(ring, std::move(out));
}

// ---------------------------------------------------------------------------
// Frobenius and truncated powers

std::uint64_t power_of_p(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxExponent) throw OverflowError("p^e exceeds 2^31");
  }
  return q;
}

Polynomial frobenius_scale(const Polynomial& f, std::uint64_t q) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) {
    Term r{{}, t.coeff};
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      std::uint64_t e = std::uint64_t{t.mono.exp[i]} * q;
      if (e > kMaxExponent) throw OverflowError("exponent overflow in Frobenius image");
      r.mono.exp[i] = static_cast<std::uint32_t>(e);
    }
    r.mono.degree = t.mono.degree * q;
    out.push_back(r);
  }
  // Scaling every exponent by q preserves each supported order.
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial frobenius_image(const Polynomial& f, unsigned e) {
  return frobenius_scale(f, power_of_p(f.ring()->characteristic(), e));
}

Polynomial truncate_below(const Polynomial& f, std::uint64_t q) {
  std::vector<Term> out;
  for (const Term& t : f.terms())
    if (below_bound(t.mono, q)) out.push_back(t);
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial truncated_power_by_squaring(const Polynomial& f, std::uint64_t t, std::uint64_t q) {
  Polynomial result = truncate_below(Polynomial::constant(f.ring(), 1), q);
  Polynomial base = truncate_below(f, q);
  while (t) {
    if (t & 1) result = multiply(result, base, q);
    t >>= 1;
    if (t) base = multiply(base, base, q);
  }
  return result;
}

Polynomial truncated_power(const Polynomial& f, std::uint64_t t, std::uint64_t q) {
  const std::uint64_t p = f.ring()->characteristic();
  std::uint64_t probe = q;
  while (probe > 1 && probe % p == 0) probe /= p;
  if (probe != 1 || q == 1) return truncated_power_by_squaring(f, t, q);

  std::vector<std::uint64_t> digits;
  for (std::uint64_t s = t; s > 0; s /= p) digits.push_back(s % p);
  if (digits.empty()) return truncate_below(Polynomial::constant(f.ring(), 1), q);

  // Level i carries exponents in units of p^i, so a term survives only while
  // every exponent is below ceil(q / p^i).
  std::vector<std::uint64_t> bounds(digits.size());
  std::uint64_t scale = 1;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    bounds[i] = scale >= q ? 1 : (q + scale - 1) / scale;
    if (scale < q) scale *= p;
  }

  Polynomial acc = Polynomial::constant(f.ring(), 1);
  for (std::size_t i = digits.size(); i-- > 0;) {
    acc = truncate_below(frobenius_scale(acc, p), bounds[i]);
    if (acc.is_zero()) return acc;
    if (digits[i] > 0)
      acc = multiply(acc, truncated_power_by_squaring(f, digits[i], bounds[i]), bounds[i]);
  }
  return acc;
}

std::optional<std::uint64_t> min_degree_below_q(const Polynomial& f, std::uint64_t q) {
  std::optional<std::uint64_t> best;
  for (const Term& t : f.terms())
    if (below_bound(t.mono, q) && (!best || t.mono.degree < *best)) best = t.mono.degree;
  return best;
}

}  // namespace fpure
