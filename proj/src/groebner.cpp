#include "conekit/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "conekit/error.hpp"

namespace conekit {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a > b;
  });
  std::vector<Monomial> out;
  for (const auto& m : ms) {
    bool redundant = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

void add_into(IntPoly& acc, const IntPoly& p, std::size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

IntPoly numerator_rec(const WeightedPolyRing& ring, std::vector<Monomial> ms) {
  ms = minimalize(std::move(ms));
  if (ms.empty()) return {1};
  const std::size_t n = ring.num_vars();
  std::vector<int> count(n, 0);
  bool coprime = true;
  for (const auto& m : ms)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0 && ++count[i] > 1) coprime = false;
  if (coprime) {
    IntPoly r{1};
    for (const auto& m : ms) {
      IntPoly f(m.weighted_degree() + 1, 0);
      f[0] = 1;
      f[m.weighted_degree()] -= 1;
      r = multiply(r, f);
    }
    trim(r);
    return r;
  }
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (count[i] > count[pivot]) pivot = i;
  Monomial x = ring.variable(pivot);
  std::vector<Monomial> with_x{x};
  std::vector<Monomial> colon;
  for (const auto& m : ms) {
    if (m[pivot] == 0) with_x.push_back(m);
    colon.push_back(m[pivot] > 0 ? m / x : m);
  }
  IntPoly r = numerator_rec(ring, std::move(with_x));
  add_into(r, numerator_rec(ring, std::move(colon)), ring.weight(pivot));
  trim(r);
  return r;
}

template <class F>
using Accumulator = std::map<Monomial, typename F::Element, std::greater<>>;

template <class F>
void accumulate(const F& field, Accumulator<F>& acc, const Polynomial<F>& g, const Monomial& u,
                const typename F::Element& c) {
  for (const auto& t : g.terms()) {
    Monomial m = t.monomial * u;
    auto v = field.mul(c, t.coeff);
    auto [it, inserted] = acc.try_emplace(m, v);
    if (!inserted) {
      it->second = field.add(it->second, v);
      if (field.is_zero(it->second)) acc.erase(it);
    }
  }
}

template <class F>
Polynomial<F> reduce_by(const std::vector<const Polynomial<F>*>& basis, const std::vector<Monomial>& leads,
                        const Polynomial<F>& f) {
  const F& field = f.field();
  Accumulator<F> acc;
  for (const auto& t : f.terms()) acc.emplace(t.monomial, t.coeff);
  std::vector<Term<F>> rest;
  while (!acc.empty()) {
    auto it = acc.begin();
    Monomial m = it->first;
    auto c = it->second;
    std::size_t k = 0;
    for (; k < leads.size(); ++k)
      if (leads[k].divides(m)) break;
    if (k == leads.size()) {
      rest.push_back({m, c});
      acc.erase(it);
      continue;
    }
    const Polynomial<F>& g = *basis[k];
    auto factor = field.neg(field.div(c, g.leading_coeff()));
    accumulate(field, acc, g, m / leads[k], factor);
  }
  return Polynomial<F>(f.ring_ptr(), std::move(rest));
}

template <class F>
Polynomial<F> s_polynomial(const WeightedPolyRing& ring, const Polynomial<F>& a, const Polynomial<F>& b) {
  Monomial l = ring.lcm(a.leading_monomial(), b.leading_monomial());
  const F& field = a.field();
  Polynomial<F> left = a.times_term(l / a.leading_monomial(), field.inv(a.leading_coeff()));
  return left.plus_scaled(b, l / b.leading_monomial(), field.neg(field.inv(b.leading_coeff())));
}

struct Pair {
  std::uint32_t degree;
  std::size_t serial;
  std::size_t i, j;
  bool operator<(const Pair& o) const {
    if (degree != o.degree) return degree < o.degree;
    return serial < o.serial;
  }
};

}  // namespace

IntPoly hilbert_numerator(const WeightedPolyRing& ring, std::vector<Monomial> monomials) {
  return numerator_rec(ring, std::move(monomials));
}

template <class F>
GroebnerBasis<F>::GroebnerBasis(RingPtr ring, std::vector<Polynomial<F>> basis, GroebnerStats stats)
    : ring_(std::move(ring)), basis_(std::move(basis)), stats_(stats) {
  for (const auto& g : basis_) leads_.push_back(g.leading_monomial());
  numerator_ = conekit::hilbert_numerator(*ring_, leads_);
}

template <class F>
int GroebnerBasis<F>::find_divisor(const Monomial& m) const noexcept {
  for (std::size_t k = 0; k < leads_.size(); ++k)
    if (leads_[k].divides(m)) return static_cast<int>(k);
  return -1;
}

template <class F>
Polynomial<F> GroebnerBasis<F>::normal_form(const Polynomial<F>& f) const {
  require_same_ring(*ring_, f.ring());
  std::vector<const Polynomial<F>*> ptrs;
  for (const auto& g : basis_) ptrs.push_back(&g);
  return reduce_by(ptrs, leads_, f);
}

template <class F>
std::vector<Monomial> GroebnerBasis<F>::standard_monomials(std::uint32_t d) const {
  std::vector<Monomial> out;
  for (const auto& m : ring_->monomials_of_degree(d))
    if (is_standard(m)) out.push_back(m);
  return out;
}

template <class F>
std::uint64_t GroebnerBasis<F>::hilbert_value(std::uint32_t d) const {
  std::int64_t v = 0;
  for (std::size_t j = 0; j < numerator_.size() && j <= d; ++j)
    v += numerator_[j] * static_cast<std::int64_t>(ring_->count_monomials(d - static_cast<std::uint32_t>(j)));
  return static_cast<std::uint64_t>(v);
}

template <class F>
GradedDims GroebnerBasis<F>::hilbert_function(std::uint32_t d_min, std::uint32_t d_max) const {
  if (d_min > d_max) throw DomainError("bad-range", "d_min exceeds d_max");
  GradedDims dims(static_cast<int>(d_min), static_cast<int>(d_max));
  for (std::uint32_t d = d_min; d <= d_max; ++d) dims.set(static_cast<int>(d), hilbert_value(d));
  return dims;
}

template <class F>
bool GroebnerBasis<F>::is_zero_dimensional() const noexcept {
  for (std::size_t i = 0; i < ring_->num_vars(); ++i) {
    bool found = false;
    for (const auto& m : leads_)
      if (m[i] > 0 && m.total_degree() == m[i]) found = true;
    if (!found) return false;
  }
  return true;
}

template <class F>
bool GroebnerBasis<F>::is_unit_ideal() const noexcept {
  return std::any_of(leads_.begin(), leads_.end(), [](const Monomial& m) { return m.is_one(); });
}

template <class F>
std::size_t GroebnerBasis<F>::krull_dimension() const {
  if (is_unit_ideal()) return 0;
  IntPoly q = numerator_;
  std::size_t order = 0;
  while (q.size() > 1) {
    std::int64_t s = 0;
    for (auto c : q) s += c;
    if (s != 0) break;
    IntPoly next(q.size() - 1, 0);
    std::int64_t carry = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) next[i] = carry += q[i];
    q = std::move(next);
    ++order;
  }
  return ring_->num_vars() - order;
}

template <class F>
Ideal<F>::Ideal(RingPtr ring, std::vector<Polynomial<F>> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) {
    require_same_ring(*ring_, g.ring());
    if (!g.is_homogeneous())
      throw DomainError("inhomogeneous", "generator " + g.to_string() + " is not homogeneous");
  }
}

template <class F>
std::vector<std::uint32_t> Ideal<F>::degrees() const {
  std::vector<std::uint32_t> d;
  for (const auto& g : gens_) d.push_back(g.degree());
  return d;
}

template <class F>
std::shared_ptr<const GroebnerBasis<F>> Ideal<F>::groebner_ptr(const GroebnerOptions& options) const {
  std::call_once(cache_->once, [&] {
    cache_->basis = std::make_shared<const GroebnerBasis<F>>(buchberger(*this, options));
  });
  return cache_->basis;
}

template <class F>
const GroebnerBasis<F>& Ideal<F>::groebner(const GroebnerOptions& options) const {
  return *groebner_ptr(options);
}

template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, const GroebnerOptions& options) {
  const RingPtr& ring = ideal.ring_ptr();
  GroebnerStats stats;
  std::vector<Polynomial<F>> g;
  std::vector<Monomial> leads;
  std::vector<bool> alive;
  std::set<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t serial = 0;

  auto live_ptrs = [&](std::vector<const Polynomial<F>*>& ptrs, std::vector<Monomial>& ls) {
    ptrs.clear();
    ls.clear();
    for (std::size_t k = 0; k < g.size(); ++k)
      if (alive[k]) {
        ptrs.push_back(&g[k]);
        ls.push_back(leads[k]);
      }
  };

  auto add = [&](Polynomial<F> h) {
    h = h.monic();
    std::size_t idx = g.size();
    Monomial lh = h.leading_monomial();
    g.push_back(std::move(h));
    leads.push_back(lh);
    alive.push_back(true);
    for (std::size_t k = 0; k < idx; ++k) {
      if (!alive[k]) continue;
      ++stats.pairs_created;
      if (stats.pairs_created > options.max_pairs)
        throw ResourceError("pair-cap", "critical-pair limit of " + std::to_string(options.max_pairs) +
                                            " exceeded after " + std::to_string(stats.pairs_reduced) +
                                            " reductions with " + std::to_string(g.size()) +
                                            " basis elements");
      if (leads[k].coprime(lh)) {
        ++stats.pairs_pruned;
        continue;
      }
      queue.insert({ring->lcm(leads[k], lh).weighted_degree(), serial++, k, idx});
      pending.insert({k, idx});
    }
  };

  std::vector<const Polynomial<F>*> ptrs;
  std::vector<Monomial> ls;
  std::vector<Polynomial<F>> inputs;
  for (const auto& f : ideal.generators())
    if (!f.is_zero()) inputs.push_back(f);
  std::stable_sort(inputs.begin(), inputs.end(),
                   [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
  for (const auto& f : inputs) {
    live_ptrs(ptrs, ls);
    Polynomial<F> r = reduce_by(ptrs, ls, f);
    if (!r.is_zero()) add(std::move(r));
  }

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});
    Monomial l = ring->lcm(leads[p.i], leads[p.j]);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j || !alive[k] || !leads[k].divides(l)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) chain = true;
    }
    if (chain) {
      ++stats.pairs_pruned;
      continue;
    }
    ++stats.pairs_reduced;
    live_ptrs(ptrs, ls);
    Polynomial<F> r = reduce_by(ptrs, ls, s_polynomial(*ring, g[p.i], g[p.j]));
    if (!r.is_zero()) add(std::move(r));
  }

  std::vector<Polynomial<F>> minimal;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (!alive[k]) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (j == k || !alive[j] || !leads[j].divides(leads[k])) continue;
      if (!(leads[j] == leads[k]) || j < k) redundant = true;
    }
    if (!redundant) minimal.push_back(g[k]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const auto& a, const auto& b) { return a.leading_monomial() < b.leading_monomial(); });
  std::vector<Polynomial<F>> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const Polynomial<F>*> others;
    std::vector<Monomial> other_leads;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != k) {
        others.push_back(&minimal[j]);
        other_leads.push_back(minimal[j].leading_monomial());
      }
    const Polynomial<F>& f = minimal[k];
    Polynomial<F> head = Polynomial<F>::term(ring, f.leading_monomial(), f.leading_coeff());
    Polynomial<F> tail = reduce_by(others, other_leads, f - head);
    reduced.push_back((head + tail).monic());
  }

  if (options.verify) {
    std::vector<const Polynomial<F>*> rp;
    std::vector<Monomial> rl;
    for (const auto& f : reduced) {
      rp.push_back(&f);
      rl.push_back(f.leading_monomial());
    }
    for (std::size_t i = 0; i < reduced.size(); ++i)
      for (std::size_t j = i + 1; j < reduced.size(); ++j) {
        if (rl[i].coprime(rl[j])) continue;
        if (!reduce_by(rp, rl, s_polynomial(*ring, reduced[i], reduced[j])).is_zero())
          throw Error("groebner-verification", "S-polynomial did not reduce to zero");
      }
  }
  return GroebnerBasis<F>(ring, std::move(reduced), stats);
}

template <class F>
QuotientRing<F>::QuotientRing(std::shared_ptr<const GroebnerBasis<F>> gb)
    : gb_(std::move(gb)), field_(field_of<F>(gb_->ring())) {}

template <class F>
const std::vector<Monomial>& QuotientRing<F>::basis(int d) {
  auto it = bases_.find(d);
  if (it != bases_.end()) return it->second;
  std::vector<Monomial> b;
  if (d >= 0) b = gb_->standard_monomials(static_cast<std::uint32_t>(d));
  for (std::size_t i = 0; i < b.size(); ++i) index_.emplace(b[i], static_cast<int>(i));
  return bases_.emplace(d, std::move(b)).first->second;
}

template <class F>
int QuotientRing<F>::index_of(const Monomial& m) {
  basis(static_cast<int>(m.weighted_degree()));
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

template <class F>
void axpy(const F& field, SparseVec<F>& acc, const typename F::Element& c, const SparseVec<F>& v) {
  if (field.is_zero(c) || v.empty()) return;
  SparseVec<F> out;
  out.reserve(acc.size() + v.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < v.size()) {
    if (j == v.size() || (i < acc.size() && acc[i].first < v[j].first)) {
      out.push_back(std::move(acc[i++]));
    } else if (i == acc.size() || v[j].first < acc[i].first) {
      out.emplace_back(v[j].first, field.mul(c, v[j].second));
      ++j;
    } else {
      auto s = field.add(acc[i].second, field.mul(c, v[j].second));
      if (!field.is_zero(s)) out.emplace_back(acc[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  acc = std::move(out);
}

template <class F>
const SparseVec<F>& QuotientRing<F>::normal_form(const Monomial& m) {
  auto it = memo_.find(m);
  if (it != memo_.end()) return it->second;
  SparseVec<F> v;
  int idx = index_of(m);
  if (idx >= 0) {
    v.emplace_back(static_cast<std::uint32_t>(idx), field_.one());
  } else {
    int k = gb_->find_divisor(m);
    const Polynomial<F>& g = gb_->polynomials()[static_cast<std::size_t>(k)];
    Monomial u = m / g.leading_monomial();
    for (std::size_t t = 1; t < g.terms().size(); ++t) {
      const auto& term = g.terms()[t];
      SparseVec<F> sub = normal_form(term.monomial * u);
      axpy(field_, v, field_.neg(term.coeff), sub);
    }
  }
  return memo_.emplace(m, std::move(v)).first->second;
}

template <class F>
SparseVec<F> QuotientRing<F>::normal_form(const Polynomial<F>& p, const Monomial& u) {
  SparseVec<F> v;
  for (const auto& t : p.terms()) {
    SparseVec<F> sub = normal_form(t.monomial * u);
    axpy(field_, v, t.coeff, sub);
  }
  return v;
}

template <class F>
Polynomial<F> QuotientRing<F>::to_polynomial(int d, const SparseVec<F>& v) {
  const auto& b = basis(d);
  std::vector<Term<F>> terms;
  for (const auto& [i, c] : v) terms.push_back({b[i], c});
  return Polynomial<F>(gb_->ring_ptr(), std::move(terms));
}

template <class F>
Polynomial<F> transfer(const Polynomial<F>& f, const RingPtr& target) {
  const auto& src = f.ring();
  if (src.num_vars() != target->num_vars()) throw DomainError("ring-mismatch", "rings differ in size");
  std::vector<Term<F>> terms;
  std::vector<std::uint32_t> e(src.num_vars());
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.monomial[i];
    terms.push_back({target->monomial(e), t.coeff});
  }
  return Polynomial<F>(target, std::move(terms));
}

template <class F>
AffineGroebner<F> affine_groebner(const std::vector<Polynomial<F>>& polys, const GroebnerOptions& options) {
  if (polys.empty()) throw DomainError("empty-ideal", "no polynomials");
  const auto& src = polys.front().ring();
  const std::size_t n = src.num_vars();
  if (n + 1 > kMaxVars) throw DomainError("too-many-variables", "no room for a homogenizing variable");
  RingPtr affine = make_ring(src.names(), std::vector<std::uint32_t>(n, 1), src.field());
  std::vector<std::string> names = src.names();
  std::string h = "h";
  while (affine->index_of(h) >= 0) h += "_";
  names.push_back(h);
  RingPtr homog = make_ring(names, std::vector<std::uint32_t>(n + 1, 1), src.field());

  std::vector<Polynomial<F>> hp;
  std::vector<std::uint32_t> e(n + 1);
  for (const auto& f : polys) {
    require_same_ring(src, f.ring());
    std::uint32_t top = 0;
    for (const auto& t : f.terms()) top = std::max(top, t.monomial.total_degree());
    std::vector<Term<F>> terms;
    for (const auto& t : f.terms()) {
      for (std::size_t i = 0; i < n; ++i) e[i] = t.monomial[i];
      e[n] = top - t.monomial.total_degree();
      terms.push_back({homog->monomial(e), t.coeff});
    }
    if (!terms.empty()) hp.emplace_back(homog, std::move(terms));
  }
  AffineGroebner<F> out;
  out.ring = affine;
  if (hp.empty()) return out;
  GroebnerBasis<F> gb = buchberger(Ideal<F>(homog, std::move(hp)), options);
  std::vector<std::uint32_t> a(n);
  for (const auto& g : gb.polynomials()) {
    std::vector<Term<F>> terms;
    for (const auto& t : g.terms()) {
      for (std::size_t i = 0; i < n; ++i) a[i] = t.monomial[i];
      terms.push_back({affine->monomial(a), t.coeff});
    }
    Polynomial<F> d(affine, std::move(terms));
    if (d.is_zero()) continue;
    bool redundant = false;
    for (const auto& l : out.leads)
      if (l.divides(d.leading_monomial())) redundant = true;
    if (redundant) continue;
    out.leads.push_back(d.leading_monomial());
    out.basis.push_back(d.monic());
  }
  return out;
}

template <class F>
Polynomial<F> AffineGroebner<F>::normal_form(const Polynomial<F>& f) const {
  std::vector<const Polynomial<F>*> ptrs;
  for (const auto& g : basis) ptrs.push_back(&g);
  return reduce_by(ptrs, leads, transfer(f, ring));
}

template <class F>
bool AffineGroebner<F>::is_unit() const noexcept {
  return std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); });
}

template <class F>
bool AffineGroebner<F>::is_zero_dimensional() const noexcept {
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    bool found = false;
    for (const auto& m : leads)
      if (m[i] > 0 && m.total_degree() == m[i]) found = true;
    if (!found) return false;
  }
  return true;
}

template <class F>
std::vector<Monomial> AffineGroebner<F>::standard_monomials() const {
  if (!is_zero_dimensional()) throw DomainError("not-zero-dimensional", "infinitely many standard monomials");
  std::vector<Monomial> out;
  for (std::uint32_t d = 0;; ++d) {
    std::size_t before = out.size();
    for (const auto& m : ring->monomials_of_degree(d)) {
      bool standard = true;
      for (const auto& l : leads)
        if (l.divides(m)) {
          standard = false;
          break;
        }
      if (standard) out.push_back(m);
    }
    if (out.size() == before) break;
  }
  return out;
}

#define CONEKIT_INSTANTIATE(F)                                                                  \
  template class GroebnerBasis<F>;                                                              \
  template class Ideal<F>;                                                                      \
  template class QuotientRing<F>;                                                               \
  template GroebnerBasis<F> buchberger<F>(const Ideal<F>&, const GroebnerOptions&);             \
  template void axpy<F>(const F&, SparseVec<F>&, const typename F::Element&, const SparseVec<F>&); \
  template struct AffineGroebner<F>;                                                             \
  template AffineGroebner<F> affine_groebner<F>(const std::vector<Polynomial<F>>&, const GroebnerOptions&); \
  template Polynomial<F> transfer<F>(const Polynomial<F>&, const RingPtr&);
CONEKIT_FOR_EACH_FIELD(CONEKIT_INSTANTIATE)
#undef CONEKIT_INSTANTIATE

}  // namespace conekit
