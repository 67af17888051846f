#include "conekit/t1.hpp"

#include <algorithm>
#include <unordered_map>

#include "conekit/error.hpp"
#include "conekit/poly_matrix.hpp"

namespace conekit {

namespace {

/// Monomial bases of S in each degree with reverse lookup.
class MonomialIndex {
 public:
  explicit MonomialIndex(const WeightedPolyRing& ring) : ring_(ring) {}

  const std::vector<Monomial>& basis(std::uint32_t d) { return entry(d).monomials; }
  std::uint32_t position(const Monomial& m) { return entry(m.weighted_degree()).lookup.at(m); }

 private:
  struct Entry {
    std::vector<Monomial> monomials;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> lookup;
  };
  Entry& entry(std::uint32_t d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    Entry e;
    e.monomials = ring_.monomials_of_degree(d);
    for (std::uint32_t i = 0; i < e.monomials.size(); ++i) e.lookup.emplace(e.monomials[i], i);
    return cache_.emplace(d, std::move(e)).first->second;
  }
  const WeightedPolyRing& ring_;
  std::unordered_map<std::uint32_t, Entry> cache_;
};

void check_size(std::size_t n, std::size_t cap, const std::string& what) {
  if (n > cap)
    throw ResourceError("problem-size", what + " has dimension " + std::to_string(n) + ", above the cap of " +
                                            std::to_string(cap));
}

/// Coordinates (i, u) for u in a basis of (S/I)_{d_i + k}.
template <class F>
struct UnknownBlocks {
  std::vector<std::size_t> offset;
  std::vector<bool> present;
  std::size_t total = 0;

  UnknownBlocks(QuotientRing<F>& R, const std::vector<std::uint32_t>& degrees, int k) {
    for (auto d : degrees) {
      int e = static_cast<int>(d) + k;
      offset.push_back(total);
      present.push_back(e >= 0);
      if (e >= 0) total += R.dim(e);
    }
  }
};

/// Rank of the span of the derivation images (h * d_j f_i)_i for h in
/// (S/I)_{w_j + k}, inside the unknown space.
template <class F>
std::size_t derivation_rank(QuotientRing<F>& R, const std::vector<Polynomial<F>>& gens,
                            const std::vector<std::vector<Polynomial<F>>>& partials, const UnknownBlocks<F>& blocks,
                            int k, std::size_t cap) {
  const auto& ring = R.ring();
  Echelon<F> ech(R.field(), blocks.total);
  for (std::size_t j = 0; j < ring.num_vars(); ++j) {
    int hd = static_cast<int>(ring.weight(j)) + k;
    if (hd < 0) continue;
    const auto basis = R.basis(hd);
    check_size(basis.size() * ring.num_vars(), cap, "derivation image");
    for (const auto& h : basis) {
      SparseVec<F> v;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& df = partials[i][j];
        if (df.is_zero() || !blocks.present[i]) continue;
        for (const auto& [idx, c] : R.normal_form(df, h))
          v.emplace_back(static_cast<std::uint32_t>(blocks.offset[i] + idx), c);
      }
      if (!v.empty()) ech.insert(v);
      if (ech.rank() == blocks.total) return ech.rank();
    }
  }
  return ech.rank();
}

template <class F>
std::vector<std::vector<Polynomial<F>>> partial_derivatives(const std::vector<Polynomial<F>>& gens) {
  std::vector<std::vector<Polynomial<F>>> out;
  for (const auto& g : gens) {
    std::vector<Polynomial<F>> row;
    for (std::size_t j = 0; j < g.ring().num_vars(); ++j) row.push_back(g.derivative(j));
    out.push_back(std::move(row));
  }
  return out;
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

template <class F>
void check_range(const WeightedPolyRing& ring, int k_min, int k_max) {
  (void)ring;
  if (k_min > k_max) throw DomainError("bad-range", "k_min exceeds k_max");
}

}  // namespace

std::string method_name(T1Method m) {
  switch (m) {
    case T1Method::JacobianRing:
      return "jacobian-ring";
    case T1Method::CompleteIntersection:
      return "complete-intersection";
    case T1Method::NormalModule:
      return "normal-module";
  }
  return "unknown";
}

template <class F>
std::uint32_t syzygy_degree_bound(const Ideal<F>& ideal) {
  const auto& gb = ideal.groebner();
  const auto& leads = gb.leading_monomials();
  const auto& ring = ideal.ring();
  std::uint32_t bound = 0;
  for (auto d : ideal.degrees()) bound = std::max(bound, d);
  for (std::size_t i = 0; i < leads.size(); ++i)
    for (std::size_t j = i + 1; j < leads.size(); ++j) {
      Monomial l = ring.lcm(leads[i], leads[j]);
      if (l.weighted_degree() <= bound) continue;
      bool dominated = false;
      for (std::size_t k = 0; k < leads.size() && !dominated; ++k) {
        if (k == i || k == j || !leads[k].divides(l)) continue;
        if (!(ring.lcm(leads[i], leads[k]) == l) && !(ring.lcm(leads[j], leads[k]) == l)) dominated = true;
      }
      if (!dominated) bound = l.weighted_degree();
    }
  return bound;
}

template <class F>
std::vector<SyzygyBlock<F>> syzygies(const Ideal<F>& ideal, std::uint32_t max_degree, std::size_t cap) {
  const RingPtr& ring = ideal.ring_ptr();
  const auto& gens = ideal.generators();
  const auto degrees = ideal.degrees();
  const auto& gb = ideal.groebner();
  F field = field_of<F>(*ring);
  MonomialIndex index(*ring);
  std::vector<SyzygyBlock<F>> blocks;
  if (gens.empty()) return blocks;
  std::uint32_t start = *std::min_element(degrees.begin(), degrees.end());

  for (std::uint32_t e = start; e <= max_degree; ++e) {
    std::vector<std::size_t> offset(gens.size(), 0);
    std::vector<bool> present(gens.size(), false);
    std::size_t total = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      offset[i] = total;
      if (degrees[i] <= e && !gens[i].is_zero()) {
        present[i] = true;
        total += index.basis(e - degrees[i]).size();
      }
    }
    if (total == 0) continue;
    check_size(total, cap, "syzygy space in degree " + std::to_string(e));
    const std::uint64_t ideal_dim = ring->count_monomials(e) - gb.hilbert_value(e);
    const std::size_t target = total - static_cast<std::size_t>(ideal_dim);
    if (target == 0) continue;

    auto to_vec = [&](const std::vector<Polynomial<F>>& s, const Monomial& m) {
      SparseVec<F> v;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!present[i]) continue;
        for (const auto& t : s[i].terms())
          v.emplace_back(static_cast<std::uint32_t>(offset[i] + index.position(t.monomial * m)), t.coeff);
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      return v;
    };

    Echelon<F> span(field, total);
    for (const auto& b : blocks)
      for (const auto& s : b.generators)
        for (const auto& m : index.basis(e - b.degree)) {
          span.insert(to_vec(s, m));
          if (span.rank() == target) break;
        }
    if (span.rank() == target) continue;

    std::vector<SparseVec<F>> rows(index.basis(e).size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!present[i]) continue;
      const auto& mons = index.basis(e - degrees[i]);
      for (std::size_t p = 0; p < mons.size(); ++p)
        for (const auto& t : gens[i].terms())
          rows[index.position(t.monomial * mons[p])].emplace_back(static_cast<std::uint32_t>(offset[i] + p), t.coeff);
    }
    SyzygyBlock<F> block{e, {}};
    for (const auto& v : right_kernel(field, total, rows)) {
      if (!span.insert(v)) continue;
      std::vector<std::vector<Term<F>>> comps(gens.size());
      for (const auto& [idx, c] : v) {
        std::size_t i = gens.size();
        while (i-- > 0)
          if (present[i] && offset[i] <= idx) break;
        comps[i].push_back({index.basis(e - degrees[i])[idx - offset[i]], c});
      }
      std::vector<Polynomial<F>> s;
      for (auto& terms : comps) s.emplace_back(ring, std::move(terms));
      block.generators.push_back(std::move(s));
      if (span.rank() == target) break;
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

template <class F>
bool is_regular_sequence(const Ideal<F>& ideal) {
  IntPoly expected{1};
  for (auto d : ideal.degrees()) {
    IntPoly next(expected.size() + d, 0);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      next[i] += expected[i];
      next[i + d] -= expected[i];
    }
    expected = next;
  }
  while (expected.size() > 1 && expected.back() == 0) expected.pop_back();
  return ideal.groebner().hilbert_numerator() == expected;
}

template <class F>
int a_invariant(const Ideal<F>& ideal) {
  const auto& n = ideal.groebner().hilbert_numerator();
  int sum = 0;
  for (auto w : ideal.ring().weights()) sum += static_cast<int>(w);
  return static_cast<int>(n.size()) - 1 - sum;
}

template <class F>
bool has_isolated_singularity(const Ideal<F>& ideal, std::size_t codim) {
  const RingPtr& ring = ideal.ring_ptr();
  std::vector<Polynomial<F>> gens = ideal.generators();
  if (codim > 0) {
    auto jac = jacobian_matrix(ring, ideal.generators());
    for (auto& m : minors(ring, jac, codim))
      if (!m.is_zero()) gens.push_back(std::move(m));
  }
  Ideal<F> j(ring, std::move(gens));
  return j.groebner().is_zero_dimensional();
}

template <class F>
T1Report t1_hypersurface(const Polynomial<F>& f, int k_min, int k_max, const T1Options& options) {
  check_range<F>(f.ring(), k_min, k_max);
  if (f.is_zero() || !f.is_homogeneous() || f.is_constant())
    throw DomainError("bad-hypersurface", "expected a nonconstant homogeneous polynomial");
  const RingPtr& ring = f.ring_ptr();
  std::vector<Polynomial<F>> gens{f};
  for (std::size_t j = 0; j < ring->num_vars(); ++j) {
    auto df = f.derivative(j);
    if (!df.is_zero()) gens.push_back(std::move(df));
  }
  Ideal<F> jac(ring, std::move(gens));
  const auto& gb = jac.groebner();
  if (!gb.is_zero_dimensional())
    throw DomainError("non-isolated-singularity", "the Jacobian ideal does not have finite colength");
  T1Report rep;
  rep.method = T1Method::JacobianRing;
  rep.field = ring->field();
  rep.seed = options.seed;
  rep.center = a_invariant(Ideal<F>(ring, {f}));
  rep.dims = GradedDims(k_min, k_max);
  const int d = static_cast<int>(f.degree());
  for (int k = k_min; k <= k_max; ++k)
    rep.dims.set(k, k + d >= 0 ? gb.hilbert_value(static_cast<std::uint32_t>(k + d)) : 0);
  return rep;
}

template <class F>
T1Report t1_complete_intersection(const Ideal<F>& ideal, int k_min, int k_max, const T1Options& options) {
  check_range<F>(ideal.ring(), k_min, k_max);
  if (ideal.size() == 0) throw DomainError("empty-ideal", "no generators");
  if (!is_regular_sequence(ideal))
    throw DomainError("not-regular-sequence", "the generators do not form a regular sequence");
  if (!has_isolated_singularity(ideal, ideal.size()))
    throw DomainError("non-isolated-singularity", "the cone singularity is not isolated");
  QuotientRing<F> R(ideal.groebner_ptr());
  const auto degrees = ideal.degrees();
  const auto partials = partial_derivatives(ideal.generators());
  T1Report rep;
  rep.method = T1Method::CompleteIntersection;
  rep.field = ideal.ring().field();
  rep.seed = options.seed;
  rep.center = a_invariant(ideal);
  rep.dims = GradedDims(k_min, k_max);
  for (int k = k_min; k <= k_max; ++k) {
    UnknownBlocks<F> blocks(R, degrees, k);
    if (blocks.total == 0) continue;
    check_size(blocks.total, options.max_problem_size, "T1 unknown space");
    std::size_t r = derivation_rank(R, ideal.generators(), partials, blocks, k, options.max_problem_size);
    rep.dims.set(k, blocks.total - r);
  }
  return rep;
}

template <class F>
T1Report t1_graded(const Ideal<F>& ideal, int k_min, int k_max, const T1Options& options) {
  check_range<F>(ideal.ring(), k_min, k_max);
  if (ideal.size() == 0) throw DomainError("empty-ideal", "no generators");
  for (const auto& g : ideal.generators())
    if (g.is_zero()) throw DomainError("zero-generator", "generators must be nonzero");
  if (ideal.groebner().is_unit_ideal()) throw DomainError("unit-ideal", "the ideal is the whole ring");
  if (options.check_isolated) {
    const auto& gb = ideal.groebner();
    std::size_t codim = ideal.ring().num_vars() - gb.krull_dimension();
    if (!has_isolated_singularity(ideal, codim))
      throw DomainError("non-isolated-singularity", "the cone singularity is not isolated");
  }
  const std::uint32_t bound = syzygy_degree_bound(ideal);
  const auto syz = syzygies(ideal, bound, options.max_problem_size);
  QuotientRing<F> R(ideal.groebner_ptr());
  const auto degrees = ideal.degrees();
  const auto partials = partial_derivatives(ideal.generators());
  const auto& gens = ideal.generators();

  struct Condition {
    std::uint32_t degree;
    const std::vector<Polynomial<F>>* s;
  };
  std::vector<Condition> conditions;
  for (const auto& b : syz)
    for (const auto& s : b.generators) conditions.push_back({b.degree, &s});

  T1Report rep;
  rep.method = T1Method::NormalModule;
  rep.field = ideal.ring().field();
  rep.seed = options.seed;
  rep.center = a_invariant(ideal);
  rep.syzygy_bound = bound;
  rep.dims = GradedDims(k_min, k_max);
  for (int k = k_min; k <= k_max; ++k) {
    UnknownBlocks<F> blocks(R, degrees, k);
    if (blocks.total == 0) continue;
    check_size(blocks.total, options.max_problem_size, "T1 unknown space");
    std::vector<std::size_t> cond_offset;
    std::size_t cond_total = 0;
    for (const auto& c : conditions) {
      cond_offset.push_back(cond_total);
      int e = static_cast<int>(c.degree) + k;
      if (e >= 0) cond_total += R.dim(e);
    }
    check_size(cond_total, options.max_problem_size, "T1 condition space");
    Echelon<F> cond(R.field(), cond_total);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!blocks.present[i]) continue;
      const auto basis = R.basis(static_cast<int>(degrees[i]) + k);
      for (const auto& u : basis) {
        SparseVec<F> v;
        for (std::size_t c = 0; c < conditions.size(); ++c) {
          const auto& si = (*conditions[c].s)[i];
          if (si.is_zero()) continue;
          for (const auto& [idx, coeff] : R.normal_form(si, u))
            v.emplace_back(static_cast<std::uint32_t>(cond_offset[c] + idx), coeff);
        }
        if (!v.empty()) cond.insert(v);
      }
    }
    const std::size_t hom = blocks.total - cond.rank();
    const std::size_t der = derivation_rank(R, gens, partials, blocks, k, options.max_problem_size);
    rep.dims.set(k, hom - der);
  }
  return rep;
}

template <class F>
T1Report t1_auto(const Ideal<F>& ideal, int k_min, int k_max, const T1Options& options) {
  if (ideal.size() == 1) return t1_hypersurface(ideal.generators().front(), k_min, k_max, options);
  if (is_regular_sequence(ideal)) return t1_complete_intersection(ideal, k_min, k_max, options);
  return t1_graded(ideal, k_min, k_max, options);
}

SymmetryResult check_t1_symmetry(const T1Report& report, int c) {
  SymmetryResult res;
  const auto& d = report.dims;
  if (c - d.k_min() != d.k_max() - c)
    throw DomainError("asymmetric-range", "range " + std::to_string(d.k_min()) + ".." + std::to_string(d.k_max()) +
                                              " is not symmetric about " + std::to_string(c));
  for (int k = 1; d.contains(c + k); ++k) {
    ++res.pairs_checked;
    if (d.at(c - k) != d.at(c + k)) {
      res.ok = false;
      res.first_violation = k;
      break;
    }
  }
  return res;
}

GradedDims restrict_to_multiples(const GradedDims& dims, int index) {
  if (index < 1) throw DomainError("bad-index", "index must be positive");
  int lo = ceil_div(dims.k_min(), index), hi = floor_div(dims.k_max(), index);
  if (lo > hi) throw DomainError("bad-range", "no multiples of the index in range");
  GradedDims out(lo, hi);
  for (int k = lo; k <= hi; ++k) out.set(k, dims.at(k * index));
  return out;
}

template <class F>
Ideal<F> veronese_ideal(const Ideal<F>& ideal, std::uint32_t index, std::uint32_t max_degree) {
  QuotientRing<F> R(ideal.groebner_ptr());
  const auto basis = R.basis(static_cast<int>(index));
  if (basis.size() > kMaxVars)
    throw DomainError("too-many-variables", "the re-embedding needs " + std::to_string(basis.size()) + " variables");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < basis.size(); ++i) names.push_back("y" + std::to_string(i));
  RingPtr yring = make_ring(names, std::vector<std::uint32_t>(basis.size(), 1), ideal.ring().field());
  F field = field_of<F>(*yring);
  MonomialIndex yindex(*yring);
  std::vector<Polynomial<F>> gens;
  for (std::uint32_t e = 2; e <= max_degree; ++e) {
    const auto& ymons = yindex.basis(e);
    std::size_t rdim = R.dim(static_cast<int>(e * index));
    std::vector<SparseVec<F>> rows(rdim);
    for (std::size_t c = 0; c < ymons.size(); ++c) {
      Monomial prod;
      for (std::size_t v = 0; v < basis.size(); ++v)
        for (std::uint16_t p = 0; p < ymons[c][v]; ++p) prod = prod * basis[v];
      for (const auto& [idx, coeff] : R.normal_form(prod)) rows[idx].emplace_back(static_cast<std::uint32_t>(c), coeff);
    }
    Echelon<F> known(field, ymons.size());
    for (const auto& g : gens)
      for (const auto& m : yindex.basis(e - g.degree())) {
        SparseVec<F> v;
        for (const auto& t : g.terms()) v.emplace_back(yindex.position(t.monomial * m), t.coeff);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        known.insert(v);
      }
    for (const auto& v : right_kernel(field, ymons.size(), rows)) {
      if (!known.insert(v)) continue;
      std::vector<Term<F>> terms;
      for (const auto& [idx, coeff] : v) terms.push_back({ymons[idx], coeff});
      gens.emplace_back(yring, std::move(terms));
    }
  }
  return Ideal<F>(yring, std::move(gens));
}

#define CONEKIT_INSTANTIATE(F)                                                                       \
  template std::uint32_t syzygy_degree_bound<F>(const Ideal<F>&);                                   \
  template std::vector<SyzygyBlock<F>> syzygies<F>(const Ideal<F>&, std::uint32_t, std::size_t);    \
  template bool is_regular_sequence<F>(const Ideal<F>&);                                            \
  template int a_invariant<F>(const Ideal<F>&);                                                     \
  template bool has_isolated_singularity<F>(const Ideal<F>&, std::size_t);                          \
  template T1Report t1_hypersurface<F>(const Polynomial<F>&, int, int, const T1Options&);           \
  template T1Report t1_complete_intersection<F>(const Ideal<F>&, int, int, const T1Options&);       \
  template T1Report t1_graded<F>(const Ideal<F>&, int, int, const T1Options&);                      \
  template T1Report t1_auto<F>(const Ideal<F>&, int, int, const T1Options&);                        \
  template Ideal<F> veronese_ideal<F>(const Ideal<F>&, std::uint32_t, std::uint32_t);
CONEKIT_FOR_EACH_FIELD(CONEKIT_INSTANTIATE)
#undef CONEKIT_INSTANTIATE

}  // namespace conekit
