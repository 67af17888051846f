#include "conekit/pfaffian.hpp"

#include <algorithm>
#include <queue>

#include "conekit/error.hpp"
#include "conekit/groebner.hpp"
#include "conekit/linalg.hpp"
#include "conekit/random.hpp"

namespace conekit {

template <class F>
SkewMatrix<F>::SkewMatrix(RingPtr ring, std::size_t n, std::vector<Polynomial<F>> upper)
    : ring_(std::move(ring)), n_(n), upper_(std::move(upper)) {
  if (upper_.size() != n * (n - 1) / 2)
    throw DomainError("matrix-entries", "skew matrix of size " + std::to_string(n) + " needs " +
                                            std::to_string(n * (n - 1) / 2) + " entries");
  for (const auto& p : upper_) require_same_ring(*ring_, p.ring());
}

template <class F>
std::size_t SkewMatrix<F>::slot(std::size_t i, std::size_t j) const {
  // Entries before row i: sum_{r<i} (n-1-r).
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

template <class F>
Polynomial<F> SkewMatrix<F>::entry(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw DomainError("index-out-of-range", "matrix index out of range");
  if (i == j) return Polynomial<F>(ring_);
  if (i < j) return upper_[slot(i, j)];
  return -upper_[slot(j, i)];
}

template <class F>
void SkewMatrix<F>::set(std::size_t i, std::size_t j, Polynomial<F> p) {
  if (i >= n_ || j >= n_ || i == j) throw DomainError("index-out-of-range", "matrix index out of range");
  require_same_ring(*ring_, p.ring());
  if (i < j) upper_[slot(i, j)] = std::move(p);
  else upper_[slot(j, i)] = -p;
}

template <class F>
std::optional<std::vector<int>> SkewMatrix<F>::doubled_twists() const {
  const int unset = 0;
  std::vector<int> sign(n_, unset), offset(n_, 0);
  std::vector<int> t(n_, 0);
  for (std::size_t root = 0; root < n_; ++root) {
    if (sign[root] != unset) continue;
    std::vector<std::size_t> component;
    std::optional<int> x;
    sign[root] = 1;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      component.push_back(i);
      for (std::size_t j = 0; j < n_; ++j) {
        if (j == i) continue;
        auto e = entry(i, j);
        if (e.is_zero()) continue;
        if (!e.is_homogeneous()) return std::nullopt;
        int twice = 2 * static_cast<int>(e.degree());
        if (sign[j] == unset) {
          sign[j] = -sign[i];
          offset[j] = twice - offset[i];
          q.push(j);
          continue;
        }
        int s = sign[i] + sign[j];
        int rest = twice - offset[i] - offset[j];
        if (s == 0) {
          if (rest != 0) return std::nullopt;
        } else {
          if (rest % 2 != 0) return std::nullopt;
          int value = rest / s;
          if (x && *x != value) return std::nullopt;
          x = value;
        }
      }
    }
    if (!x) return std::nullopt;
    for (auto i : component) t[i] = sign[i] * *x + offset[i];
  }
  return t;
}

template <class F>
std::optional<int> SkewMatrix<F>::degree(std::size_t i, std::size_t j) const {
  auto e = entry(i, j);
  if (!e.is_zero()) {
    if (!e.is_homogeneous()) return std::nullopt;
    return static_cast<int>(e.degree());
  }
  auto t = doubled_twists();
  if (!t || ((*t)[i] + (*t)[j]) % 2 != 0) return std::nullopt;
  return ((*t)[i] + (*t)[j]) / 2;
}

template <class F>
SkewMatrix<F> SkewMatrix<F>::without(std::size_t k) const {
  std::vector<Polynomial<F>> up;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (i != k && j != k) up.push_back(upper_[slot(i, j)]);
  return SkewMatrix(ring_, n_ - 1, std::move(up));
}

template <class F>
SkewMatrix<F> skew_matrix_from_block(const RingPtr& ring, const MatrixBlock& block) {
  std::vector<Polynomial<F>> up;
  for (const auto& e : block.entries) up.push_back(parse_poly<F>(ring, e.text, e.pos).poly);
  return SkewMatrix<F>(ring, block.size, std::move(up));
}

namespace {

template <class F>
Polynomial<F> pfaffian_rec(const SkewMatrix<F>& m, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return Polynomial<F>::from_int(m.ring_ptr(), 1);
  Polynomial<F> acc(m.ring_ptr());
  for (std::size_t j = 1; j < idx.size(); ++j) {
    auto e = m.entry(idx[0], idx[j]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> rest;
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    Polynomial<F> term = e * pfaffian_rec(m, rest);
    if (j % 2 == 1) acc += term;
    else acc -= term;
  }
  return acc;
}

template <class F>
const Monomial& lex_leading(const Polynomial<F>& p) {
  const Monomial* best = &p.terms().front().monomial;
  for (const auto& t : p.terms())
    if (lex_compare(t.monomial, *best) > 0) best = &t.monomial;
  return *best;
}

}  // namespace

template <class F>
Polynomial<F> pfaffian(const SkewMatrix<F>& m) {
  if (m.size() % 2 != 0) throw DomainError("odd-size", "Pfaffians need an even-sized matrix");
  std::vector<std::size_t> idx(m.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pfaffian_rec(m, idx);
}

template <class F>
std::vector<Polynomial<F>> pfaffians_4x4(const SkewMatrix<F>& m) {
  if (m.size() != 5) throw DomainError("wrong-size", "expected a 5x5 skew matrix");
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < 5; ++i) {
    Polynomial<F> p = pfaffian(m.without(i));
    out.push_back(i % 2 == 0 ? p : -p);
  }
  return out;
}

template <class F>
std::vector<Polynomial<F>> normalize_for_display(std::vector<Polynomial<F>> polys) {
  for (auto& p : polys) {
    if (p.is_zero()) continue;
    const Monomial& lead = lex_leading(p);
    if (p.field().signed_magnitude(p.coefficient(lead)).first) p = -p;
  }
  std::stable_sort(polys.begin(), polys.end(), [](const Polynomial<F>& a, const Polynomial<F>& b) {
    if (a.is_zero() || b.is_zero()) return !a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_compare(lex_leading(a), lex_leading(b)) > 0;
  });
  return polys;
}

template <class F>
std::string format_polynomials(const std::vector<Polynomial<F>>& polys) {
  std::string s;
  for (const auto& p : polys) {
    if (!s.empty()) s += ", ";
    s += p.to_string();
  }
  return s;
}

std::string mode_name(DeformMode m) { return m == DeformMode::Affine ? "affine" : "projective-cone"; }

template <class F>
SkewMatrix<F> deform_matrix(const SkewMatrix<F>& m, const typename F::Element& lambda,
                            const std::vector<Polynomial<F>>& h, DeformMode mode) {
  if (m.size() != 5) throw DomainError("wrong-size", "expected a 5x5 skew matrix");
  if (h.size() != 3) throw DomainError("arity", "expected three perturbations h1, h2, h3");
  const auto& ring = m.ring_ptr();
  F field = field_of<F>(*ring);
  const std::pair<std::size_t, std::size_t> slots[3] = {{2, 3}, {2, 4}, {3, 4}};
  if (mode == DeformMode::ProjectiveCone) {
    auto d01 = m.degree(0, 1);
    if (!d01) throw DomainError("unknown-degrees", "entry degrees are not determined by the matrix");
    if (!field.is_zero(lambda) && *d01 < 0)
      throw DomainError("degree-violation", "a constant in a slot of degree " + std::to_string(*d01) +
                                                " is not allowed for deformations of the projective cone");
    for (std::size_t k = 0; k < 3; ++k) {
      auto d = m.degree(slots[k].first, slots[k].second);
      if (!d) throw DomainError("unknown-degrees", "entry degrees are not determined by the matrix");
      for (const auto& t : h[k].terms())
        if (static_cast<int>(t.monomial.weighted_degree()) > *d)
          throw DomainError("degree-violation", "h" + std::to_string(k + 1) + " has a term of degree " +
                                                    std::to_string(t.monomial.weighted_degree()) + " above " +
                                                    std::to_string(*d));
    }
  }
  SkewMatrix<F> out = m;
  out.set(0, 1, m.entry(0, 1) + Polynomial<F>::constant(ring, lambda));
  for (std::size_t k = 0; k < 3; ++k) out.set(slots[k].first, slots[k].second, m.entry(slots[k].first, slots[k].second) + h[k]);
  return out;
}

template <class F>
JacobianRank jacobian_rank_at(const std::vector<Polynomial<F>>& polys, const std::vector<typename F::Element>& point) {
  JacobianRank res;
  if (polys.empty()) {
    res.on_variety = true;
    return res;
  }
  const auto& ring = polys.front().ring();
  if (point.size() != ring.num_vars())
    throw DomainError("dimension-mismatch", "point has " + std::to_string(point.size()) + " coordinates, ring has " +
                                                std::to_string(ring.num_vars()) + " variables");
  F field = polys.front().field();
  res.on_variety = true;
  Echelon<F> ech(field, ring.num_vars());
  for (const auto& f : polys) {
    require_same_ring(ring, f.ring());
    if (!field.is_zero(f.evaluate(point))) res.on_variety = false;
    SparseVec<F> row;
    for (std::size_t j = 0; j < ring.num_vars(); ++j) {
      auto v = f.derivative(j).evaluate(point);
      if (!field.is_zero(v)) row.emplace_back(static_cast<std::uint32_t>(j), v);
    }
    ech.insert(row);
  }
  res.rank = ech.rank();
  return res;
}

std::string status_name(SampleStatus s) {
  switch (s) {
    case SampleStatus::SmoothSampled:
      return "smooth-sampled";
    case SampleStatus::SingularWitness:
      return "singular-witness";
    case SampleStatus::NoPoints:
      return "no-points";
  }
  return "unknown";
}

namespace {

using UPoly = std::vector<std::uint32_t>;

struct ModP {
  std::uint32_t p;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, p - b % p); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>(std::uint64_t{a} * b % p); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1 % p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const { return pow(a, p - 2); }
};

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly poly_mod(UPoly a, const UPoly& b, const ModP& k) {
  trim(a);
  std::uint32_t lead_inv = k.inv(b.back());
  while (a.size() >= b.size()) {
    std::uint32_t c = k.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = k.sub(a[i + shift], k.mul(c, b[i]));
    trim(a);
  }
  return a;
}

UPoly poly_mulmod(const UPoly& a, const UPoly& b, const UPoly& m, const ModP& k) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  return poly_mod(std::move(r), m, k);
}

UPoly poly_powmod(UPoly base, std::uint64_t e, const UPoly& m, const ModP& k) {
  UPoly r{1};
  r = poly_mod(r, m, k);
  base = poly_mod(base, m, k);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, k);
    base = poly_mulmod(base, base, m, k);
    e >>= 1;
  }
  return r;
}

UPoly poly_gcd(UPoly a, UPoly b, const ModP& k) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_mod(a, b, k);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint32_t inv = k.inv(a.back());
    for (auto& c : a) c = k.mul(c, inv);
  }
  return a;
}

UPoly poly_div_exact(UPoly a, const UPoly& b, const ModP& k) {
  trim(a);
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  std::uint32_t lead_inv = k.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    std::uint32_t c = k.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = k.sub(a[i + shift], k.mul(c, b[i]));
    trim(a);
  }
  return q;
}

void split_linear(const UPoly& g, const ModP& k, Rng& rng, std::vector<std::uint32_t>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(k.sub(0, k.mul(g[0], k.inv(g[1]))));
    return;
  }
  while (true) {
    std::uint32_t a = static_cast<std::uint32_t>(rng.uniform(0, k.p - 1));
    UPoly h = poly_powmod({a, 1}, (k.p - 1) / 2, g, k);
    if (h.empty()) h = {0};
    h[0] = k.sub(h[0], 1);
    UPoly d = poly_gcd(g, h, k);
    if (d.size() > 1 && d.size() < g.size()) {
      split_linear(d, k, rng, out);
      split_linear(poly_div_exact(g, d, k), k, rng, out);
      return;
    }
  }
}

/// Characteristic polynomial of a dense square matrix over GF(p) via
/// reduction to upper Hessenberg form.
UPoly charpoly(std::vector<std::vector<std::uint32_t>> a, const ModP& k) {
  const std::size_t n = a.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && a[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(a[piv], a[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(a[r][piv], a[r][m]);
    }
    std::uint32_t inv = k.inv(a[m][m - 1]);
    for (std::size_t i = m + 1; i < n; ++i) {
      std::uint32_t c = k.mul(a[i][m - 1], inv);
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) a[i][j] = k.sub(a[i][j], k.mul(c, a[m][j]));
      for (std::size_t r = 0; r < n; ++r) a[r][m] = k.add(a[r][m], k.mul(c, a[r][i]));
    }
  }
  std::vector<UPoly> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    UPoly cur(m + 1, 0);
    for (std::size_t i = 0; i < p[m - 1].size(); ++i) {
      cur[i + 1] = k.add(cur[i + 1], p[m - 1][i]);
      cur[i] = k.sub(cur[i], k.mul(a[m - 1][m - 1], p[m - 1][i]));
    }
    std::uint32_t prod = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      prod = k.mul(prod, a[i + 1][i]);
      if (prod == 0) break;
      std::uint32_t c = k.mul(a[i][m - 1], prod);
      for (std::size_t j = 0; j < p[i].size(); ++j) cur[j] = k.sub(cur[j], k.mul(c, p[i][j]));
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

}  // namespace

std::vector<std::uint32_t> roots_mod_p(std::vector<std::uint32_t> coeffs, std::uint32_t p, std::uint64_t seed) {
  ModP k{p};
  for (auto& c : coeffs) c %= p;
  trim(coeffs);
  if (coeffs.empty()) throw DomainError("zero-polynomial", "the zero polynomial has every element as a root");
  std::vector<std::uint32_t> out;
  if (coeffs[0] == 0) {
    out.push_back(0);
    while (!coeffs.empty() && coeffs[0] == 0) coeffs.erase(coeffs.begin());
  }
  if (coeffs.size() <= 1) return out;
  if (p < 4096) {
    for (std::uint32_t x = 1; x < p; ++x) {
      std::uint32_t v = 0;
      for (std::size_t i = coeffs.size(); i-- > 0;) v = k.add(k.mul(v, x), coeffs[i]);
      if (v == 0) out.push_back(x);
    }
    return out;
  }
  UPoly xp = poly_powmod({0, 1}, p, coeffs, k);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = k.sub(xp[1], 1);
  UPoly g = poly_gcd(coeffs, xp, k);
  Rng rng(seed);
  split_linear(g, k, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

SampleVerdict smoothness_sample(const std::vector<Polynomial<PrimeField>>& polys, std::size_t expected_dim,
                                std::size_t points, std::uint64_t seed, const SampleOptions& options) {
  using P = Polynomial<PrimeField>;
  if (polys.empty()) throw DomainError("empty-ideal", "no polynomials to sample");
  if (points == 0) throw DomainError("bad-trials", "at least one sample point is required");
  const auto& ring = polys.front().ring();
  const std::size_t n = ring.num_vars();
  if (expected_dim >= n) throw DomainError("bad-dimension", "expected dimension must be below the number of variables");
  const std::size_t codim = n - expected_dim;
  PrimeField field(ring.field());
  ModP k{field.characteristic()};
  SampleVerdict v;

  auto record = [&](const std::vector<std::uint32_t>& x) {
    auto jr = jacobian_rank_at(polys, x);
    ++v.points_sampled;
    if (jr.rank < codim) {
      v.status = SampleStatus::SingularWitness;
      v.witness = x;
      v.witness_rank = jr.rank;
      return true;
    }
    return false;
  };

  std::vector<std::uint32_t> origin(n, 0);
  bool origin_on = std::all_of(polys.begin(), polys.end(), [&](const P& f) { return f.evaluate(origin) == 0; });
  if (origin_on && record(origin)) return v;

  std::vector<std::string> tnames;
  for (std::size_t j = 0; j < codim; ++j) tnames.push_back("t" + std::to_string(j));
  RingPtr tring = make_ring(tnames, std::vector<std::uint32_t>(codim, 1), ring.field());
  Rng rng(seed);
  const std::size_t max_slices = std::max<std::size_t>(1, points * options.slices_per_point);
  auto random_elem = [&] { return static_cast<std::uint32_t>(rng.uniform(0, k.p - 1)); };

  while (v.points_sampled < points && v.slices_tried < max_slices) {
    ++v.slices_tried;
    std::vector<std::uint32_t> a(n);
    std::vector<std::vector<std::uint32_t>> b(n, std::vector<std::uint32_t>(codim));
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = random_elem();
      for (std::size_t j = 0; j < codim; ++j) b[i][j] = random_elem();
    }
    std::vector<P> images;
    for (std::size_t i = 0; i < n; ++i) {
      P img = P::constant(tring, a[i]);
      for (std::size_t j = 0; j < codim; ++j) img += P::term(tring, tring->variable(j), b[i][j]);
      images.push_back(std::move(img));
    }
    std::vector<P> sliced;
    for (const auto& f : polys) {
      P s = f.substitute(images);
      if (!s.is_zero()) sliced.push_back(std::move(s));
    }
    if (sliced.empty()) continue;
    auto ag = affine_groebner(sliced);
    if (ag.is_unit() || !ag.is_zero_dimensional()) continue;
    auto basis = ag.standard_monomials();
    const std::size_t N = basis.size();
    std::unordered_map<Monomial, std::size_t, MonomialHash> pos;
    for (std::size_t i = 0; i < N; ++i) pos.emplace(basis[i], i);
    auto coords = [&](const P& f) {
      std::vector<std::uint32_t> c(N, 0);
      P nf = ag.normal_form(f);
      for (const auto& t : nf.terms()) c[pos.at(t.monomial)] = t.coeff;
      return c;
    };
    P u(ag.ring);
    for (std::size_t j = 0; j < codim; ++j) u += P::term(ag.ring, ag.ring->variable(j), random_elem());
    // mt[c] = coordinates of NF(u * basis[c]), the rows of M^T.
    std::vector<std::vector<std::uint32_t>> mt(N);
    for (std::size_t c = 0; c < N; ++c) mt[c] = coords(u * P::term(ag.ring, basis[c], 1));
    std::vector<std::vector<std::uint32_t>> tcoords;
    for (std::size_t j = 0; j < codim; ++j) tcoords.push_back(coords(P::variable(ag.ring, j)));
    const std::size_t one = pos.at(Monomial{});

    auto roots = roots_mod_p(charpoly(mt, k), k.p, seed ^ (0x9E3779B97F4A7C15ull * v.slices_tried));
    for (auto lambda : roots) {
      std::vector<SparseVec<PrimeField>> rows(N);
      for (std::size_t c = 0; c < N; ++c) {
        for (std::size_t r = 0; r < N; ++r) {
          std::uint32_t val = mt[c][r];
          if (r == c) val = k.sub(val, lambda);
          if (val) rows[c].emplace_back(static_cast<std::uint32_t>(r), val);
        }
      }
      auto ker = right_kernel(field, N, rows);
      if (ker.size() != 1) continue;
      std::vector<std::uint32_t> w(N, 0);
      for (const auto& [i, c] : ker[0]) w[i] = c;
      if (w[one] == 0) continue;
      std::uint32_t inv = k.inv(w[one]);
      for (auto& c : w) c = k.mul(c, inv);
      std::vector<std::uint32_t> x = a;
      for (std::size_t j = 0; j < codim; ++j) {
        std::uint32_t tj = 0;
        for (std::size_t r = 0; r < N; ++r) tj = k.add(tj, k.mul(w[r], tcoords[j][r]));
        for (std::size_t i = 0; i < n; ++i) x[i] = k.add(x[i], k.mul(b[i][j], tj));
      }
      if (!std::all_of(polys.begin(), polys.end(), [&](const P& f) { return f.evaluate(x) == 0; })) continue;
      if (record(x)) return v;
      if (v.points_sampled >= points) break;
    }
  }
  v.status = v.points_sampled > 0 ? SampleStatus::SmoothSampled : SampleStatus::NoPoints;
  return v;
}

#define CONEKIT_INSTANTIATE(F)                                                                              \
  template class SkewMatrix<F>;                                                                             \
  template SkewMatrix<F> skew_matrix_from_block<F>(const RingPtr&, const MatrixBlock&);                     \
  template Polynomial<F> pfaffian<F>(const SkewMatrix<F>&);                                                 \
  template std::vector<Polynomial<F>> pfaffians_4x4<F>(const SkewMatrix<F>&);                               \
  template std::vector<Polynomial<F>> normalize_for_display<F>(std::vector<Polynomial<F>>);                 \
  template std::string format_polynomials<F>(const std::vector<Polynomial<F>>&);                            \
  template SkewMatrix<F> deform_matrix<F>(const SkewMatrix<F>&, const typename F::Element&,                 \
                                          const std::vector<Polynomial<F>>&, DeformMode);                   \
  template JacobianRank jacobian_rank_at<F>(const std::vector<Polynomial<F>>&,                              \
                                            const std::vector<typename F::Element>&);
CONEKIT_FOR_EACH_FIELD(CONEKIT_INSTANTIATE)
#undef CONEKIT_INSTANTIATE

}  // namespace conekit
