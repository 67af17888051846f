#pragma once

// Dense brute-force T^1 for small standard-graded ideals over GF(p). It
// uses neither Groebner bases nor syzygy generators: the quotient S/I is
// formed degreewise as S_e / span{m f_i}, and every linear relation among
// the m f_i up to a degree bound constrains Hom(I, S/I).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "conekit/groebner.hpp"

namespace oracle {

using conekit::Monomial;
using conekit::MonomialHash;
using conekit::PrimeField;
using Vec = std::vector<std::uint32_t>;

struct ModP {
  std::uint32_t p;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, p - b); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>(std::uint64_t{a} * b % p); }
  std::uint32_t inv(std::uint32_t a) const {
    std::uint32_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

/// Rows kept in echelon form sorted by pivot; pivots restricted to the
/// first `limit` columns.
class Rref {
 public:
  Rref(ModP k, std::size_t limit) : k_(k), limit_(limit) {}

  Vec reduce(Vec v) const {
    for (const auto& [piv, row] : rows_) {
      std::uint32_t c = v[piv];
      if (c == 0) continue;
      for (std::size_t j = piv; j < v.size(); ++j) v[j] = k_.sub(v[j], k_.mul(c, row[j]));
    }
    return v;
  }

  /// Returns true if `v` was independent (and stores it).
  bool insert(Vec v) {
    v = reduce(std::move(v));
    std::size_t piv = 0;
    while (piv < limit_ && v[piv] == 0) ++piv;
    if (piv == limit_) return false;
    std::uint32_t inv = k_.inv(v[piv]);
    for (auto& x : v) x = k_.mul(x, inv);
    auto it = rows_.begin();
    while (it != rows_.end() && it->first < piv) ++it;
    rows_.insert(it, {piv, std::move(v)});
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  ModP k_;
  std::size_t limit_;
  std::vector<std::pair<std::size_t, Vec>> rows_;
};

inline std::size_t rank_of(ModP k, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  Rref r(k, vectors.front().size());
  for (const auto& v : vectors) r.insert(v);
  return r.rank();
}

class BruteForceT1 {
 public:
  using Poly = conekit::Polynomial<PrimeField>;

  explicit BruteForceT1(const conekit::Ideal<PrimeField>& ideal) : ideal_(ideal), ring_(ideal.ring()) {
    if (!ring_.is_standard_graded()) throw std::invalid_argument("oracle needs a standard grading");
    k_ = ModP{ring_.field().characteristic()};
  }

  /// Degree of the last nonzero piece of S/I, or nullopt if S/I is not
  /// Artinian within `limit`.
  std::optional<int> socle_degree(int limit = 40) {
    int last = -1;
    for (int e = 0; e <= limit; ++e) {
      if (quotient_dim(e) == 0) return last;
      last = e;
    }
    return std::nullopt;
  }

  /// dim T^1(k). Relations among the m f_i are taken in degrees up to
  /// `relation_top`, or up to socle - k when S/I is Artinian.
  std::uint64_t t1(int k, std::optional<int> relation_top = std::nullopt) {
    const auto& gens = ideal_.generators();
    int top;
    if (relation_top) top = *relation_top;
    else {
      auto s = socle_degree();
      if (!s) throw std::invalid_argument("relation bound required for non-Artinian ideals");
      top = *s - k;
    }
    // Unknowns: coefficients of phi(f_i) on all monomials of S_{d_i + k}.
    std::vector<std::size_t> offset;
    std::size_t unknowns = 0;
    std::size_t trivial = 0;
    for (const auto& f : gens) {
      offset.push_back(unknowns);
      int d = static_cast<int>(f.degree()) + k;
      unknowns += monomials(d).size();
      if (d >= 0) trivial += monomials(d).size() - quotient_dim(d);
    }
    std::vector<Vec> columns(unknowns);
    int dmin = static_cast<int>(gens.front().degree());
    for (const auto& f : gens) dmin = std::min(dmin, static_cast<int>(f.degree()));
    for (int e = dmin; e <= top; ++e) {
      if (e + k < 0) continue;
      const auto& target = monomials(e + k);
      for (const auto& rel : relations(e)) {
        std::vector<Vec> contrib(unknowns);
        for (std::size_t i = 0; i < gens.size(); ++i) {
          int d = static_cast<int>(gens[i].degree());
          if (d + k < 0) continue;
          const auto& mults = monomials(e - d);
          const auto& mus = monomials(d + k);
          for (std::size_t a = 0; a < mults.size(); ++a) {
            std::uint32_t c = rel[relation_offset(e, i) + a];
            if (c == 0) continue;
            for (std::size_t b = 0; b < mus.size(); ++b) {
              Vec& col = contrib[offset[i] + b];
              if (col.empty()) col.assign(target.size(), 0);
              col[index(e + k, mults[a] * mus[b])] = k_.add(col[index(e + k, mults[a] * mus[b])], c);
            }
          }
        }
        for (std::size_t u = 0; u < unknowns; ++u) {
          Vec reduced = contrib[u].empty() ? Vec(target.size(), 0) : reduce(e + k, contrib[u]);
          columns[u].insert(columns[u].end(), reduced.begin(), reduced.end());
        }
      }
    }
    std::size_t rank_conditions = columns.empty() || columns.front().empty() ? 0 : rank_of(k_, columns);
    std::uint64_t hom = unknowns - rank_conditions - trivial;

    std::vector<Vec> der;
    int hdeg = 1 + k;
    if (hdeg >= 0) {
      for (std::size_t j = 0; j < ring_.num_vars(); ++j) {
        for (const auto& h : monomials(hdeg)) {
          Vec v;
          for (const auto& f : gens) {
            int d = static_cast<int>(f.degree()) + k;
            if (d < 0) continue;
            Poly img = f.derivative(j).times_term(h, 1);
            auto r = reduce(d, dense(d, img));
            v.insert(v.end(), r.begin(), r.end());
          }
          der.push_back(std::move(v));
        }
      }
    }
    std::size_t rank_der = der.empty() || der.front().empty() ? 0 : rank_of(k_, der);
    return hom - rank_der;
  }

 private:
  const std::vector<Monomial>& monomials(int d) {
    static const std::vector<Monomial> none;
    if (d < 0) return none;
    auto it = mons_.find(d);
    if (it == mons_.end()) {
      it = mons_.emplace(d, ring_.monomials_of_degree(static_cast<std::uint32_t>(d))).first;
      auto& idx = index_[d];
      for (std::size_t i = 0; i < it->second.size(); ++i) idx.emplace(it->second[i], i);
    }
    return it->second;
  }

  std::size_t index(int d, const Monomial& m) {
    monomials(d);
    return index_.at(d).at(m);
  }

  Vec dense(int d, const Poly& p) {
    Vec v(monomials(d).size(), 0);
    for (const auto& t : p.terms()) v[index(d, t.monomial)] = t.coeff;
    return v;
  }

  /// Row space of I_d.
  const Rref& ideal_part(int d) {
    auto it = parts_.find(d);
    if (it != parts_.end()) return it->second;
    Rref r(k_, monomials(d).size());
    for (const auto& f : ideal_.generators()) {
      int e = d - static_cast<int>(f.degree());
      for (const auto& m : monomials(e)) r.insert(dense(d, f.times_term(m, 1)));
    }
    return parts_.emplace(d, std::move(r)).first->second;
  }

  std::size_t quotient_dim(int d) { return monomials(d).size() - ideal_part(d).rank(); }

  Vec reduce(int d, const Vec& v) { return ideal_part(d).reduce(v); }

  std::size_t relation_offset(int e, std::size_t i) {
    std::size_t off = 0;
    for (std::size_t j = 0; j < i; ++j) off += monomials(e - static_cast<int>(ideal_.generators()[j].degree())).size();
    return off;
  }

  /// Kernel of (c_{i,m}) -> sum c_{i,m} m f_i in S_e.
  std::vector<Vec> relations(int e) {
    const auto& gens = ideal_.generators();
    const std::size_t m = monomials(e).size();
    std::size_t n = 0;
    for (const auto& f : gens) n += monomials(e - static_cast<int>(f.degree())).size();
    Rref r(k_, m);
    std::vector<Vec> kernel;
    std::size_t col = 0;
    for (const auto& f : gens) {
      for (const auto& mult : monomials(e - static_cast<int>(f.degree()))) {
        Vec row = dense(e, f.times_term(mult, 1));
        row.resize(m + n, 0);
        row[m + col++] = 1;
        Vec rem = r.reduce(row);
        bool zero = true;
        for (std::size_t j = 0; j < m && zero; ++j) zero = rem[j] == 0;
        if (zero) kernel.emplace_back(rem.begin() + static_cast<std::ptrdiff_t>(m), rem.end());
        else r.insert(std::move(rem));
      }
    }
    return kernel;
  }

  const conekit::Ideal<PrimeField>& ideal_;
  const conekit::WeightedPolyRing& ring_;
  ModP k_{2};
  std::unordered_map<int, std::vector<Monomial>> mons_;
  std::unordered_map<int, std::unordered_map<Monomial, std::size_t, MonomialHash>> index_;
  std::unordered_map<int, Rref> parts_;
};

}  // namespace oracle
