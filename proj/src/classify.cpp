#include "conekit/classify.hpp"

#include "conekit/error.hpp"

namespace conekit {

std::string answer_name(Answer a) {
  switch (a) {
    case Answer::SmoothableGeneral:
      return "SmoothableGeneral";
    case Answer::ConicalOnlyGeneral:
      return "ConicalOnlyGeneral";
    case Answer::Smoothable:
      return "Smoothable";
    case Answer::ConicalOnly:
      return "ConicalOnly";
    case Answer::NotSmoothable:
      return "NotSmoothable";
    case Answer::NeedsDegree:
      return "NeedsDegree";
  }
  return "unknown";
}

std::string subject_name(SubjectKind k) {
  switch (k) {
    case SubjectKind::K3:
      return "k3";
    case SubjectKind::Elliptic:
      return "elliptic";
    case SubjectKind::Abelian:
      return "abelian";
  }
  return "unknown";
}

namespace {

void require_at_least(int value, int lo, const std::string& what) {
  if (value < lo)
    throw DomainError("out-of-range", what + " must be at least " + std::to_string(lo) + ", got " +
                                          std::to_string(value));
}

}  // namespace

Verdict classify_k3_cone(int g) {
  require_at_least(g, 2, "genus");
  Verdict v{{SubjectKind::K3, g}, Answer::SmoothableGeneral, {}, {"k3.genus-classification"}};
  if (g <= 10 || g == 12) return v;
  v.answer = Answer::ConicalOnlyGeneral;
  v.caveats.push_back("applies to a general K3 surface of this genus; special ones, e.g. hyperplane sections "
                      "of suitable Fano 3-folds, can have smoothable cones");
  v.citations.push_back("k3.special-smoothable");
  if (g > 32) {
    v.caveats.push_back("genus is larger than any genus in the Mori-Mukai classification, so no smoothing of the "
                        "affine cone lifts to the projective cone; smoothability of special members is open");
    v.citations.push_back("k3.fano-genus-bound");
  }
  return v;
}

Verdict classify_elliptic_cone(int d) {
  require_at_least(d, 1, "degree");
  Verdict v{{SubjectKind::Elliptic, d}, d <= 9 ? Answer::Smoothable : Answer::NotSmoothable, {}, {"elliptic.degree-bound"}};
  return v;
}

Verdict classify_abelian_cone(int n) {
  require_at_least(n, 1, "dimension");
  if (n == 1)
    return {{SubjectKind::Abelian, n},
            Answer::NeedsDegree,
            {"abelian varieties of dimension 1 are elliptic curves; the answer depends on the degree"},
            {"elliptic.degree-bound"}};
  return {{SubjectKind::Abelian, n}, Answer::ConicalOnly, {}, {"abelian.conical"}};
}

int generic_clifford_index(int g) {
  require_at_least(g, 2, "genus");
  return (g - 1) / 2;
}

bool wahl_vanishing_predicted(int g) { return generic_clifford_index(g) > 2; }

long chi_tangent_twist(int g, int k) {
  require_at_least(g, 2, "genus");
  if (k == 0) throw DomainError("zero-twist", "the estimate needs a nonzero twist");
  return 20L - static_cast<long>(k) * k * (2L * g - 2);
}

FanoTable higher_index_table(int g) {
  static const std::vector<FanoRow> rows = {
      {2, "W_6 in P(1,1,1,2,3)", 2, "del Pezzo 3-fold of degree 1"},
      {3, "W_4 in P(1^4,4)", 4, "P^3"},
      {3, "W_4 in P(1^4,2)", 2, "del Pezzo 3-fold of degree 2"},
      {4, "W_{2,3} in P(1^5,2)", 2, "cubic 3-fold"},
      {4, "W_{2,3} in P(1^5,3)", 3, "quadric 3-fold"},
      {5, "W_{2,2,2} in P(1^6,2)", 2, "intersection of two quadrics"},
      {6, "H1 cap H2 cap H3 cap Gr(2,5) in P^6", 2, "del Pezzo 3-fold of degree 5"},
  };
  FanoTable t;
  for (const auto& r : rows)
    if (r.genus == g) t.rows.push_back(r);
  if (t.rows.empty())
    t.note = "no Fano 3-fold of Picard rank 1 and index > 1 for this genus; P1xP1xP1 and P2xP2 have "
             "Picard rank > 1 and are not listed";
  return t;
}

}  // namespace conekit
