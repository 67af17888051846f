#pragma once

#include <string>
#include <vector>

namespace conekit {

enum class SubjectKind { K3, Elliptic, Abelian };

struct Subject {
  SubjectKind kind = SubjectKind::K3;
  /// Genus for K3, degree for elliptic, dimension for abelian.
  int value = 0;
};

/// `...General` answers hold for a general member only.
enum class Answer { SmoothableGeneral, ConicalOnlyGeneral, Smoothable, ConicalOnly, NotSmoothable, NeedsDegree };

std::string answer_name(Answer a);
std::string subject_name(SubjectKind k);

struct Verdict {
  Subject subject;
  Answer answer = Answer::NeedsDegree;
  std::vector<std::string> caveats;
  /// Stable anchor keys naming the fact each verdict rests on.
  std::vector<std::string> citations;
};

/// Cone over a general K3 surface of genus g >= 2.
Verdict classify_k3_cone(int g);
/// Cone over an elliptic curve embedded by a divisor of degree d >= 1.
Verdict classify_elliptic_cone(int d);
/// Cone over an abelian variety of dimension n >= 1.
Verdict classify_abelian_cone(int n);

/// floor((g - 1) / 2) for g >= 2.
int generic_clifford_index(int g);
/// Whether T^1(k) = 0 for |k| >= 2 is predicted for a general K3 of genus g.
bool wahl_vanishing_predicted(int g);
/// -chi(T_S(kL)) = 20 - k^2 (2g - 2) on a K3 surface; k != 0.
long chi_tangent_twist(int g, int k);

struct FanoRow {
  int genus = 0;
  std::string model;
  int index = 0;
  std::string description;
};

struct FanoTable {
  std::vector<FanoRow> rows;
  /// Set when no rows exist for the genus.
  std::string note;
};

/// Fano 3-folds of Picard rank one and index > 1 whose anticanonical
/// sections through a K3 of genus g give the rows.
FanoTable higher_index_table(int g);

}  // namespace conekit
