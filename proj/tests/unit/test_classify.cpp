#include <algorithm>
#include <string>

#include "../support/helpers.hpp"
#include "conekit/classify.hpp"
#include "conekit/t1.hpp"
#include "doctest.h"

using namespace conekit;
using testing_support::error_code;
using testing_support::model_ideal;

namespace {

bool cites(const Verdict& v, const std::string& key) {
  return std::find(v.citations.begin(), v.citations.end(), key) != v.citations.end();
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("K3 cones by genus") {
    for (int g = 2; g <= 40; ++g) {
      CAPTURE(g);
      auto v = classify_k3_cone(g);
      bool smoothable = g <= 10 || g == 12;
      CHECK(v.answer == (smoothable ? Answer::SmoothableGeneral : Answer::ConicalOnlyGeneral));
      CHECK(v.subject.kind == SubjectKind::K3);
      CHECK(v.subject.value == g);
      CHECK(cites(v, "k3.genus-classification"));
      CHECK(v.caveats.empty() == smoothable);
      CHECK(cites(v, "k3.fano-genus-bound") == (g > 32));
    }
    CHECK(error_code([] { classify_k3_cone(1); }) == "out-of-range");
  }

  TEST_CASE("elliptic and abelian cones") {
    for (int d = 1; d <= 12; ++d) {
      CAPTURE(d);
      CHECK(classify_elliptic_cone(d).answer == (d <= 9 ? Answer::Smoothable : Answer::NotSmoothable));
    }
    CHECK(classify_abelian_cone(1).answer == Answer::NeedsDegree);
    CHECK_FALSE(classify_abelian_cone(1).caveats.empty());
    for (int n = 2; n <= 5; ++n) CHECK(classify_abelian_cone(n).answer == Answer::ConicalOnly);
    CHECK(error_code([] { classify_elliptic_cone(0); }) == "out-of-range");
    CHECK(error_code([] { classify_abelian_cone(0); }) == "out-of-range");
  }

  TEST_CASE("names") {
    CHECK(answer_name(Answer::SmoothableGeneral) == "SmoothableGeneral");
    CHECK(answer_name(Answer::ConicalOnly) == "ConicalOnly");
    CHECK(subject_name(SubjectKind::Elliptic) == "elliptic");
  }

  TEST_CASE("Clifford index and Euler characteristic") {
    CHECK(generic_clifford_index(2) == 0);
    CHECK(generic_clifford_index(6) == 2);
    CHECK(generic_clifford_index(7) == 3);
    CHECK_FALSE(wahl_vanishing_predicted(6));
    CHECK(wahl_vanishing_predicted(7));
    CHECK(chi_tangent_twist(3, 1) == 16);
    CHECK(chi_tangent_twist(6, -2) == 20 - 40);
    CHECK(error_code([] { chi_tangent_twist(6, 0); }) == "zero-twist");
    CHECK(error_code([] { chi_tangent_twist(1, 1); }) == "out-of-range");
  }

  TEST_CASE("first-order twists match the computed T1") {
    struct Case {
      const char* model;
      int genus;
    };
    for (const auto& c : {Case{"quartic", 3}, Case{"genus4", 4}, Case{"genus5", 5}, Case{"genus6", 6}}) {
      CAPTURE(c.model);
      auto rep = t1_auto(model_ideal(c.model), -2, 2);
      CHECK(static_cast<long>(rep.dims.at(1)) == chi_tangent_twist(c.genus, 1));
      CHECK(static_cast<long>(rep.dims.at(-1)) == chi_tangent_twist(c.genus, -1));
      // None of these genera predicts vanishing in degree +-2, and none has it.
      CHECK_FALSE(wahl_vanishing_predicted(c.genus));
      CHECK(rep.dims.at(2) != 0);
    }
  }

  TEST_CASE("higher-index Fano table") {
    CHECK(higher_index_table(2).rows.size() == 1);
    CHECK(higher_index_table(3).rows.size() == 2);
    CHECK(higher_index_table(4).rows.size() == 2);
    CHECK(higher_index_table(5).rows.size() == 1);
    auto g6 = higher_index_table(6);
    REQUIRE(g6.rows.size() == 1);
    CHECK(g6.rows.front().index == 2);
    CHECK(g6.note.empty());
    std::size_t total = 0;
    for (int g = 2; g <= 40; ++g) total += higher_index_table(g).rows.size();
    CHECK(total == 7);
    auto g7 = higher_index_table(7);
    CHECK(g7.rows.empty());
    CHECK_FALSE(g7.note.empty());
  }
}
