// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "../support/golden_cases.hpp"
#include "../support/helpers.hpp"
#include "../support/t1_oracle.hpp"
#include "conekit/classify.hpp"
#include "conekit/homology.hpp"
#include "conekit/pfaffian.hpp"
#include "conekit/t1.hpp"
#include "json.hpp"

using namespace conekit;
using testing_support::model_ideal;
using P = Polynomial<PrimeField>;

namespace {

// Pinned limits.
constexpr double kQuarticSeconds = 1.0;
constexpr double kGenus6Seconds = 600.0;
constexpr int kGenus6Seeds = 5;
constexpr int kDeformations = 100;
constexpr std::size_t kSmoothPoints = 50;
constexpr int kOracleIdeals = 24;
constexpr std::size_t kMaxColength = 30;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

void fail(Outcome& o, const std::string& why) {
  o.pass = false;
  o.detail += (o.detail.empty() ? "" : "; ") + why;
}

// Shared between criteria 1, 3, 4 and 5.
T1Report quartic_report(double& seconds) {
  Timer t;
  auto rep = t1_auto(model_ideal("quartic"), -4, 4);
  seconds = t.seconds();
  return rep;
}

std::vector<T1Report> genus6_reports(double& seconds) {
  Timer t;
  std::vector<T1Report> out;
  for (int seed = 1; seed <= kGenus6Seeds; ++seed)
    out.push_back(t1_auto(model_ideal("genus6", static_cast<std::uint64_t>(seed)), -4, 4));
  seconds = t.seconds();
  return out;
}

Outcome criterion1(const T1Report& rep, double seconds) {
  Outcome o;
  const std::vector<std::uint64_t> want{1, 4, 10, 16, 19, 16, 10, 4, 1};
  if (rep.dims.values() != want) fail(o, "dims " + join(rep.dims.values()));
  if (seconds >= kQuarticSeconds) fail(o, "took " + fixed(seconds) + " s");
  if (o.pass) o.detail = "dims " + join(want) + " in " + fixed(seconds) + " s (limit " + fixed(kQuarticSeconds) + " s)";
  return o;
}

Outcome criterion2(const std::vector<T1Report>& reps, double seconds) {
  Outcome o;
  const std::vector<std::uint64_t> want{0, 0, 1, 10, 19, 10, 1, 0, 0};
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (reps[i].dims.values() != want) fail(o, "seed " + std::to_string(i + 1) + " dims " + join(reps[i].dims.values()));
  if (seconds >= kGenus6Seconds) fail(o, "took " + fixed(seconds) + " s");
  if (o.pass)
    o.detail = std::to_string(reps.size()) + " seeds give 1,10,19,10,1 on -2..2 and 0 at -4,-3,3,4 in " + fixed(seconds) +
               " s (limit " + fixed(kGenus6Seconds) + " s)";
  return o;
}

Outcome criterion3(const T1Report& quartic, const std::vector<T1Report>& genus6) {
  Outcome o;
  std::size_t pairs = 0;
  auto check = [&](const T1Report& r, const std::string& what) {
    auto s = check_t1_symmetry(r, 0);
    pairs += s.pairs_checked;
    if (!s.ok) fail(o, what + " asymmetric at " + std::to_string(*s.first_violation));
  };
  check(quartic, "quartic");
  for (std::size_t i = 0; i < genus6.size(); ++i) check(genus6[i], "genus 6 seed " + std::to_string(i + 1));
  if (o.pass) o.detail = std::to_string(pairs) + " pairs symmetric about 0";
  return o;
}

Outcome criterion4(const T1Report& quartic, const std::vector<T1Report>& genus6) {
  Outcome o;
  long q = chi_tangent_twist(3, 1), g = chi_tangent_twist(6, 1);
  if (q != 16 || static_cast<long>(quartic.dims.at(1)) != q) fail(o, "genus 3: chi " + std::to_string(q) + ", T1(1) " + std::to_string(quartic.dims.at(1)));
  if (g != 10 || static_cast<long>(genus6.front().dims.at(1)) != g)
    fail(o, "genus 6: chi " + std::to_string(g) + ", T1(1) " + std::to_string(genus6.front().dims.at(1)));
  if (o.pass) o.detail = "chi(3,1) = T1(1) = 16, chi(6,1) = T1(1) = 10";
  return o;
}

Outcome criterion5(const T1Report& quartic) {
  Outcome o;
  auto sum = quartic.dims.at(-2) + quartic.dims.at(-4);
  if (sum != 11) fail(o, "T1(-2) + T1(-4) = " + std::to_string(sum));
  else o.detail = "T1(-2) + T1(-4) = " + std::to_string(quartic.dims.at(-2)) + " + " + std::to_string(quartic.dims.at(-4)) + " = 11";
  return o;
}

std::vector<P> perturbation(const RingPtr& ring, Rng& rng) {
  std::vector<P> h;
  for (int i = 0; i < 3; ++i) {
    P hi(ring);
    for (std::uint32_t d = 0; d <= 3; ++d) hi += models::random_form<PrimeField>(ring, d, rng, 9);
    h.push_back(hi);
  }
  return h;
}

Outcome criterion6() {
  Outcome o;
  auto field = CoefficientField::default_field();
  auto sym = parse_document(models::pfaffian_symbolic(), field);
  auto text = format_polynomials(
      normalize_for_display(pfaffians_4x4(skew_matrix_from_block<PrimeField>(sym.ring, sym.matrices.front()))));
  const std::string want = "x1*x5-x2*x4, x1*x6-x3*x4, x2*x6-x3*x5, x1*f3-x2*f2+x3*f1, x4*f3-x5*f2+x6*f1";
  if (text != want) fail(o, "printed " + text);
  std::size_t max_rank = 0;
  for (int seed = 1; seed <= kDeformations; ++seed) {
    auto doc = parse_document(models::pfaffian_concrete(static_cast<std::uint64_t>(seed)), field);
    Rng rng(static_cast<std::uint64_t>(seed) + 5000);
    auto m = skew_matrix_from_block<PrimeField>(doc.ring, doc.matrices.front());
    auto pf = pfaffians_4x4(deform_matrix(m, 0u, perturbation(doc.ring, rng), DeformMode::ProjectiveCone));
    auto r = jacobian_rank_at(pf, std::vector<std::uint32_t>(6, 0));
    max_rank = std::max(max_rank, r.rank);
    if (!r.on_variety || r.rank > 2) fail(o, "seed " + std::to_string(seed) + " rank " + std::to_string(r.rank));
  }
  auto doc = parse_document(models::pfaffian_concrete(1), field);
  Rng rng(4242);
  auto m = skew_matrix_from_block<PrimeField>(doc.ring, doc.matrices.front());
  auto smoothed = pfaffians_4x4(deform_matrix(m, 1u, perturbation(doc.ring, rng), DeformMode::Affine));
  auto s = smoothness_sample(smoothed, 3, kSmoothPoints, 1);
  if (s.status != SampleStatus::SmoothSampled || s.points_sampled < kSmoothPoints)
    fail(o, "lambda = 1 gave " + status_name(s.status) + " after " + std::to_string(s.points_sampled) + " points");
  if (o.pass)
    o.detail = "five Pfaffians printed exactly; " + std::to_string(kDeformations) + " projective deformations with rank <= " +
               std::to_string(max_rank) + " at the vertex; lambda = 1 smooth at " + std::to_string(s.points_sampled) +
               " sampled points";
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (int g = 2; g <= 40; ++g) {
    bool smoothable = g <= 10 || g == 12;
    auto a = classify_k3_cone(g).answer;
    if (a != (smoothable ? Answer::SmoothableGeneral : Answer::ConicalOnlyGeneral))
      fail(o, "genus " + std::to_string(g) + " gave " + answer_name(a));
  }
  for (int d = 1; d <= 12; ++d) {
    auto a = classify_elliptic_cone(d).answer;
    if (a != (d <= 9 ? Answer::Smoothable : Answer::NotSmoothable)) fail(o, "degree " + std::to_string(d) + " gave " + answer_name(a));
  }
  for (int n = 2; n <= 6; ++n)
    if (classify_abelian_cone(n).answer != Answer::ConicalOnly) fail(o, "abelian dimension " + std::to_string(n));
  if (o.pass) o.detail = "K3 genus 2..40, elliptic degree 1..12, abelian dimension 2..6";
  return o;
}

Outcome criterion8(const std::vector<T1Report>& genus6) {
  Outcome o;
  struct Case {
    const char* model;
    int p, q;
  };
  std::size_t tables = 0;
  BettiTable g6;
  for (const auto& c : {Case{"quartic", 2, 3}, Case{"genus4", 3, 3}, Case{"genus5", 4, 3}, Case{"segre", 3, 2},
                        Case{"genus6", 4, 3}}) {
    auto ideal = model_ideal(c.model);
    auto t = betti_table(ideal, c.p, c.q);
    auto e = euler_check(t, ideal);
    if (!e.ok || e.degrees_checked.empty()) fail(o, std::string("Euler identity fails for ") + c.model);
    ++tables;
    if (std::string(c.model) == "genus6") g6 = t;
  }
  // Hilbert-function oracle: beta_{1,1} = dim S_2 - dim (S/I)_2.
  auto ideal = model_ideal("genus6");
  auto hf2 = ideal.groebner().hilbert_function(2, 2).at(2);
  std::uint64_t oracle = 28 - hf2;
  auto b11 = g6.at(1, 1);
  if (!b11 || *b11 != 6 || oracle != 6) fail(o, "beta_11 = " + (b11 ? std::to_string(*b11) : "?") + ", 28 - HF(2) = " + std::to_string(oracle));
  auto b22 = g6.at(2, 2);
  if (!b22 || *b22 == 0) fail(o, "beta_22 vanishes");
  if (genus6.front().dims.at(2) == 0 || genus6.front().dims.at(-2) == 0) fail(o, "T1(+-2) vanishes");
  auto dual = gorenstein_duality(g6, 4, 3);
  if (!dual.ok) fail(o, "duality fails");
  if (o.pass)
    o.detail = "Euler identity on " + std::to_string(tables) + " tables; beta_11 = 6 = 28 - " + std::to_string(hf2) +
               "; beta_22 = " + std::to_string(*b22) + " with T1(-2) = " + std::to_string(genus6.front().dims.at(-2)) +
               ", T1(2) = " + std::to_string(genus6.front().dims.at(2)) + "; duality on " + std::to_string(dual.pairs_checked) +
               " pairs";
  return o;
}

Outcome criterion9() {
  Outcome o;
  int compared = 0;
  std::size_t degrees = 0;
  for (int seed = 1; seed <= kOracleIdeals; ++seed) {
    auto ideal = model_ideal("artinian", static_cast<std::uint64_t>(seed));
    oracle::BruteForceT1 brute(ideal);
    auto socle = brute.socle_degree();
    std::size_t colength = 0;
    auto hf = ideal.groebner().hilbert_function(0, static_cast<std::uint32_t>(socle ? *socle : 0));
    for (auto v : hf.values()) colength += v;
    if (!socle || ideal.ring().num_vars() > 3 || colength > kMaxColength) {
      fail(o, "seed " + std::to_string(seed) + " outside the size bounds");
      continue;
    }
    std::uint32_t dmax = 0;
    for (auto d : ideal.degrees()) dmax = std::max(dmax, d);
    int lo = -static_cast<int>(dmax), hi = *socle;
    auto rep = t1_graded(ideal, lo, hi);
    for (int k = lo; k <= hi; ++k, ++degrees)
      if (rep.dims.at(k) != brute.t1(k))
        fail(o, "seed " + std::to_string(seed) + " degree " + std::to_string(k));
    ++compared;
  }
  if (compared < 20) fail(o, "only " + std::to_string(compared) + " ideals compared");
  if (o.pass) o.detail = std::to_string(compared) + " ideals, " + std::to_string(degrees) + " graded pieces equal";
  return o;
}

Outcome criterion10() {
  using testing_support::run_cli;
  Outcome o;
  auto cases = testing_support::golden_cases();
  for (const auto& c : cases) {
    auto a = run_cli(c.args), b = run_cli(c.args);
    auto golden = testing_support::read_text(testing_support::golden_dir() + "/" + c.name + ".out");
    auto manifest = [](const std::string& err) {
      auto end = err.find_last_not_of('\n');
      auto start = err.rfind('\n', end);
      start = start == std::string::npos ? 0 : start + 1;
      auto j = nlohmann::json::parse(err.substr(start, end - start + 1));
      j.erase("wall_time_ms");
      return j;
    };
    if (a.code != 0 || a.out != b.out || a.out != golden || manifest(a.err) != manifest(b.err)) fail(o, c.name);
  }
  if (o.pass) o.detail = std::to_string(cases.size()) + " golden outputs identical across repeated runs";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;
  double quartic_s = 0, genus6_s = 0;
  T1Report quartic;
  std::vector<T1Report> genus6;
  bool t1_ok = true;
  std::string t1_error;
  try {
    quartic = quartic_report(quartic_s);
    genus6 = genus6_reports(genus6_s);
  } catch (const std::exception& e) {
    t1_ok = false;
    t1_error = e.what();
  }
  auto needs_t1 = [&](std::function<Outcome()> f) {
    return [=]() -> Outcome {
      if (!t1_ok) return {false, "T1 computation failed: " + t1_error};
      return f();
    };
  };
  criteria.emplace_back("quartic T1 regression", needs_t1([&] { return criterion1(quartic, quartic_s); }));
  criteria.emplace_back("genus 6 T1 regression", needs_t1([&] { return criterion2(genus6, genus6_s); }));
  criteria.emplace_back("T1 symmetry", needs_t1([&] { return criterion3(quartic, genus6); }));
  criteria.emplace_back("Riemann-Roch cross-check", needs_t1([&] { return criterion4(quartic, genus6); }));
  criteria.emplace_back("11-dimensional subspace", needs_t1([&] { return criterion5(quartic); }));
  criteria.emplace_back("Pfaffian format", criterion6);
  criteria.emplace_back("classification table", criterion7);
  criteria.emplace_back("Betti properties", needs_t1([&] { return criterion8(genus6); }));
  criteria.emplace_back("brute-force oracle", criterion9);
  criteria.emplace_back("determinism", criterion10);

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
