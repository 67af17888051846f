#include <string>
#include <vector>

#include "conekit/error.hpp"
#include "conekit/parse.hpp"
#include "conekit/random.hpp"
#include "doctest.h"

using namespace conekit;
using P = Polynomial<PrimeField>;

namespace {

P parse(const RingPtr& r, const std::string& s) { return parse_poly<PrimeField>(r, s).poly; }

std::string error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

P random_homogeneous(const RingPtr& r, std::uint32_t d, Rng& rng) {
  std::vector<Term<PrimeField>> terms;
  PrimeField f(r->field());
  for (const auto& m : r->monomials_of_degree(d)) terms.push_back({m, f.from_int(rng.uniform(-5, 5))});
  return P(r, std::move(terms));
}

}  // namespace

TEST_SUITE("poly_core") {
  TEST_CASE("ring declarations") {
    auto r = parse_ring("ring x0 x1 x2 x3");
    CHECK(r->num_vars() == 4);
    CHECK(r->weights() == std::vector<std::uint32_t>{1, 1, 1, 1});
    CHECK(r->field() == CoefficientField::prime(32003));
    auto w = parse_ring("ring x y z weights 1 1 2");
    CHECK(w->weights() == std::vector<std::uint32_t>{1, 1, 2});
    CHECK(error_code([] { parse_ring("ring x x"); }) == "duplicate-variable");
    CHECK(error_code([] { parse_ring("ring x y weights 1 0"); }) == "non-positive-weight");
    CHECK(error_code([] { parse_ring("ring x y weights 1"); }) == "weight-count");
    CHECK(error_code([] { parse_ring("ring x 2y"); }) == "malformed-token");
  }

  TEST_CASE("parse errors carry positions") {
    try {
      parse_ring("ring a b a");
      FAIL("expected error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == 10);
    }
    auto r = parse_ring("ring x y");
    try {
      parse(r, "x + q");
      FAIL("expected error");
    } catch (const ParseError& e) {
      CHECK(e.code() == "unknown-variable");
      CHECK(e.column() == 5);
    }
  }

  TEST_CASE("polynomial parsing") {
    auto r = parse_ring("ring x0 x1 x2 x3");
    auto q = parse_poly<PrimeField>(r, "x0^4+x1^4+x2^4+x3^4");
    CHECK(q.poly.size() == 4);
    CHECK(q.degree == 4);
    CHECK(q.homogeneous);
    auto r6 = parse_ring("ring x1 x2 x3 x4 x5 x6");
    auto s = parse_poly<PrimeField>(r6, "x1*x5-x2*x4");
    CHECK(s.degree == 2);
    CHECK(s.homogeneous);
    auto xy = parse_ring("ring x y z");
    CHECK_FALSE(parse_poly<PrimeField>(xy, "x+y^2").homogeneous);
    CHECK(parse(xy, "2x y") == parse(xy, "2*x*y"));
    CHECK(parse(xy, "(x+y)^2") == parse(xy, "x^2+2*x*y+y^2"));
    CHECK(parse(xy, "-(x-y)") == parse(xy, "y-x"));
    CHECK(parse(xy, "x - x") .is_zero());
    CHECK(error_code([&] { parse(xy, "x/y"); }) == "division-unsupported");
    CHECK(error_code([&] { parse(xy, "x/2"); }) == "division-unsupported");
    CHECK(error_code([&] { parse(xy, "x^70000"); }) == "exponent-overflow");
    CHECK(error_code([&] { parse(xy, "(x^40000)^2"); }) == "exponent-overflow");
    CHECK(error_code([&] { parse(xy, "x + w"); }) == "unknown-variable");
    CHECK(error_code([&] { parse(xy, "x +"); }) == "malformed-token");
  }

  TEST_CASE("greedy variable names") {
    auto r = parse_ring("ring x x1 x12");
    auto p = parse(r, "x12x1x");
    CHECK(p.to_string() == "x*x1*x12");
  }

  TEST_CASE("rational literals") {
    auto r = parse_ring("ring x y", CoefficientField::rationals());
    auto p = parse_poly<RationalField>(r, "1/2*x - 3/4*y").poly;
    CHECK(p.to_string() == "1/2*x-3/4*y");
    auto rp = parse_ring("ring x y", CoefficientField::prime(7));
    CHECK(parse(rp, "1/2*x") == parse(rp, "4*x"));
    CHECK(error_code([&] { parse(rp, "1/7*x"); }) == "denominator-vanishes");
  }

  TEST_CASE("field mismatch is rejected") {
    auto r = parse_ring("ring x y", CoefficientField::rationals());
    CHECK(error_code([&] { parse(r, "x"); }) == "field-mismatch");
  }

  TEST_CASE("monomials_of_degree") {
    auto r = parse_ring("ring x0 x1 x2 x3");
    CHECK(r->monomials_of_degree(2).size() == 10);
    auto w = parse_ring("ring x y z weights 1 1 2");
    auto m2 = w->monomials_of_degree(2);
    REQUIRE(m2.size() == 4);
    std::vector<std::string> names;
    for (const auto& m : m2) names.push_back(w->monomial_to_string(m));
    CHECK(names == std::vector<std::string>{"x^2", "x*y", "y^2", "z"});
    CHECK(r->monomials_of_degree(0).size() == 1);
    CHECK(r->monomials_of_degree(0)[0].is_one());
  }

  TEST_CASE("monomial counts match the generating function") {
    auto w = parse_ring("ring a b c d weights 1 2 2 3");
    std::vector<std::int64_t> series(21, 0);
    series[0] = 1;
    for (auto wt : w->weights())
      for (std::size_t t = wt; t < series.size(); ++t) series[t] += series[t - wt];
    for (std::uint32_t d = 0; d <= 20; ++d) {
      CHECK(static_cast<std::int64_t>(w->monomials_of_degree(d).size()) == series[d]);
      CHECK(static_cast<std::int64_t>(w->count_monomials(d)) == series[d]);
    }
  }

  TEST_CASE("monomial order is weighted grevlex") {
    auto r = parse_ring("ring x y z");
    auto m = r->monomials_of_degree(2);
    std::vector<std::string> s;
    for (const auto& x : m) s.push_back(r->monomial_to_string(x));
    CHECK(s == std::vector<std::string>{"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"});
  }

  TEST_CASE("grading additivity") {
    auto r = parse_ring("ring a b c d weights 1 1 2 3");
    Rng rng(11);
    for (int i = 0; i < 30; ++i) {
      auto d1 = static_cast<std::uint32_t>(rng.uniform(1, 5));
      auto d2 = static_cast<std::uint32_t>(rng.uniform(1, 5));
      P f = random_homogeneous(r, d1, rng), g = random_homogeneous(r, d2, rng);
      if (f.is_zero() || g.is_zero()) continue;
      P h = f * g;
      CHECK(h.is_homogeneous());
      CHECK(h.degree() == d1 + d2);
    }
  }

  TEST_CASE("print/parse round trip") {
    auto r = parse_ring("ring x0 x1 x2 x3");
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
      P f = random_homogeneous(r, static_cast<std::uint32_t>(rng.uniform(0, 4)), rng);
      P g = parse(r, f.to_string());
      CHECK(g == f);
      CHECK(g.to_string() == f.to_string());
    }
    auto q = parse_ring("ring x y", CoefficientField::rationals());
    auto f = parse_poly<RationalField>(q, "-7/3*x^2*y+5*y^3-x^3").poly;
    CHECK(parse_poly<RationalField>(q, f.to_string()).poly == f);
  }

  TEST_CASE("arithmetic helpers") {
    auto r = parse_ring("ring x y z");
    P f = parse(r, "x^2*y+3*z^3");
    CHECK(f.derivative(0) == parse(r, "2*x*y"));
    CHECK(f.derivative(2) == parse(r, "9*z^2"));
    std::vector<PrimeField::Element> pt{2, 3, 1};
    CHECK(f.evaluate(pt) == 15);
    std::vector<P> images{parse(r, "y"), parse(r, "x"), parse(r, "x+y")};
    CHECK(parse(r, "x*z").substitute(images) == parse(r, "x*y+y^2"));
    CHECK(parse(r, "x+y").pow(3) == parse(r, "x^3+3*x^2*y+3*x*y^2+y^3"));
    CHECK(parse(r, "3*x+y").monic().leading_coeff() == 1);
  }

  TEST_CASE("documents") {
    std::string text =
        "# comment\n"
        "ring x1 x2 x3 x4 x5 x6 f1 f2 f3 weights 1 1 1 1 1 1 3 3 3\n"
        "ideal\n"
        "  x1*x5 - x2*x4   # trailing\n"
        "end\n"
        "skewmatrix 5\n"
        "0 x1 x2 x3\n"
        "x4 x5 x6\n"
        "f1 f2\n"
        "f3\n"
        "end\n";
    Document doc = parse_document(text);
    CHECK(doc.ring->num_vars() == 9);
    REQUIRE(doc.ideals.size() == 1);
    CHECK(doc.ideals[0].generators[0].text == "x1*x5 - x2*x4");
    REQUIRE(doc.matrices.size() == 1);
    CHECK(doc.matrices[0].entries.size() == 10);
    CHECK(doc.matrices[0].entries[9].text == "f3");
    CHECK(doc.matrices[0].entries[9].pos.line == 10);
    Document commas = parse_document("ring x y z\nskewmatrix 3\nx + y, 0, z^2\nend\n");
    CHECK(commas.matrices[0].entries[0].text == "x + y");
    CHECK(error_code([] { parse_document("ideal\nx\nend\n"); }) == "missing-ring");
    CHECK(error_code([] { parse_document("ring x\nideal\nx\n"); }) == "unterminated-block");
    CHECK(error_code([] { parse_document("ring x\nskewmatrix 3\nx x\nend\n"); }) == "matrix-entries");
    try {
      auto d = parse_document("ring x y\nideal\nx^2\nx+y^2\nend\n");
      parse_ideal_block<PrimeField>(d.ring, d.ideals[0]);
      FAIL("expected error");
    } catch (const ParseError& e) {
      CHECK(e.code() == "inhomogeneous");
      CHECK(e.line() == 4);
    }
  }
}
