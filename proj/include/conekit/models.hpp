#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "conekit/groebner.hpp"
#include "conekit/parse.hpp"
#include "conekit/random.hpp"

/// Seeded example inputs, emitted as input-language documents so every
/// model can be materialized over any coefficient field.
namespace conekit::models {

/// Fermat quartic x0^4 + x1^4 + x2^4 + x3^4 in four variables.
std::string fermat_quartic();

/// Fermat cubic x0^3 + x1^3 + x2^3 (cone over an elliptic curve of degree 3).
std::string fermat_cubic();

/// Genus 4 K3 in P^4: Fermat cubic plus a random quadric.
std::string genus4(std::uint64_t seed);

/// Genus 5 K3 in P^5: three random quadrics.
std::string genus5(std::uint64_t seed);

/// Genus 6 K3 in P^6: the 4x4 Pfaffians of a 5x5 skew matrix of random
/// linear forms plus a random quadric.
std::string genus6(std::uint64_t seed);

/// 2x2 minors of the 2x3 matrix (x1 x2 x3 / x4 x5 x6).
std::string segre_p1p2();

/// 5x5 skew matrix (0 x1 x2 x3 / x4 x5 x6 / f1 f2 / f3) with f1, f2, f3
/// treated as variables of weight 3.
std::string pfaffian_symbolic();

/// Same shape with random forms f1, f2, f3 of degree k in x1..x6.
std::string pfaffian_concrete(std::uint64_t seed, std::uint32_t k = 3);

/// Homogeneous ideal in 2 or 3 variables of finite colength at most 30:
/// pure powers plus a few random forms.
std::string random_artinian(std::uint64_t seed);

/// Names accepted by `document`.
std::vector<std::string> names();

/// Document for a named model; seed is ignored for deterministic models.
/// Throws DomainError("unknown-model").
std::string document(std::string_view name, std::uint64_t seed);

/// Random form of weighted degree d with integer coefficients in
/// [-range, range].
template <class F>
Polynomial<F> random_form(const RingPtr& ring, std::uint32_t d, Rng& rng, std::int64_t range = 50);

/// First ideal block of a document, materialized over the document's field.
template <class F>
Ideal<F> first_ideal(const Document& doc);

}  // namespace conekit::models
