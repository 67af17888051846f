#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "conekit/polynomial.hpp"
#include "conekit/ring.hpp"

namespace conekit {

/// Position of a piece of text inside its source (1-based).
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Parses `ring name+ [weights int+]`.
RingPtr parse_ring(std::string_view text, CoefficientField field = CoefficientField::default_field(),
                   SourcePos origin = {});

template <class F>
struct ParsedPoly {
  Polynomial<F> poly;
  std::uint32_t degree = 0;
  bool homogeneous = true;
};

/// Parses a polynomial in the ring's variables. Supports integer and
/// rational literals (`3/4`), `+ - * ^`, parentheses and implicit
/// multiplication. Any other use of `/` is rejected.
template <class F>
ParsedPoly<F> parse_poly(const RingPtr& ring, std::string_view text, SourcePos origin = {});

struct SourceText {
  std::string text;
  SourcePos pos;
};

struct IdealBlock {
  std::vector<SourceText> generators;
};

struct MatrixBlock {
  std::size_t size = 0;
  /// Strict upper triangle, row-major.
  std::vector<SourceText> entries;
};

/// A whole input file with polynomial text kept unparsed so it can be
/// materialized over any coefficient field.
struct Document {
  RingPtr ring;
  std::vector<IdealBlock> ideals;
  std::vector<MatrixBlock> matrices;
};

Document parse_document(std::string_view text,
                        CoefficientField field = CoefficientField::default_field());

template <class F>
std::vector<Polynomial<F>> parse_ideal_block(const RingPtr& ring, const IdealBlock& block,
                                             bool require_homogeneous = true);

}  // namespace conekit
