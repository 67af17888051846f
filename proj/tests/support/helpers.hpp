#pragma once

#include <string>
#include <vector>

#include "conekit/error.hpp"
#include "conekit/models.hpp"

namespace testing_support {

inline std::string error_code(auto&& fn) {
  try {
    fn();
  } catch (const conekit::Error& e) {
    return e.code();
  }
  return "";
}

template <class F = conekit::PrimeField>
conekit::Ideal<F> model_ideal(const std::string& name, std::uint64_t seed = 1,
                              conekit::CoefficientField field = conekit::CoefficientField::default_field()) {
  return conekit::models::first_ideal<F>(conekit::parse_document(conekit::models::document(name, seed), field));
}

template <class F = conekit::PrimeField>
conekit::Ideal<F> ideal_from_text(const std::string& document,
                                  conekit::CoefficientField field = conekit::CoefficientField::default_field()) {
  return conekit::models::first_ideal<F>(conekit::parse_document(document, field));
}

inline std::vector<std::uint64_t> dims_between(const conekit::GradedDims& d, int lo, int hi) {
  std::vector<std::uint64_t> out;
  for (int k = lo; k <= hi; ++k) out.push_back(d.at(k));
  return out;
}

}  // namespace testing_support
