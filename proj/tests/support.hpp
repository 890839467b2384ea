#pragma once

#include <algorithm>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ordalg/algebra.hpp"
#include "ordalg/io.hpp"

namespace testing {

inline std::filesystem::path data_path(std::string const& name) {
  return std::filesystem::path(ORDALG_TEST_DATA_DIR) / name;
}

inline ordalg::Algebra fixture(std::string const& name) {
  return ordalg::read_algebra_file(data_path(name));
}

inline ordalg::elem_t el(ordalg::Algebra const& alg, std::string_view label) {
  auto const& ls = alg.labels();
  auto const  it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) throw std::invalid_argument("no element " + std::string(label));
  return static_cast<ordalg::elem_t>(it - ls.begin());
}

/// An algebra given by its elements and order lines, e.g.
/// from_order("0 a 1", {"0 < a < 1"}).
inline ordalg::Algebra from_order(std::string const& elements,
                                  std::initializer_list<char const*> order) {
  std::string text = "algebra\nelements: " + elements + "\norder:\n";
  for (char const* line : order) text += std::string("  ") + line + "\n";
  text += "end\n";
  return ordalg::parse_algebra(text);
}

}  // namespace testing
