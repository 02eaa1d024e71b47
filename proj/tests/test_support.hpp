#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "mpg/error.hpp"
#include "mpg/graph.hpp"

namespace testing_support {

/// Every marked permutation graph with half-order m, sigma in lexicographic order.
inline std::vector<mpg::Mpg> all_instances(int m) {
  std::vector<int> sigma(static_cast<std::size_t>(m));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<mpg::Mpg> out;
  do {
    out.push_back(mpg::Mpg::validate(m, sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

/// Runs fn and returns the code of the mpg::Error it throws.
inline mpg::ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const mpg::Error& e) {
    return e.code();
  }
  FAIL("expected mpg::Error");
  return mpg::ErrorCode::ParseError;
}

}  // namespace testing_support
