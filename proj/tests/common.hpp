// Copyright 2026 The rlamalg Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef RLAMALG_TESTS_COMMON_HPP_
#define RLAMALG_TESTS_COMMON_HPP_

#include <string>
#include <vector>

#include "rlamalg/algebra.hpp"
#include "rlamalg/enumerate.hpp"
#include "rlamalg/io.hpp"
#include "rlamalg/morphism.hpp"

namespace testing {

inline std::string FixturePath(const std::string& file) {
  return std::string(RLAMALG_FIXTURE_DIR) + "/" + file;
}

inline rlamalg::Algebra Fixture(const std::string& file) {
  return rlamalg::LoadAlgebraFile(FixturePath(file));
}

inline rlamalg::Span SpanFixture(const std::string& file) {
  return rlamalg::LoadSpanFile(FixturePath(file));
}

inline const std::vector<std::string>& AlgebraFixtures() {
  static const std::vector<std::string> files = {
      "idem-A.alg",    "idem-B.alg",    "idem-C.alg",         "invol-A.alg",
      "invol-B.alg",   "invol-C.alg",   "distrib-A.alg",      "distrib-B.alg",
      "distrib-C.alg", "distrib-idem-B.alg", "distrib-idem-C.alg"};
  return files;
}

inline const std::vector<std::string>& SpanFixtures() {
  static const std::vector<std::string> files = {"idem.span", "invol.span", "distrib.span",
                                                 "distrib-idem.span"};
  return files;
}

// Every residuated lattice of size <= max_size, one per isomorphism class.
inline std::vector<rlamalg::Algebra> SmallAlgebras(int max_size) {
  std::vector<rlamalg::Algebra> out;
  for (int n = 1; n <= max_size; ++n) {
    auto v = rlamalg::EnumerateAlgebras(n, {});
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

inline rlamalg::Index At(const rlamalg::Algebra& alg, const std::string& label) {
  return *alg.find_label(label);
}

}  // namespace testing

#endif  // RLAMALG_TESTS_COMMON_HPP_
