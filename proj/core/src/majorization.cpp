// Copyright 2026 The whtree Authors
//
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

#include "whtree/majorization.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "whtree/error.hpp"
#include "whtree/indices.hpp"

namespace wht {

const char* to_string(MajorizationOrder order) {
  switch (order) {
    case MajorizationOrder::LeftMajorizesStrictly: return "LeftMajorizesStrictly";
    case MajorizationOrder::RightMajorizesStrictly: return "RightMajorizesStrictly";
    case MajorizationOrder::EqualSorted: return "EqualSorted";
    case MajorizationOrder::Incomparable: return "Incomparable";
  }
  return "?";
}

MajorizationOrder weak_compare(std::span<const Weight> x, std::span<const Weight> y) {
  if (x.size() != y.size())
    throw Error(ErrorCode::LengthMismatch,
                "vectors of length " + std::to_string(x.size()) + " and " +
                    std::to_string(y.size()) + " are not comparable");
  std::vector<Weight> xs(x.begin(), x.end()), ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  for (const Weight& v : xs)
    if (v.sign() < 0)
      throw Error(ErrorCode::OutOfRange, "weak majorization needs non-negative entries");
  for (const Weight& v : ys)
    if (v.sign() < 0)
      throw Error(ErrorCode::OutOfRange, "weak majorization needs non-negative entries");

  if (xs == ys) return MajorizationOrder::EqualSorted;

  bool left_le = true;   // every prefix sum of xs <= prefix sum of ys
  bool right_le = true;  // the reverse
  Weight px, py;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    px += xs[k];
    py += ys[k];
    if (auto c = px <=> py; c > 0)
      left_le = false;
    else if (c < 0)
      right_le = false;
    if (!left_le && !right_le) return MajorizationOrder::Incomparable;
  }
  if (left_le) return MajorizationOrder::LeftMajorizesStrictly;
  return MajorizationOrder::RightMajorizesStrictly;
}

IndexValue sum_chi(const FVector& fvec, const Weight& mu_bar) {
  IndexValue total;
  for (const Weight& f : fvec) total += chi(f, mu_bar);
  return total;
}

}  // namespace wht
