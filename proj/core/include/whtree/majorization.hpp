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

#pragma once

#include <span>

#include "whtree/tree.hpp"

namespace wht {

enum class MajorizationOrder {
  LeftMajorizesStrictly,
  RightMajorizesStrictly,
  EqualSorted,
  Incomparable,
};

const char* to_string(MajorizationOrder order);

// Weak majorization: x weakly majorizes y iff every prefix sum of
// ascending-sorted x is <= the corresponding prefix sum of ascending-sorted
// y; strict when the sorted vectors differ. Note this inverts the usual
// Marshall-Olkin direction. Throws LengthMismatch; entries must be
// non-negative (OutOfRange).
MajorizationOrder weak_compare(std::span<const Weight> x, std::span<const Weight> y);

// Sum of chi(f_i, mu_bar) over the vector. Throws OutOfRange if an entry
// falls outside [0, mu_bar].
IndexValue sum_chi(const FVector& fvec, const Weight& mu_bar);

}  // namespace wht
