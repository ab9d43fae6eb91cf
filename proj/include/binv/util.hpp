// Copyright 2026 The binv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BINV_UTIL_HPP
#define BINV_UTIL_HPP

#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace binv {

// Mixed-radix index space over per-player finite alphabets. Profiles are
// encoded with player 0 as the most significant digit, so profile order
// matches lexicographic order of the tuple (and the tensor-product index
// convention used by the quantum module).
class ProfileSpace {
 public:
  ProfileSpace() = default;
  explicit ProfileSpace(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    total_ = 1;
    for (int s : sizes_) {
      if (s <= 0) throw std::invalid_argument("ProfileSpace: empty alphabet");
      total_ *= s;
    }
  }

  int arity() const { return static_cast<int>(sizes_.size()); }
  int size(int i) const { return sizes_[i]; }
  const std::vector<int>& sizes() const { return sizes_; }
  long total() const { return total_; }

  long index(std::span<const int> profile) const {
    long idx = 0;
    for (size_t i = 0; i < sizes_.size(); ++i) {
      if (profile[i] < 0 || profile[i] >= sizes_[i])
        throw std::out_of_range("ProfileSpace: coordinate out of range");
      idx = idx * sizes_[i] + profile[i];
    }
    return idx;
  }

  std::vector<int> decode(long idx) const {
    std::vector<int> p(sizes_.size());
    for (size_t i = sizes_.size(); i-- > 0;) {
      p[i] = static_cast<int>(idx % sizes_[i]);
      idx /= sizes_[i];
    }
    return p;
  }

  // Index of the profile equal to `base` with coordinate i replaced.
  long with_coordinate(std::span<const int> base, int i, int value) const {
    long idx = 0;
    for (size_t k = 0; k < sizes_.size(); ++k)
      idx = idx * sizes_[k] + (static_cast<int>(k) == i ? value : base[k]);
    return idx;
  }

 private:
  std::vector<int> sizes_;
  long total_ = 1;
};

// Deterministic maps f: D -> {0..range-1} encoded as a single integer with
// f(0) as the least significant digit: index = sum_x f(x) * range^x.
inline int function_value(long fn_index, int arg, int range) {
  for (int k = 0; k < arg; ++k) fn_index /= range;
  return static_cast<int>(fn_index % range);
}

inline long function_count(int domain, int range) {
  long n = 1;
  for (int k = 0; k < domain; ++k) n *= range;
  return n;
}

inline std::string join_ints(std::span<const int> v, const char* sep = ",") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace binv

#endif  // BINV_UTIL_HPP
