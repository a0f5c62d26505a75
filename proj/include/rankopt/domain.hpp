/*
 * Copyright 2026 The rankopt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * \file rankopt/domain.hpp
 *
 * \brief Search space, counter-based random streams and uniform sampling.
 *
 * The search space is an axis-aligned box. Random draws come from a
 * Philox4x32-10 generator whose 128-bit counter is split into a block index
 * (low half) and a substream index (high half), so run r of an experiment
 * owns substream(seed, r) and can be replayed in isolation.
 */

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankopt/error.hpp"

namespace rankopt {

/// A coordinate vector in R^d with finite entries.
class Point {
 public:
  Point() = default;

  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) { validate(); }

  Point(std::initializer_list<double> coords) : coords_(coords) { validate(); }

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  void validate() const {
    if (coords_.empty()) throw InvalidParameter("Point: dimension must be >= 1");
    for (double c : coords_)
      if (!std::isfinite(c)) throw InvalidParameter("Point: non-finite coordinate");
  }

  std::vector<double> coords_;
};

/// Axis-aligned compact box [lower_1, upper_1] x ... x [lower_d, upper_d].
class BoxDomain {
 public:
  BoxDomain(Point lower, Point upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.dim() != upper_.dim())
      throw InvalidParameter("BoxDomain: bound dimensions differ");
    for (std::size_t i = 0; i < lower_.dim(); ++i)
      if (!(lower_[i] < upper_[i]))
        throw InvalidParameter("BoxDomain: lower bound must be < upper bound on every axis");
    if (!(volume() > 0.0) || !std::isfinite(volume()))
      throw InvalidParameter("BoxDomain: volume must be positive and finite");
  }

  /// The hypercube [lo, hi]^d.
  static BoxDomain cube(std::size_t d, double lo, double hi) {
    return BoxDomain(Point(std::vector<double>(d, lo)), Point(std::vector<double>(d, hi)));
  }

  std::size_t dim() const noexcept { return lower_.dim(); }
  const Point& lower() const noexcept { return lower_; }
  const Point& upper() const noexcept { return upper_; }

  double volume() const {
    double v = 1.0;
    for (std::size_t i = 0; i < dim(); ++i) v *= upper_[i] - lower_[i];
    return v;
  }

  bool contains(const Point& x) const {
    if (x.dim() != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
      if (x[i] < lower_[i] || x[i] > upper_[i]) return false;
    return true;
  }

  friend bool operator==(const BoxDomain&, const BoxDomain&) = default;

 private:
  Point lower_;
  Point upper_;
};

/// Euclidean length of the box diagonal.
inline double diameter(const BoxDomain& domain) {
  double s = 0.0;
  for (std::size_t i = 0; i < domain.dim(); ++i) {
    const double w = domain.upper()[i] - domain.lower()[i];
    s += w * w;
  }
  return std::sqrt(s);
}

namespace detail {

inline void philox_round(std::array<std::uint32_t, 4>& ctr, const std::array<std::uint32_t, 2>& key) {
  constexpr std::uint64_t kM0 = 0xD2511F53u;
  constexpr std::uint64_t kM1 = 0xCD9E8D57u;
  const std::uint64_t p0 = kM0 * ctr[0];
  const std::uint64_t p1 = kM1 * ctr[2];
  const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
  const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace detail

/// Philox4x32-10 block function (Salmon et al., SC'11).
inline std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                                  std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t kW0 = 0x9E3779B9u;
  constexpr std::uint32_t kW1 = 0xBB67AE85u;
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      key[0] += kW0;
      key[1] += kW1;
    }
    detail::philox_round(ctr, key);
  }
  return ctr;
}

/// SplitMix64 finalizer; used to derive substream indices from labels.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// 64-bit FNV-1a over a string.
constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

/**
 * \brief Single-owner random stream.
 *
 * Satisfies UniformRandomBitGenerator. Identical (seed, stream) pairs give
 * bit-identical draw sequences.
 */
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : seed_(seed), stream_(stream) {}

  /// Independent stream sharing this stream's seed.
  RngStream substream(std::uint64_t stream) const noexcept { return RngStream(seed_, stream); }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept {
    if (buffered_ == 0) refill();
    --buffered_;
    return buffer_[buffered_];
  }

  /// Uniform double on [0, 1) with 53 random bits.
  double uniform01() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  void refill() noexcept {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
        static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
    const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed_),
                                              static_cast<std::uint32_t>(seed_ >> 32)};
    const auto out = philox4x32_10(ctr, key);
    ++block_;
    // consumed back to front
    buffer_[1] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
    buffer_[0] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
    buffered_ = 2;
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
};

/// Point with each coordinate independently uniform on [lower_i, upper_i].
inline Point sample_uniform(const BoxDomain& domain, RngStream& rng) {
  std::vector<double> x(domain.dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lo = domain.lower()[i], hi = domain.upper()[i];
    const double v = lo + rng.uniform01() * (hi - lo);
    x[i] = v > hi ? hi : v;
  }
  return Point(std::move(x));
}

/// Returns true with probability p; p must lie in (0, 1).
inline bool sample_bernoulli(double p, RngStream& rng) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidParameter("sample_bernoulli: p must lie in (0,1)");
  return rng.uniform01() < p;
}

}  // namespace rankopt
