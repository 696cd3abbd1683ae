// Copyright 2026 The kcgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Seeded generators of boundary quadruples for property testing.
//
// Quadruple i of a stream is drawn from its own generator, seeded from
// (seed, i) through SplitMix64, so a stream can be split into blocks and
// generated in any order with identical results.  The generator is
// xoshiro256** and doubles take the top 53 bits; nothing depends on the
// standard library's distributions.

#ifndef KCG_SAMPLING_HPP_
#define KCG_SAMPLING_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "kcg/cross_ratio.hpp"
#include "kcg/heisenberg.hpp"

namespace kcg {

class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  // Independent stream for index `stream` of the sequence seeded by `seed`.
  static Rng for_stream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();
  // Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform in the closed disc of the given radius.
  Complex disc(double radius);

 private:
  std::array<std::uint64_t, 4> s_;
};

enum class SampleKind { kGeneric, kRCircle, kCCircle };

enum class Label {
  kGeneric,
  kRCircleSeparate13,
  kRCircleSeparate12,
  kRCircleSeparate14,
  kChain,
};

const char* to_string(SampleKind k);
const char* to_string(Label l);
std::optional<SampleKind> parse_sample_kind(std::string_view s);
std::optional<Label> parse_label(std::string_view s);

struct SampleSpec {
  std::uint64_t seed = 1;
  SampleKind kind = SampleKind::kGeneric;
  std::int64_t count = 100;
  double box = 3.0;
  int twist_depth = 3;
  double min_gap = 0.1;
  // Place p2 within [min_gap, 2 min_gap] of p1 (in the kind's own gap
  // measure) for conditioning studies.
  bool near_degenerate = false;

  // Throws kInvalidArgument for count < 1, box <= 0, min_gap <= 0 or a
  // negative twist depth.
  void validate() const;
};

struct LabeledQuadruple {
  Quadruple q;
  Label label = Label::kGeneric;
};

// Bounds on random twist factors.
inline constexpr double kTwistZetaMax = 2.0;
inline constexpr double kTwistSMax = 4.0;

// Product of `depth` factors, each the inversion (probability 1/3) or a
// unit-dilation similarity with |zeta| <= 2, |s| <= 4 and uniform phi.
GroupElement random_junitary(Rng& rng, int depth);

// Separation label of four parameters on R u {infinity} (nullopt is
// infinity), read off their cyclic order.
Label separation_label(const std::array<std::optional<double>, 4>& x);

// Quadruple `index` of the stream described by spec.  Throws kUnsatisfiable
// when the gap constraints fail after a bounded number of retries.
LabeledQuadruple sample_one(const SampleSpec& spec, std::int64_t index);

// The whole stream, in order.
std::vector<LabeledQuadruple> sample(const SampleSpec& spec);

// Pull-style view of the same stream.
class Sampler {
 public:
  explicit Sampler(SampleSpec spec);

  bool done() const { return next_ >= spec_.count; }
  LabeledQuadruple next();
  const SampleSpec& spec() const { return spec_; }

 private:
  SampleSpec spec_;
  std::int64_t next_ = 0;
};

}  // namespace kcg

#endif  // KCG_SAMPLING_HPP_
