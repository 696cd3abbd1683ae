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

#include "kcg/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "kcg/error.hpp"

namespace kcg {
namespace {

constexpr int kMaxRetries = 1000;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// SplitMix64 output function.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

using Points = std::array<BoundaryPoint, 4>;

// Shortest distance between two angles on the circle.
double circular_gap(double a, double b) {
  const double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

std::optional<LabeledQuadruple> draw_generic(const SampleSpec& spec,
                                             Rng& rng) {
  Points p;
  for (BoundaryPoint& b : p) {
    b = BoundaryPoint(rng.disc(spec.box),
                      rng.uniform(-spec.box * spec.box, spec.box * spec.box));
  }
  if (spec.near_degenerate) {
    // Heisenberg offset of gauge rho: | |w|^2 - i s | = rho^2.
    const double rho = spec.min_gap * (1.0 + rng.uniform());
    const double beta = rng.uniform(-0.5, 0.5) * std::numbers::pi;
    const double w_abs = rho * std::sqrt(std::cos(beta));
    const HeisPoint offset{std::polar(w_abs, rng.uniform(0.0, kTwoPi)),
                           -rho * rho * std::sin(beta)};
    p[1] = group_mul(p[0].finite(), offset);
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (spec.near_degenerate && i == 0 && j == 1) continue;
      if (dk(p[i], p[j]) < spec.min_gap) return std::nullopt;
    }
  return LabeledQuadruple{Quadruple{p}, Label::kGeneric};
}

std::optional<LabeledQuadruple> draw_r_circle(const SampleSpec& spec,
                                              Rng& rng) {
  std::array<std::optional<double>, 4> x;
  for (auto& xi : x) xi = rng.uniform(-spec.box, spec.box);
  if (spec.near_degenerate) {
    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    x[1] = *x[0] + sign * spec.min_gap * (1.0 + rng.uniform());
  } else if (rng.uniform() < 0.125) {
    // Put one parameter at infinity now and then so that ideal points go
    // through the same pipeline.
    x[static_cast<std::size_t>(rng.next() >> 62)] = std::nullopt;
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (spec.near_degenerate && i == 0 && j == 1) continue;
      if (x[i] && x[j] && std::abs(*x[i] - *x[j]) < spec.min_gap)
        return std::nullopt;
    }
  Points p;
  for (std::size_t i = 0; i < 4; ++i) p[i] = r_circle_point(x[i]);
  return LabeledQuadruple{Quadruple{p}, separation_label(x)};
}

std::optional<LabeledQuadruple> draw_c_circle(const SampleSpec& spec,
                                              Rng& rng) {
  const double r = rng.uniform(0.1 * spec.box, spec.box);
  const double t0 = rng.uniform(-spec.box * spec.box, spec.box * spec.box);
  std::array<double, 4> theta;
  for (double& a : theta) a = rng.uniform(0.0, kTwoPi);
  if (spec.near_degenerate) {
    theta[1] = theta[0] + spec.min_gap * (1.0 + rng.uniform());
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (spec.near_degenerate && i == 0 && j == 1) continue;
      if (circular_gap(theta[i], theta[j]) < spec.min_gap) return std::nullopt;
    }
  Points p;
  for (std::size_t i = 0; i < 4; ++i) p[i] = c_circle_point(r, t0, theta[i]);
  return LabeledQuadruple{Quadruple{p}, Label::kChain};
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& word : s_) {
    word = mix64(x);
    x += 0x9E3779B97F4A7C15ull;
  }
}

Rng Rng::for_stream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(mix64(mix64(seed) ^ mix64(~stream)));
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Complex Rng::disc(double radius) {
  const double rho = radius * std::sqrt(uniform());
  return std::polar(rho, uniform(0.0, kTwoPi));
}

const char* to_string(SampleKind k) {
  switch (k) {
    case SampleKind::kGeneric: return "generic";
    case SampleKind::kRCircle: return "rcircle";
    case SampleKind::kCCircle: return "ccircle";
  }
  return "?";
}

const char* to_string(Label l) {
  switch (l) {
    case Label::kGeneric: return "Generic";
    case Label::kRCircleSeparate13: return "RCircleSeparate13";
    case Label::kRCircleSeparate12: return "RCircleSeparate12";
    case Label::kRCircleSeparate14: return "RCircleSeparate14";
    case Label::kChain: return "Chain";
  }
  return "?";
}

std::optional<SampleKind> parse_sample_kind(std::string_view s) {
  for (SampleKind k :
       {SampleKind::kGeneric, SampleKind::kRCircle, SampleKind::kCCircle}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

std::optional<Label> parse_label(std::string_view s) {
  for (Label l : {Label::kGeneric, Label::kRCircleSeparate13,
                  Label::kRCircleSeparate12, Label::kRCircleSeparate14,
                  Label::kChain}) {
    if (s == to_string(l)) return l;
  }
  return std::nullopt;
}

void SampleSpec::validate() const {
  auto bad = [](const std::string& what) {
    throw Error(Errc::kInvalidArgument, what);
  };
  if (count < 1) bad("count must be >= 1");
  if (!(box > 0.0) || !std::isfinite(box)) bad("box must be > 0");
  if (!(min_gap > 0.0) || !std::isfinite(min_gap)) bad("min_gap must be > 0");
  if (twist_depth < 0) bad("twist_depth must be >= 0");
}

GroupElement random_junitary(Rng& rng, int depth) {
  GroupElement g = GroupElement::identity();
  for (int i = 0; i < depth; ++i) {
    GroupElement factor;
    if (rng.uniform() < 1.0 / 3.0) {
      factor = inversion();
    } else {
      Similarity sim;
      sim.phi = rng.uniform(0.0, kTwoPi);
      sim.zeta = rng.disc(kTwistZetaMax);
      sim.s = rng.uniform(-kTwistSMax, kTwistSMax);
      factor = similarity_matrix(sim);
    }
    g = factor * g;
  }
  return g;
}

Label separation_label(const std::array<std::optional<double>, 4>& x) {
  auto key = [&](std::size_t i) {
    return x[i] ? *x[i] : std::numeric_limits<double>::infinity();
  };
  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  // Interleaving pairs are positions {0, 2} and {1, 3} in cyclic order.
  const auto pos = static_cast<std::size_t>(
      std::find(order.begin(), order.end(), 0u) - order.begin());
  switch (order[(pos + 2) % 4]) {
    case 1: return Label::kRCircleSeparate12;
    case 2: return Label::kRCircleSeparate13;
    default: return Label::kRCircleSeparate14;
  }
}

LabeledQuadruple sample_one(const SampleSpec& spec, std::int64_t index) {
  spec.validate();
  Rng rng = Rng::for_stream(spec.seed, static_cast<std::uint64_t>(index));
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::optional<LabeledQuadruple> lq;
    switch (spec.kind) {
      case SampleKind::kGeneric: lq = draw_generic(spec, rng); break;
      case SampleKind::kRCircle: lq = draw_r_circle(spec, rng); break;
      case SampleKind::kCCircle: lq = draw_c_circle(spec, rng); break;
    }
    if (!lq) continue;
    const GroupElement g = random_junitary(rng, spec.twist_depth);
    for (BoundaryPoint& b : lq->q.p) b = apply(g, b);
    bool ok = true;
    for (std::size_t i = 0; i < 4 && ok; ++i)
      for (std::size_t j = i + 1; j < 4 && ok; ++j)
        ok = distinct(lq->q.p[i], lq->q.p[j]);
    if (ok) return *lq;
  }
  throw Error(Errc::kUnsatisfiable,
              "could not satisfy sampling constraints after " +
                  std::to_string(kMaxRetries) + " attempts");
}

std::vector<LabeledQuadruple> sample(const SampleSpec& spec) {
  spec.validate();
  std::vector<LabeledQuadruple> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (std::int64_t i = 0; i < spec.count; ++i)
    out.push_back(sample_one(spec, i));
  return out;
}

Sampler::Sampler(SampleSpec spec) : spec_(spec) { spec_.validate(); }

LabeledQuadruple Sampler::next() {
  if (done()) throw Error(Errc::kInvalidArgument, "sampler exhausted");
  return sample_one(spec_, next_++);
}

}  // namespace kcg
