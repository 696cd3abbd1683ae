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

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "kcg/error.hpp"
#include "kcg/ptolemy.hpp"
#include "test_util.hpp"

namespace kcg {
namespace {

TEST(Rng, PinnedStream) {
  // xoshiro256** seeded through SplitMix64; these values must never change.
  Rng rng(0);
  EXPECT_EQ(rng.next(), 0x99ec5f36cb75f2b4ull);
  EXPECT_EQ(rng.next(), 0xbf6e1f784956452aull);
  EXPECT_EQ(rng.next(), 0x1a5f849d4933e6e0ull);
}

TEST(Rng, UniformRangeAndDisc) {
  Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LE(std::abs(rng.disc(2.5)), 2.5);
  }
}

TEST(Rng, StreamsDiffer) {
  std::set<std::uint64_t> firsts;
  for (std::uint64_t i = 0; i < 1000; ++i)
    firsts.insert(Rng::for_stream(7, i).next());
  EXPECT_EQ(firsts.size(), 1000u);
  EXPECT_NE(Rng::for_stream(7, 0).next(), Rng::for_stream(8, 0).next());
}

TEST(Names, RoundTrip) {
  for (SampleKind k :
       {SampleKind::kGeneric, SampleKind::kRCircle, SampleKind::kCCircle})
    EXPECT_EQ(parse_sample_kind(to_string(k)), k);
  for (Label l : {Label::kGeneric, Label::kRCircleSeparate13,
                  Label::kRCircleSeparate12, Label::kRCircleSeparate14,
                  Label::kChain})
    EXPECT_EQ(parse_label(to_string(l)), l);
  EXPECT_FALSE(parse_sample_kind("chain").has_value());
  EXPECT_FALSE(parse_label("generic").has_value());
}

TEST(SeparationLabel, Examples) {
  EXPECT_EQ(separation_label({0.0, 1.0, 2.0, 3.0}), Label::kRCircleSeparate13);
  EXPECT_EQ(separation_label({0.0, 2.0, 1.0, 3.0}), Label::kRCircleSeparate12);
  EXPECT_EQ(separation_label({0.0, 1.0, 3.0, 2.0}), Label::kRCircleSeparate14);
  // Cyclic order: infinity sits after the largest real.
  EXPECT_EQ(separation_label({std::nullopt, 0.0, 1.0, 2.0}),
            Label::kRCircleSeparate13);
  EXPECT_EQ(separation_label({3.0, 2.0, 1.0, 0.0}), Label::kRCircleSeparate13);
}

TEST(RandomJUnitary, DepthZeroIsIdentity) {
  Rng rng(1);
  EXPECT_EQ(random_junitary(rng, 0), GroupElement::identity());
}

TEST(RandomJUnitary, DepthOneCanBeTheInversion) {
  bool saw_inversion = false;
  for (std::uint64_t seed = 0; seed < 64 && !saw_inversion; ++seed) {
    Rng rng(seed);
    saw_inversion = random_junitary(rng, 1) == inversion();
  }
  EXPECT_TRUE(saw_inversion);
}

TEST(RandomJUnitary, AlwaysJUnitary) {
  Rng rng(2);
  for (int depth = 0; depth <= 8; ++depth)
    for (int i = 0; i < 200; ++i)
      EXPECT_TRUE(is_j_unitary(random_junitary(rng, depth), 1e-9));
}

TEST(SampleSpec, Validation) {
  auto expect_invalid = [](SampleSpec s) {
    try {
      s.validate();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kInvalidArgument);
    }
  };
  SampleSpec s;
  EXPECT_NO_THROW(s.validate());
  s.count = 0;
  expect_invalid(s);
  s = {};
  s.box = -1;
  expect_invalid(s);
  s = {};
  s.min_gap = 0;
  expect_invalid(s);
  s = {};
  s.twist_depth = -1;
  expect_invalid(s);
}

TEST(Sample, DeterministicAndIndexAddressable) {
  for (SampleKind kind :
       {SampleKind::kGeneric, SampleKind::kRCircle, SampleKind::kCCircle}) {
    SampleSpec spec;
    spec.kind = kind;
    spec.seed = 99;
    spec.count = 50;
    const auto a = sample(spec), b = sample(spec);
    ASSERT_EQ(a.size(), 50u);
    Sampler sampler(spec);
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].q.p, b[i].q.p);
      EXPECT_EQ(a[i].label, b[i].label);
      const LabeledQuadruple c = sampler.next();
      EXPECT_EQ(c.q.p, a[i].q.p);
      EXPECT_EQ(sample_one(spec, static_cast<std::int64_t>(i)).q.p, a[i].q.p);
    }
    EXPECT_TRUE(sampler.done());
    EXPECT_THROW(sampler.next(), Error);
  }
}

TEST(Sample, ZeroTwistRCirclesStayOnTheRealLine) {
  SampleSpec spec;
  spec.kind = SampleKind::kRCircle;
  spec.twist_depth = 0;
  spec.count = 500;
  int infinities = 0;
  for (const auto& lq : sample(spec)) {
    for (const auto& p : lq.q.p) {
      if (p.is_infinity()) {
        ++infinities;
        continue;
      }
      EXPECT_EQ(p.finite().z.imag(), 0.0);
      EXPECT_EQ(p.finite().t, 0.0);
      EXPECT_LE(std::abs(p.finite().z.real()), spec.box);
    }
  }
  EXPECT_GT(infinities, 0);
}

TEST(Sample, GenericRespectsBoxAndGap) {
  SampleSpec spec;
  spec.twist_depth = 0;
  spec.count = 500;
  spec.min_gap = 0.5;
  for (const auto& lq : sample(spec)) {
    EXPECT_EQ(lq.label, Label::kGeneric);
    for (int i = 0; i < 4; ++i) {
      EXPECT_LE(std::abs(lq.q.p[i].finite().z), spec.box);
      EXPECT_LE(std::abs(lq.q.p[i].finite().t), spec.box * spec.box);
      for (int j = i + 1; j < 4; ++j)
        EXPECT_GE(dk(lq.q.p[i], lq.q.p[j]), spec.min_gap);
    }
  }
}

TEST(Sample, NearDegeneratePlacesSecondPointClose) {
  SampleSpec spec;
  spec.twist_depth = 0;
  spec.count = 200;
  spec.min_gap = 1e-3;
  spec.near_degenerate = true;
  for (const auto& lq : sample(spec)) {
    const double d = dk(lq.q.p[0], lq.q.p[1]);
    EXPECT_GE(d, spec.min_gap * (1 - 1e-9));
    EXPECT_LE(d, 2 * spec.min_gap * (1 + 1e-9));
  }
}

TEST(Sample, LabelsAreSoundUnderTwists) {
  for (SampleKind kind : {SampleKind::kRCircle, SampleKind::kCCircle}) {
    SampleSpec spec;
    spec.kind = kind;
    spec.count = 1000;
    spec.twist_depth = 4;
    std::set<Label> seen;
    for (const auto& lq : sample(spec)) {
      seen.insert(lq.label);
      const PtolemyReport r = verify(lq.q);
      if (kind == SampleKind::kCCircle) {
        EXPECT_EQ(lq.label, Label::kChain);
        EXPECT_EQ(r.equality_case, EqualityCase::kNone);
        EXPECT_FALSE(r.r_circle);
        continue;
      }
      EXPECT_TRUE(r.r_circle);
      const EqualityCase want =
          lq.label == Label::kRCircleSeparate13   ? EqualityCase::kSeparate13
          : lq.label == Label::kRCircleSeparate12 ? EqualityCase::kSeparate12
                                                  : EqualityCase::kSeparate14;
      EXPECT_EQ(r.equality_case, want);
    }
    EXPECT_EQ(seen.size(), kind == SampleKind::kRCircle ? 3u : 1u);
  }
}

TEST(Sample, TwistDoesNotChangeCrossRatios) {
  SampleSpec flat;
  flat.kind = SampleKind::kGeneric;
  flat.count = 200;
  flat.twist_depth = 0;
  Rng rng(11);
  for (const auto& lq : sample(flat)) {
    const GroupElement g = random_junitary(rng, 3);
    Quadruple moved;
    for (int k = 0; k < 4; ++k) moved.p[k] = apply(g, lq.q.p[k]);
    const CrossRatioTriple a = triple(lq.q), b = triple(moved);
    EXPECT_LT(testing::rel_err(a.x1, b.x1), 1e-8);
    EXPECT_LT(testing::rel_err(a.x2, b.x2), 1e-8);
  }
}

TEST(Sample, UnsatisfiableGapsReported) {
  SampleSpec spec;
  spec.kind = SampleKind::kCCircle;
  spec.min_gap = 2.0;  // four angles cannot be 2 apart on a circle
  try {
    sample_one(spec, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnsatisfiable);
  }
}

}  // namespace
}  // namespace kcg
