#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "tpgic/separability.hpp"

using namespace tpgic;

TEST_CASE("strong membership on the worked instances") {
  const SubchannelMembership m1 =
      strong_membership(fixtures::symmetric_strong().sub(0));
  CHECK(*m1.in_s1);
  CHECK(!*m1.in_s2);
  CHECK(!*m1.in_s3);

  const ChannelInstance e2 = fixtures::opposed_strong_pair();
  const SubchannelMembership ma = strong_membership(e2.sub(0));
  CHECK(!*ma.in_s1);
  CHECK(*ma.in_s2);
  CHECK(!*ma.in_s3);
  const SubchannelMembership mb = strong_membership(e2.sub(1));
  CHECK(!*mb.in_s1);
  CHECK(!*mb.in_s2);
  CHECK(*mb.in_s3);
}

TEST_CASE("strong membership rejects non-strong sub-channels") {
  CHECK_THROWS_AS(strong_membership(fixtures::mixed_single().sub(0)),
                  ClassPreconditionError);
}

TEST_CASE("strong sets are pairwise exclusive and cover generic draws") {
  testgen::Gen gen(0x5EB01);
  for (int t = 0; t < 20000; ++t) {
    const Subchannel s = gen.strong_sub();
    const SubchannelMembership m = strong_membership(s);
    const int count = int(*m.in_s1) + int(*m.in_s2) + int(*m.in_s3);
    if (!m.near_boundary) CHECK(count == 1);
    CHECK(!(*m.in_s1 && *m.in_s2));
    CHECK(!(*m.in_s1 && *m.in_s3));
    CHECK(!(*m.in_s2 && *m.in_s3));
  }
}

TEST_CASE("strong set membership equals the rate-inequality form") {
  testgen::Gen gen(0x5EB02);
  for (int t = 0; t < 100000; ++t) {
    const Subchannel s = gen.strong_sub();
    const SubchannelMembership m = strong_membership(s);
    const SubchannelRates r = subchannel_rates(s);
    const double ad = r.a + r.d;
    CHECK(*m.in_s1 == tie_leq(ad, std::min(r.e, r.f)));
    CHECK(*m.in_s2 == (tie_lt(r.e, ad) && tie_leq(r.e, r.f)));
    CHECK(*m.in_s3 == (tie_lt(r.f, ad) && tie_lt(r.f, r.e)));
  }
}

TEST_CASE("mixed set membership equals the rate form and partitions") {
  testgen::Gen gen(0x5EB03);
  for (int t = 0; t < 100000; ++t) {
    const Subchannel s = gen.mixed_a_sub();
    const SubchannelMembership m = mixed_membership(s);
    const SubchannelRates r = subchannel_rates(s);
    CHECK(*m.in_m1 == tie_leq(r.f, r.d + r.g));
    CHECK(*m.in_m2 != *m.in_m1);  // the two sets partition
  }
}

TEST_CASE("noisy membership") {
  CHECK(noisy_membership(fixtures::noisy_single().sub(0)));
  CHECK(noisy_membership({1.0, 0.5, 0.5, 1.0, 1.0, 1.0}));  // boundary
  CHECK(!noisy_membership(fixtures::symmetric_strong().sub(0)));
}

TEST_CASE("remark-2 unknown regime") {
  CHECK(remark2_unknown({1.0, 0.7, 0.7, 1.0, 1.0, 1.0}));
  CHECK(!remark2_unknown(fixtures::noisy_single().sub(0)));
  CHECK(!remark2_unknown(fixtures::symmetric_strong().sub(0)));
}

TEST_CASE("separable_strong on the worked instances") {
  const SeparabilityVerdict v1 = separable_strong(fixtures::symmetric_strong());
  CHECK(v1.verdict == Verdict::Separable);
  CHECK(*v1.family == Family::S1);
  CHECK(*v1.gap_bits == doctest::Approx(0.0).epsilon(1e-12));

  const SeparabilityVerdict v2 =
      separable_strong(fixtures::opposed_strong_pair());
  CHECK(v2.verdict == Verdict::Inseparable);
  CHECK(!v2.family);
  CHECK(*v2.gap_bits == doctest::Approx(fixtures::kOpposedGap).epsilon(1e-9));

  const Subchannel s = fixtures::symmetric_strong().sub(0);
  const SeparabilityVerdict v3 = separable_strong(ChannelInstance({s, s}));
  CHECK(v3.verdict == Verdict::Separable);
  CHECK(*v3.family == Family::S1);
}

TEST_CASE("separable_mixed on the worked instances") {
  const SeparabilityVerdict v3 = separable_mixed(fixtures::mixed_single());
  CHECK(v3.verdict == Verdict::Separable);
  CHECK(*v3.family == Family::M2);
  CHECK(*v3.gap_bits == doctest::Approx(0.0).epsilon(1e-12));

  const SeparabilityVerdict v5 = separable_mixed(fixtures::mixed_pair());
  CHECK(v5.verdict == Verdict::Inseparable);
  CHECK(*v5.gap_bits ==
        doctest::Approx(fixtures::kMixedPairGap).epsilon(1e-9));
  CHECK(*v5.memberships[0].in_m1);
  CHECK(*v5.memberships[1].in_m2);
}

TEST_CASE("single-subchannel mixed channels are always separable") {
  testgen::Gen gen(0x5EB04);
  for (int t = 0; t < 500; ++t) {
    const SeparabilityVerdict v = separable_mixed(gen.mixed_a_channel(1, 1));
    CHECK(v.verdict == Verdict::Separable);
  }
}

TEST_CASE("single-subchannel strong channels are always separable") {
  testgen::Gen gen(0x5EB05);
  for (int t = 0; t < 500; ++t) {
    const SeparabilityVerdict v = separable_strong(gen.strong_channel(1, 1));
    CHECK(v.verdict == Verdict::Separable);
  }
}

TEST_CASE("MixedB channels give the swapped verdict") {
  testgen::Gen gen(0x5EB06);
  for (int t = 0; t < 300; ++t) {
    const ChannelInstance a = gen.mixed_a_channel(1, 3);
    const SeparabilityVerdict va = separable_mixed(a);
    const SeparabilityVerdict vb = separable_mixed(swap_users(a));
    CHECK(va.verdict == vb.verdict);
    if (va.family) CHECK(*va.family == *vb.family);
    CHECK(*va.gap_bits == doctest::Approx(*vb.gap_bits).epsilon(1e-12));
  }
}

TEST_CASE("analyze_separability dispatch") {
  const SeparabilityVerdict noisy = analyze_separability(fixtures::noisy_single());
  CHECK(noisy.verdict == Verdict::Separable);
  CHECK(*noisy.family == Family::Noisy);
  CHECK(!noisy.gap_bits);
  CHECK(!noisy.note.empty());

  const ChannelInstance weak({{1.0, 0.7, 0.7, 1.0, 1.0, 1.0}});
  const SeparabilityVerdict unknown = analyze_separability(weak);
  CHECK(unknown.verdict == Verdict::Unknown);
  CHECK(!unknown.family);
  CHECK(!unknown.gap_bits);
  CHECK(unknown.memberships[0].remark2_unknown);

  testgen::Gen gen(0x5EB07);
  const ChannelInstance mixed_classes({gen.strong_sub(), gen.weak_sub()});
  CHECK(analyze_separability(mixed_classes).verdict == Verdict::Unknown);
}

TEST_CASE("cross-check of set and rate forms on the worked instances") {
  CHECK(cross_check_forms(fixtures::symmetric_strong()));
  CHECK(cross_check_forms(fixtures::opposed_strong_pair()));
  CHECK(cross_check_forms(fixtures::mixed_single()));
  CHECK(cross_check_forms(fixtures::mixed_pair()));
  CHECK_THROWS_AS(cross_check_forms(fixtures::noisy_single()),
                  ClassPreconditionError);
}

TEST_CASE("cross-check holds on random strong and mixed channels") {
  testgen::Gen gen(0x5EB08);
  for (int t = 0; t < 2000; ++t) {
    CHECK(cross_check_forms(gen.strong_channel(1, 3)));
    CHECK(cross_check_forms(gen.mixed_a_channel(1, 3)));
    CHECK(cross_check_forms(gen.mixed_b_channel(1, 3)));
  }
}

TEST_CASE("verdict is equivalent to a vanishing capacity gap") {
  testgen::Gen gen(0x5EB09);
  for (int t = 0; t < 2000; ++t) {
    const ChannelInstance sch = gen.strong_channel(1, 3);
    const SeparabilityVerdict sv = separable_strong(sch);
    bool boundary = false;
    for (const auto& m : sv.memberships) boundary |= m.near_boundary;
    if (!boundary)
      CHECK((sv.verdict == Verdict::Separable) ==
            (std::fabs(*sv.gap_bits) <= kCapacityTol));

    const ChannelInstance mch = gen.mixed_a_channel(1, 3);
    const SeparabilityVerdict mv = separable_mixed(mch);
    boundary = false;
    for (const auto& m : mv.memberships) boundary |= m.near_boundary;
    if (!boundary)
      CHECK((mv.verdict == Verdict::Separable) ==
            (std::fabs(*mv.gap_bits) <= kCapacityTol));
  }
}
