#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"
#include "tpgic/channel.hpp"

using namespace tpgic;

TEST_CASE("rate quantities match the frozen symmetric instance") {
  const RateQuantities rq = rate_quantities(fixtures::symmetric_strong());
  REQUIRE(rq.size() == 1);
  const SubchannelRates& r = rq[0];
  CHECK(r.a == doctest::Approx(fixtures::kSymStrongA).epsilon(1e-12));
  CHECK(r.d == doctest::Approx(fixtures::kSymStrongA).epsilon(1e-12));
  CHECK(r.b == doctest::Approx(fixtures::kSymStrongB).epsilon(1e-12));
  CHECK(r.c == doctest::Approx(fixtures::kSymStrongB).epsilon(1e-12));
  CHECK(r.e == doctest::Approx(fixtures::kSymStrongE).epsilon(1e-12));
  CHECK(r.f == doctest::Approx(fixtures::kSymStrongE).epsilon(1e-12));
  CHECK(r.g == doctest::Approx(fixtures::kSymStrongG).epsilon(1e-12));
  CHECK(r.h == doctest::Approx(fixtures::kSymStrongG).epsilon(1e-12));
  CHECK(r.i == doctest::Approx(fixtures::kSymStrongI).epsilon(1e-12));
  CHECK(r.j == doctest::Approx(fixtures::kSymStrongI).epsilon(1e-12));
}

TEST_CASE("rate quantities match the frozen noisy instance") {
  const SubchannelRates r = rate_quantities(fixtures::noisy_single())[0];
  CHECK(r.g == doctest::Approx(fixtures::kNoisyG).epsilon(1e-12));
  CHECK(r.h == doctest::Approx(fixtures::kNoisyG).epsilon(1e-12));
  CHECK(r.i == doctest::Approx(fixtures::kNoisyI).epsilon(1e-12));
  CHECK(r.j == doctest::Approx(fixtures::kNoisyI).epsilon(1e-12));
}

TEST_CASE("zero powers zero every rate quantity") {
  const ChannelInstance ch({{0.7, -2.3, 1.9, -1.1, 0.0, 0.0}});
  const SubchannelRates r = rate_quantities(ch)[0];
  for (double v : {r.a, r.b, r.c, r.d, r.e, r.f, r.g, r.h, r.i, r.j})
    CHECK(v == 0.0);
}

TEST_CASE("rate quantities agree with the long-double oracle") {
  testgen::Gen gen(0xC0FFEE01);
  for (int t = 0; t < 500; ++t) {
    const Subchannel s = gen.any_sub();
    const SubchannelRates r = subchannel_rates(s);
    const oracle::Rates o = oracle::rates(s);
    CHECK(r.a == doctest::Approx((double)o.a).epsilon(1e-12));
    CHECK(r.e == doctest::Approx((double)o.e).epsilon(1e-12));
    CHECK(r.f == doctest::Approx((double)o.f).epsilon(1e-12));
    CHECK(r.g == doctest::Approx((double)o.g).epsilon(1e-12));
    CHECK(r.i == doctest::Approx((double)o.i).epsilon(1e-12));
    CHECK(r.j == doctest::Approx((double)o.j).epsilon(1e-12));
  }
}

TEST_CASE("ordering invariants hold exactly for random sub-channels") {
  testgen::Gen gen(0xC0FFEE02);
  for (int t = 0; t < 10000; ++t) {
    Subchannel s = gen.any_sub();
    if (t % 7 == 0) s.p1 = 0.0;  // exercise the zero-power edges
    if (t % 11 == 0) s.p2 = 0.0;
    const SubchannelRates r = subchannel_rates(s);
    REQUIRE(r.a <= r.e);
    REQUIRE(r.c <= r.e);
    REQUIRE(r.b <= r.f);
    REQUIRE(r.d <= r.f);
    REQUIRE(r.g <= r.a);
    REQUIRE(r.h <= r.d);
    REQUIRE(r.e <= r.a + r.c);
    REQUIRE(r.f <= r.b + r.d);
    for (double v : {r.a, r.b, r.c, r.d, r.e, r.f, r.g, r.h, r.i, r.j}) {
      REQUIRE(v >= 0.0);
      REQUIRE(std::isfinite(v));
    }
  }
}

TEST_CASE("rate quantities are monotone in the powers") {
  testgen::Gen gen(0xC0FFEE03);
  for (int t = 0; t < 2000; ++t) {
    const Subchannel s = gen.any_sub();
    Subchannel up1 = s, up2 = s;
    up1.p1 = s.p1 * gen.uniform(1.5, 4.0) + 0.1;
    up2.p2 = s.p2 * gen.uniform(1.5, 4.0) + 0.1;
    const SubchannelRates r = subchannel_rates(s);
    const SubchannelRates r1 = subchannel_rates(up1);
    const SubchannelRates r2 = subchannel_rates(up2);
    CHECK(r1.e >= r.e);
    CHECK(r1.f >= r.f);
    CHECK(r1.a >= r.a);
    CHECK(r1.b >= r.b);
    CHECK(r2.e >= r.e);
    CHECK(r2.f >= r.f);
    CHECK(r2.c >= r.c);
    CHECK(r2.d >= r.d);
  }
}

TEST_CASE("classification of the worked instances") {
  CHECK(classify(fixtures::symmetric_strong()).aggregate == Aggregate::Strong);
  CHECK(classify(fixtures::opposed_strong_pair()).aggregate == Aggregate::Strong);
  CHECK(classify(fixtures::mixed_single()).aggregate == Aggregate::MixedA);
  CHECK(classify(fixtures::mixed_pair()).aggregate == Aggregate::MixedA);
  CHECK(classify(fixtures::noisy_single()).aggregate == Aggregate::Noisy);
}

TEST_CASE("mixed flags across sub-channels give Unclassified") {
  testgen::Gen gen(0xC0FFEE04);
  const ChannelInstance ch({gen.strong_sub(), gen.weak_sub()});
  CHECK(classify(ch).aggregate == Aggregate::Unclassified);
}

TEST_CASE("boundary sub-channels carry several flags") {
  const Subchannel s{1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
  const SubchannelFlags f = classify_subchannel(s);
  CHECK(f.strong);
  CHECK(f.mixed_a);
  CHECK(f.mixed_b);
  CHECK(f.weak);
  CHECK(f.boundary_tie);
  const ChannelClass cc = classify(ChannelInstance({s}));
  CHECK(cc.aggregate == Aggregate::Strong);  // resolution prefers Strong
  CHECK(cc.valid_aggregates.size() == 4);
}

TEST_CASE("noisy boundary counts as noisy") {
  const Subchannel s{1.0, 0.5, 0.5, 1.0, 1.0, 1.0};
  CHECK(classify_subchannel(s).noisy);
  CHECK(!classify_subchannel(fixtures::symmetric_strong().sub(0)).noisy);
}

TEST_CASE("noisy flag implies the weak flag") {
  testgen::Gen gen(0xC0FFEE05);
  for (int t = 0; t < 5000; ++t) {
    const SubchannelFlags f = classify_subchannel(gen.any_sub());
    if (f.noisy) CHECK(f.weak);
  }
}

TEST_CASE("classification is scale-invariant in the coefficients") {
  testgen::Gen gen(0xC0FFEE06);
  for (int t = 0; t < 5000; ++t) {
    const Subchannel s = gen.any_sub();
    Subchannel scaled = s;
    const double c = gen.log_uniform(1e-3, 1e3);
    scaled.h11 *= c;
    scaled.h12 *= c;
    scaled.h21 *= c;
    scaled.h22 *= c;
    const SubchannelFlags f = classify_subchannel(s);
    const SubchannelFlags g = classify_subchannel(scaled);
    CHECK(f.strong == g.strong);
    CHECK(f.mixed_a == g.mixed_a);
    CHECK(f.mixed_b == g.mixed_b);
    CHECK(f.weak == g.weak);
    CHECK(f.noisy == g.noisy);
  }
}

TEST_CASE("scale_powers") {
  const ChannelInstance e1 = fixtures::symmetric_strong();
  SUBCASE("identity") {
    const ChannelInstance out = scale_powers(e1, 1.0);
    CHECK(out.sub(0).p1 == 1.0);
    CHECK(out.sub(0).p2 == 1.0);
  }
  SUBCASE("zero") {
    const ChannelInstance out = scale_powers(e1, 0.0);
    CHECK(out.sub(0).p1 == 0.0);
    CHECK(out.sub(0).p2 == 0.0);
  }
  SUBCASE("small factor") {
    const ChannelInstance out = scale_powers(e1, 1e-4);
    CHECK(out.sub(0).p1 == 1e-4);
    CHECK(out.sub(0).p2 == 1e-4);
    CHECK(out.sub(0).h12 == 2.0);  // coefficients untouched
  }
  SUBCASE("invalid factors rejected") {
    CHECK_THROWS_AS(scale_powers(e1, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(scale_powers(e1, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(scale_powers(e1, INFINITY), std::invalid_argument);
  }
}

TEST_CASE("swap_users is an involution and maps MixedB to MixedA") {
  testgen::Gen gen(0xC0FFEE07);
  for (int t = 0; t < 200; ++t) {
    const ChannelInstance ch = gen.mixed_b_channel(1, 3);
    CHECK(classify(ch).aggregate == Aggregate::MixedB);
    const ChannelInstance swapped = swap_users(ch);
    CHECK(classify(swapped).aggregate == Aggregate::MixedA);
    const ChannelInstance back = swap_users(swapped);
    for (std::size_t m = 0; m < ch.size(); ++m) {
      CHECK(back.sub(m).h11 == ch.sub(m).h11);
      CHECK(back.sub(m).h12 == ch.sub(m).h12);
      CHECK(back.sub(m).p1 == ch.sub(m).p1);
    }
  }
}

TEST_CASE("invalid channels are rejected") {
  CHECK_THROWS_AS(ChannelInstance({}), std::invalid_argument);
  CHECK_THROWS_AS(ChannelInstance({{0.0, 1, 1, 1, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(ChannelInstance({{1, 1, 1, 1, -1.0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(ChannelInstance({{1, 1, std::nan(""), 1, 1, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ChannelInstance({{1, 1, 1, 1, 1, INFINITY}}),
                  std::invalid_argument);
}

TEST_CASE("tie comparisons") {
  CHECK(tie_leq(1.0, 1.0 + 1e-15));
  CHECK(tie_leq(1.0 + 1e-15, 1.0));  // within the slack
  CHECK(!tie_lt(1.0, 1.0 + 1e-15));
  CHECK(tie_lt(1.0, 1.0 + 1e-9));
  CHECK(tie_eq(2.0, 2.0 + 1e-13));
  CHECK(!tie_eq(2.0, 2.0 + 1e-9));
  CHECK(tie_lt(1.0, INFINITY));
  CHECK(!tie_geq(1.0, INFINITY));
}
