#include "tpgic/separability.hpp"

#include <cmath>

namespace tpgic {

namespace {

constexpr const char* kNoisyNote =
    "noisy-interference separability additionally requires a power condition "
    "on the constraints; only the set membership is checked here";

SubchannelMembership base_membership(const Subchannel& sub) {
  SubchannelMembership m;
  m.in_noisy = noisy_membership(sub);
  m.remark2_unknown = remark2_unknown(sub);
  return m;
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::S1: return "S1";
    case Family::S2: return "S2";
    case Family::S3: return "S3";
    case Family::M1: return "M1";
    case Family::M2: return "M2";
    case Family::Noisy: return "Noisy";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Separable: return "Separable";
    case Verdict::Inseparable: return "Inseparable";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

SubchannelMembership strong_membership(const Subchannel& sub) {
  if (!classify_subchannel(sub).strong)
    throw ClassPreconditionError(
        "strong_membership requires a strong sub-channel");

  const double g11 = sub.h11 * sub.h11, g12 = sub.h12 * sub.h12;
  const double g21 = sub.h21 * sub.h21, g22 = sub.h22 * sub.h22;
  const double r21 = g21 / g22;
  const double r12 = g12 / g11;
  const double lhs1 = 1.0 + g11 * sub.p1;
  const double lhs2 = 1.0 + g22 * sub.p2;

  // Boundary slope; the 0/0 corner (p1 = 0 with h21^2 = h22^2) reads as 1,
  // matching the value the expression takes for every p1 > 0.
  const double num = sub.p2 * (g21 - g22);
  const double q = (num == 0.0) ? 1.0 : 1.0 + num / (g11 * sub.p1);

  SubchannelMembership m = base_membership(sub);
  m.in_s1 = tie_leq(lhs1, r21) && tie_leq(lhs2, r12);
  m.in_s2 = tie_gt(lhs1, r21) && tie_geq(r21, 1.0) && tie_geq(r12, q);
  m.in_s3 = tie_gt(lhs2, r12) && tie_geq(r12, 1.0) && tie_lt(r12, q);
  m.near_boundary = tie_eq(lhs1, r21) || tie_eq(lhs2, r12) ||
                    tie_eq(r12, q) || tie_eq(r21, 1.0) || tie_eq(r12, 1.0);
  return m;
}

SubchannelMembership mixed_membership(const Subchannel& sub) {
  if (!classify_subchannel(sub).mixed_a)
    throw ClassPreconditionError(
        "mixed_membership requires |h12| >= |h11| and |h21| <= |h22|");

  const double g11 = sub.h11 * sub.h11, g12 = sub.h12 * sub.h12;
  const double g21 = sub.h21 * sub.h21, g22 = sub.h22 * sub.h22;
  const double lhs = g12 / g11;
  const double rhs = (1.0 + g22 * sub.p2) / (1.0 + g21 * sub.p2);

  SubchannelMembership m = base_membership(sub);
  m.in_m1 = tie_leq(lhs, rhs);
  m.in_m2 = tie_gt(lhs, rhs);
  m.near_boundary = tie_eq(lhs, rhs);
  return m;
}

bool noisy_membership(const Subchannel& sub) {
  const double sum = std::fabs(sub.h21) / std::fabs(sub.h22) +
                     std::fabs(sub.h12) / std::fabs(sub.h11);
  return tie_leq(sum, 1.0);
}

bool remark2_unknown(const Subchannel& sub) {
  const double r21 = std::fabs(sub.h21) / std::fabs(sub.h22);
  const double r12 = std::fabs(sub.h12) / std::fabs(sub.h11);
  return tie_gt(r21 + r12, 1.0) && tie_leq(r21, 1.0) && tie_leq(r12, 1.0);
}

SeparabilityVerdict separable_strong(const ChannelInstance& ch) {
  if (classify(ch).aggregate != Aggregate::Strong)
    throw ClassPreconditionError("separable_strong requires a Strong channel");

  SeparabilityVerdict v;
  bool all_s1 = true, all_s2 = true, all_s3 = true;
  for (const Subchannel& s : ch.subchannels()) {
    SubchannelMembership m = strong_membership(s);
    all_s1 &= *m.in_s1;
    all_s2 &= *m.in_s2;
    all_s3 &= *m.in_s3;
    v.memberships.push_back(std::move(m));
  }
  if (all_s1)
    v.family = Family::S1;
  else if (all_s2)
    v.family = Family::S2;
  else if (all_s3)
    v.family = Family::S3;
  v.verdict = v.family ? Verdict::Separable : Verdict::Inseparable;
  v.gap_bits =
      sum_capacity_strong_joint(ch) - sum_capacity_strong_independent(ch);
  return v;
}

SeparabilityVerdict separable_mixed(const ChannelInstance& ch) {
  const Aggregate agg = classify(ch).aggregate;
  if (agg != Aggregate::MixedA && agg != Aggregate::MixedB)
    throw ClassPreconditionError(
        "separable_mixed requires a MixedA or MixedB channel");
  const bool swapped = agg == Aggregate::MixedB;

  SeparabilityVerdict v;
  bool all_m1 = true, all_m2 = true;
  for (const Subchannel& s : ch.subchannels()) {
    SubchannelMembership m = mixed_membership(swapped ? swap_users(s) : s);
    all_m1 &= *m.in_m1;
    all_m2 &= *m.in_m2;
    v.memberships.push_back(std::move(m));
  }
  if (all_m1)
    v.family = Family::M1;
  else if (all_m2)
    v.family = Family::M2;
  v.verdict = v.family ? Verdict::Separable : Verdict::Inseparable;
  v.gap_bits =
      sum_capacity_mixed_joint(ch) - sum_capacity_mixed_independent(ch);
  if (swapped) v.note = "mixed sets evaluated with user indices swapped";
  return v;
}

SeparabilityVerdict analyze_separability(const ChannelInstance& ch) {
  const ChannelClass cc = classify(ch);
  switch (cc.aggregate) {
    case Aggregate::Strong:
      return separable_strong(ch);
    case Aggregate::MixedA:
    case Aggregate::MixedB:
      return separable_mixed(ch);
    case Aggregate::Noisy: {
      SeparabilityVerdict v;
      v.verdict = Verdict::Separable;
      v.family = Family::Noisy;
      for (const Subchannel& s : ch.subchannels())
        v.memberships.push_back(base_membership(s));
      v.note = kNoisyNote;
      return v;
    }
    case Aggregate::Weak: {
      SeparabilityVerdict v;
      v.verdict = Verdict::Unknown;
      for (const Subchannel& s : ch.subchannels())
        v.memberships.push_back(base_membership(s));
      v.note = "the sum capacity is open in this weak regime";
      return v;
    }
    case Aggregate::Unclassified:
    default: {
      SeparabilityVerdict v;
      v.verdict = Verdict::Unknown;
      for (const Subchannel& s : ch.subchannels())
        v.memberships.push_back(base_membership(s));
      v.note = "sub-channels fall in different interference classes";
      return v;
    }
  }
}

bool cross_check_forms(const ChannelInstance& ch) {
  const Aggregate agg = classify(ch).aggregate;
  if (agg == Aggregate::Strong) {
    bool all1 = true, all2 = true, all3 = true;
    for (const Subchannel& s : ch.subchannels()) {
      const SubchannelRates r = subchannel_rates(s);
      const double ad = r.a + r.d;
      all1 &= tie_leq(ad, std::min(r.e, r.f));
      all2 &= tie_lt(r.e, ad) && tie_leq(r.e, r.f);
      all3 &= tie_lt(r.f, ad) && tie_lt(r.f, r.e);
    }
    const bool rate_separable = all1 || all2 || all3;
    return rate_separable == (separable_strong(ch).verdict == Verdict::Separable);
  }
  if (agg == Aggregate::MixedA || agg == Aggregate::MixedB) {
    const ChannelInstance oriented =
        agg == Aggregate::MixedB ? swap_users(ch) : ch;
    bool all1 = true, all2 = true;
    for (const Subchannel& s : oriented.subchannels()) {
      const SubchannelRates r = subchannel_rates(s);
      all1 &= tie_leq(r.f, r.d + r.g);
      all2 &= tie_gt(r.f, r.d + r.g);
    }
    const bool rate_separable = all1 || all2;
    return rate_separable == (separable_mixed(ch).verdict == Verdict::Separable);
  }
  throw ClassPreconditionError(
      "cross_check_forms requires a Strong or Mixed channel");
}

}  // namespace tpgic
