#include "tpgic/channel.hpp"

#include <algorithm>
#include <cmath>

namespace tpgic {

namespace {

double tie_slack(double x, double y) {
  return kTieRel * std::max({1.0, std::fabs(x), std::fabs(y)});
}

bool both_finite(double x, double y) {
  return std::isfinite(x) && std::isfinite(y);
}

}  // namespace

bool tie_leq(double x, double y) {
  if (!both_finite(x, y)) return x <= y;
  return x <= y + tie_slack(x, y);
}

bool tie_geq(double x, double y) { return tie_leq(y, x); }

bool tie_lt(double x, double y) {
  if (!both_finite(x, y)) return x < y;
  return x < y - tie_slack(x, y);
}

bool tie_gt(double x, double y) { return tie_lt(y, x); }

bool tie_eq(double x, double y) {
  if (!both_finite(x, y)) return x == y;
  return std::fabs(x - y) <= tie_slack(x, y);
}

void validate_subchannel(const Subchannel& sub, const std::string& label) {
  auto coeff = [&](double v, const char* name) {
    if (!std::isfinite(v) || v == 0.0)
      throw std::invalid_argument(label + ": " + name +
                                  " must be a finite nonzero coefficient");
  };
  auto power = [&](double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument(label + ": " + name +
                                  " must be a finite power >= 0");
  };
  coeff(sub.h11, "h11");
  coeff(sub.h12, "h12");
  coeff(sub.h21, "h21");
  coeff(sub.h22, "h22");
  power(sub.p1, "p1");
  power(sub.p2, "p2");
}

ChannelInstance::ChannelInstance(std::vector<Subchannel> subchannels)
    : subs_(std::move(subchannels)) {
  if (subs_.empty())
    throw std::invalid_argument("channel must have at least one sub-channel");
  for (std::size_t m = 0; m < subs_.size(); ++m)
    validate_subchannel(subs_[m], "subchannel " + std::to_string(m));
}

SubchannelRates subchannel_rates(const Subchannel& s) {
  const double g11 = s.h11 * s.h11;
  const double g12 = s.h12 * s.h12;
  const double g21 = s.h21 * s.h21;
  const double g22 = s.h22 * s.h22;
  SubchannelRates r;
  r.a = 0.5 * std::log2(1.0 + g11 * s.p1);
  r.b = 0.5 * std::log2(1.0 + g12 * s.p1);
  r.c = 0.5 * std::log2(1.0 + g21 * s.p2);
  r.d = 0.5 * std::log2(1.0 + g22 * s.p2);
  r.e = 0.5 * std::log2(1.0 + g11 * s.p1 + g21 * s.p2);
  r.f = 0.5 * std::log2(1.0 + g12 * s.p1 + g22 * s.p2);
  r.g = 0.5 * std::log2(1.0 + g11 * s.p1 / (1.0 + g21 * s.p2));
  r.h = 0.5 * std::log2(1.0 + g22 * s.p2 / (1.0 + g12 * s.p1));
  r.i = 0.5 * std::log2(1.0 + g21 * s.p2 + g11 * s.p1 / (1.0 + g12 * s.p1));
  r.j = 0.5 * std::log2(1.0 + g12 * s.p1 + g22 * s.p2 / (1.0 + g21 * s.p2));
  return r;
}

RateQuantities rate_quantities(const ChannelInstance& ch) {
  RateQuantities out;
  out.reserve(ch.size());
  for (const Subchannel& s : ch.subchannels()) out.push_back(subchannel_rates(s));
  return out;
}

const char* to_string(Aggregate a) {
  switch (a) {
    case Aggregate::Strong: return "Strong";
    case Aggregate::MixedA: return "MixedA";
    case Aggregate::MixedB: return "MixedB";
    case Aggregate::Weak: return "Weak";
    case Aggregate::Noisy: return "Noisy";
    case Aggregate::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

SubchannelFlags classify_subchannel(const Subchannel& s) {
  const double a11 = std::fabs(s.h11);
  const double a12 = std::fabs(s.h12);
  const double a21 = std::fabs(s.h21);
  const double a22 = std::fabs(s.h22);

  SubchannelFlags f;
  const bool cross1_ge = tie_geq(a12, a11);
  const bool cross1_le = tie_leq(a12, a11);
  const bool cross2_ge = tie_geq(a21, a22);
  const bool cross2_le = tie_leq(a21, a22);
  f.strong = cross1_ge && cross2_ge;
  f.mixed_a = cross1_ge && cross2_le;
  f.mixed_b = cross1_le && cross2_ge;
  f.weak = cross1_le && cross2_le;

  const double ratio_sum = a21 / a22 + a12 / a11;
  f.noisy = tie_leq(ratio_sum, 1.0);

  f.boundary_tie =
      tie_eq(a12, a11) || tie_eq(a21, a22) || tie_eq(ratio_sum, 1.0);
  return f;
}

ChannelClass classify(const ChannelInstance& ch) {
  ChannelClass cc;
  cc.per_subchannel.reserve(ch.size());
  bool all_strong = true, all_mixed_a = true, all_mixed_b = true;
  bool all_weak = true, all_noisy = true;
  for (const Subchannel& s : ch.subchannels()) {
    SubchannelFlags f = classify_subchannel(s);
    all_strong &= f.strong;
    all_mixed_a &= f.mixed_a;
    all_mixed_b &= f.mixed_b;
    all_weak &= f.weak;
    all_noisy &= f.noisy;
    cc.per_subchannel.push_back(f);
  }
  if (all_strong) cc.valid_aggregates.push_back(Aggregate::Strong);
  if (all_mixed_a) cc.valid_aggregates.push_back(Aggregate::MixedA);
  if (all_mixed_b) cc.valid_aggregates.push_back(Aggregate::MixedB);
  if (all_noisy) cc.valid_aggregates.push_back(Aggregate::Noisy);
  if (all_weak) cc.valid_aggregates.push_back(Aggregate::Weak);
  cc.aggregate = cc.valid_aggregates.empty() ? Aggregate::Unclassified
                                             : cc.valid_aggregates.front();
  return cc;
}

ChannelInstance scale_powers(const ChannelInstance& ch, double factor) {
  if (!std::isfinite(factor) || factor < 0.0)
    throw std::invalid_argument("power scale factor must be finite and >= 0");
  std::vector<Subchannel> subs = ch.subchannels();
  for (Subchannel& s : subs) {
    s.p1 *= factor;
    s.p2 *= factor;
  }
  return ChannelInstance(std::move(subs));
}

Subchannel swap_users(const Subchannel& s) {
  Subchannel t;
  t.h11 = s.h22;
  t.h12 = s.h21;
  t.h21 = s.h12;
  t.h22 = s.h11;
  t.p1 = s.p2;
  t.p2 = s.p1;
  return t;
}

ChannelInstance swap_users(const ChannelInstance& ch) {
  std::vector<Subchannel> subs;
  subs.reserve(ch.size());
  for (const Subchannel& s : ch.subchannels()) subs.push_back(swap_users(s));
  return ChannelInstance(std::move(subs));
}

}  // namespace tpgic
