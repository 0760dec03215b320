#include "tpgic/explore.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace tpgic {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent, platform-stable stream for draw `index` of a seeded search.
std::mt19937_64 draw_stream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1))));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(std::log(lo) + uniform01(rng) * (std::log(hi) - std::log(lo)));
}

int axis_count(const SweepAxis& ax, const char* name) {
  if (!(ax.min > 0.0) || !(ax.step > 0.0) || ax.max < ax.min)
    throw std::invalid_argument(std::string(name) +
                                " axis needs positive min/step and max >= min");
  return static_cast<int>(std::floor((ax.max - ax.min) / ax.step + 1e-9)) + 1;
}

}  // namespace

std::vector<SweepRow> sweep_plane(const SweepSpec& spec) {
  if (spec.copies < 1)
    throw std::invalid_argument("sweep needs at least one sub-channel copy");
  const int nx = axis_count(spec.x, "x");
  const int ny = axis_count(spec.y, "y");

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  for (int i = 0; i < nx; ++i) {
    const double x = spec.x.min + i * spec.x.step;
    for (int j = 0; j < ny; ++j) {
      const double y = spec.y.min + j * spec.y.step;
      Subchannel sub = spec.base;
      sub.h12 = x * std::fabs(spec.base.h11);
      sub.h21 = y * std::fabs(spec.base.h22);
      const ChannelInstance ch(
          std::vector<Subchannel>(static_cast<std::size_t>(spec.copies), sub));
      const ChannelClass cc = classify(ch);
      const SeparabilityVerdict v = analyze_separability(ch);

      SweepRow row;
      row.x_ratio = x;
      row.y_ratio = y;
      row.aggregate = cc.aggregate;
      row.verdict = v.verdict;
      row.family = v.family;
      row.membership = v.memberships.front();
      row.boundary_tie = cc.per_subchannel.front().boundary_tie ||
                         row.membership.near_boundary;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

SearchResult search_inseparable(std::uint64_t seed, std::uint64_t budget,
                                std::size_t subchannels,
                                const SearchOptions& opts) {
  if (budget < 1) throw std::invalid_argument("search budget must be >= 1");
  if (subchannels < 2)
    throw std::invalid_argument("search needs at least two sub-channels");

  constexpr double kRatioLo = 0.05, kRatioHi = 1.0;
  constexpr double kPowerLo = 0.1, kPowerHi = 100.0;

  double best_gap = -std::numeric_limits<double>::infinity();
  std::uint64_t best_draw = 0;
  std::optional<ChannelInstance> best_channel;

  for (std::uint64_t i = 0; i < budget; ++i) {
    std::mt19937_64 rng = draw_stream(seed, i);
    std::vector<Subchannel> subs(subchannels);
    for (Subchannel& s : subs) {
      s.h11 = 1.0;
      s.h22 = 1.0;
      s.h12 = log_uniform(rng, kRatioLo, kRatioHi);
      s.h21 = log_uniform(rng, kRatioLo, kRatioHi);
      s.p1 = log_uniform(rng, kPowerLo, kPowerHi);
      s.p2 = log_uniform(rng, kPowerLo, kPowerHi);
    }
    ChannelInstance ch(std::move(subs));
    const BoundsReport r = optimize_inner_bound(ch, opts.screen);
    if (r.margin > best_gap) {
      best_gap = r.margin;
      best_draw = i;
      best_channel = std::move(ch);
    }
  }

  SearchResult res{seed,     budget,  subchannels, opts.margin, best_draw,
                   best_gap, best_gap, *best_channel, {},          std::nullopt};
  OptimizeOptions refine = opts.refine;
  refine.margin_threshold = opts.margin;
  res.best_report = optimize_inner_bound(*best_channel, refine);
  if (res.best_report.margin < best_gap) {
    // Refinement took a different descent path; keep the screen's split.
    OptimizeOptions rescreen_opts = opts.screen;
    rescreen_opts.margin_threshold = opts.margin;
    const BoundsReport rescreen = optimize_inner_bound(*best_channel, rescreen_opts);
    if (rescreen.margin > res.best_report.margin) res.best_report = rescreen;
  }
  res.best_gap = res.best_report.margin;

  if (res.best_gap >= opts.margin) {
    InseparabilityCertificate cert{*best_channel, res.best_report.best_split,
                                   res.best_report.inner_joint,
                                   res.best_report.outer_independent,
                                   res.best_report.margin, seed};
    res.certificate = std::move(cert);
  }
  return res;
}

RatioSeries asymptotic_ratio(const ChannelInstance& ch,
                             const std::vector<double>& scales) {
  const Aggregate agg = classify(ch).aggregate;
  const bool strong = agg == Aggregate::Strong;
  if (!strong && agg != Aggregate::MixedA && agg != Aggregate::MixedB)
    throw ClassPreconditionError(
        "asymptotic_ratio requires a Strong or Mixed channel");
  if (scales.empty())
    throw std::invalid_argument("at least one power scale is required");
  for (std::size_t k = 0; k < scales.size(); ++k) {
    if (!(scales[k] > 0.0) || !std::isfinite(scales[k]))
      throw std::invalid_argument("power scales must be positive and finite");
    if (k > 0 && !(scales[k] < scales[k - 1]))
      throw std::invalid_argument("power scales must be strictly decreasing");
  }

  RatioSeries series;
  series.reserve(scales.size());
  for (double s : scales) {
    const ChannelInstance scaled = scale_powers(ch, s);
    RatioPoint pt;
    pt.scale = s;
    pt.joint_bits = strong ? sum_capacity_strong_joint(scaled)
                           : sum_capacity_mixed_joint(scaled);
    pt.independent_bits = strong ? sum_capacity_strong_independent(scaled)
                                 : sum_capacity_mixed_independent(scaled);
    pt.ratio = (pt.joint_bits == 0.0 && pt.independent_bits == 0.0)
                   ? 1.0
                   : pt.joint_bits / pt.independent_bits;
    series.push_back(pt);
  }
  return series;
}

}  // namespace tpgic
