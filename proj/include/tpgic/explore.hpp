// Parameter-space exploration: cross-gain plane sweeps, randomized search
// for inseparable weak channels, and the low-SNR joint/independent ratio
// series.
#pragma once

#include <cstdint>

#include "tpgic/bounds.hpp"

namespace tpgic {

struct SweepAxis {
  double min, max, step;
};

// Sweep of the (|h12|/|h11|, |h21|/|h22|) plane. The template fixes h11,
// h22 and the powers; each grid point replaces the cross coefficients and
// replicates the sub-channel `copies` times.
struct SweepSpec {
  Subchannel base;
  SweepAxis x;  // |h12|/|h11|
  SweepAxis y;  // |h21|/|h22|
  int copies = 1;
};

struct SweepRow {
  double x_ratio, y_ratio;
  Aggregate aggregate;
  Verdict verdict;
  std::optional<Family> family;
  SubchannelMembership membership;  // of the replicated sub-channel
  bool boundary_tie;
};

std::vector<SweepRow> sweep_plane(const SweepSpec& spec);

struct SearchOptions {
  double margin = 1e-3;  // certification margin in bits
  // Per-draw screening: per-subchannel coordinate descent from opposed
  // split patterns. The best draw is re-optimized with `refine`.
  OptimizeOptions screen{0.1, 1e-3, true, 2, 1e-3};
  OptimizeOptions refine{0.01, 1e-6, true, 3, 1e-3};
};

struct SearchResult {
  std::uint64_t seed;
  std::uint64_t budget;
  std::size_t subchannels;
  double margin_threshold;
  std::uint64_t best_draw;       // index of the winning draw
  double best_screen_gap;        // inner - outer at screening settings
  double best_gap;               // inner - outer after refinement
  ChannelInstance best_channel;
  BoundsReport best_report;
  std::optional<InseparabilityCertificate> certificate;
};

// Draws `budget` random weak channels (unit direct gains, cross/direct
// ratios log-uniform on [0.05, 1], powers log-uniform on [0.1, 100]),
// tracks the draw with the largest inner-minus-outer gap, and certifies it
// when the refined gap reaches the margin. Deterministic in (seed, budget,
// subchannels): draw i uses an independent stream derived from (seed, i).
SearchResult search_inseparable(std::uint64_t seed, std::uint64_t budget,
                                std::size_t subchannels,
                                const SearchOptions& opts = {});

struct RatioPoint {
  double scale;
  double joint_bits;
  double independent_bits;
  double ratio;  // joint / independent, defined as 1 when both vanish
};

using RatioSeries = std::vector<RatioPoint>;

// Joint and independent sum capacities of the power-scaled channel at each
// scale, for strong and mixed channels. Scales must be positive and
// strictly decreasing.
RatioSeries asymptotic_ratio(const ChannelInstance& ch,
                             const std::vector<double>& scales);

}  // namespace tpgic
