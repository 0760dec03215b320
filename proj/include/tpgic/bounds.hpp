// Independent-coding outer bound, superposition-coding inner bound with the
// common/private power split, the split optimizer, and inseparability
// certificates for weak channels.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tpgic/separability.hpp"

namespace tpgic {

// Fraction of each user's power assigned to the common message. One entry
// per user in scalar mode, M entries per user in per-subchannel mode.
struct SplitParams {
  std::vector<double> beta1, beta2;

  static SplitParams scalar(double b1, double b2) { return {{b1}, {b2}}; }
  static SplitParams per_subchannel(std::vector<double> b1,
                                    std::vector<double> b2) {
    return {std::move(b1), std::move(b2)};
  }

  bool is_scalar() const { return beta1.size() == 1 && beta2.size() == 1; }
  double b1(std::size_t m) const { return beta1[beta1.size() == 1 ? 0 : m]; }
  double b2(std::size_t m) const { return beta2[beta2.size() == 1 ? 0 : m]; }
};

// Component rates of the superposition scheme at a given split, with the
// per-subchannel noise-plus-private-interference diagonals
//   z1_m = 1 + h11^2 p1p + h21^2 p2p,  z2_m = 1 + h12^2 p1p + h22^2 p2p.
// total = min(r1c + r2c, r12c) + r1p + r2p.
struct InnerBoundComponents {
  double r1c, r2c, r12c, r1p, r2p;
  std::vector<double> z1_diag, z2_diag;
  double total;
};

// Independent-coding sum-capacity upper bound sum_m min(a+h, d+g, i+j).
double outer_bound_independent(const ChannelInstance& ch);

// Achievable joint-coding sum rate at the given split, with diagonal
// common/private covariances at full split power. beta vectors must have
// size 1 or M with entries in [0, 1].
InnerBoundComponents inner_bound_value(const ChannelInstance& ch,
                                       const SplitParams& split);

// Allocation-free total for optimizer loops; same contract as above.
double inner_bound_total(const ChannelInstance& ch,
                         std::span<const double> beta1,
                         std::span<const double> beta2);

struct OptimizeOptions {
  double grid_resolution = 0.01;  // beta grid spacing, in (0, 0.5]
  double tol_bits = 1e-6;         // refinement stop threshold
  bool per_subchannel = false;    // optimize each beta_{k,m} separately
  int sweeps = 3;                 // coordinate-descent passes in per-subchannel mode
  double margin_threshold = 1e-3; // certification margin in bits
};

struct BoundsReport {
  double outer_independent;
  double inner_joint;
  SplitParams best_split;
  InnerBoundComponents components;
  bool inseparable_certified;  // weak channel with margin >= threshold
  double margin;               // inner_joint - outer_independent
};

// Coarse (beta1, beta2) grid followed by alternating golden-section
// refinement; per-subchannel mode adds multi-start coordinate descent over
// every beta_{k,m}. The result never falls below the best grid value. Ties
// resolve toward the lexicographically smallest split.
BoundsReport optimize_inner_bound(const ChannelInstance& ch,
                                  const OptimizeOptions& opts = {});

// Self-contained, re-verifiable witness that the superposition inner bound
// exceeds the independent-coding outer bound on a weak channel.
struct InseparabilityCertificate {
  ChannelInstance channel;
  SplitParams split;
  double inner, outer, margin;  // margin = inner - outer
  std::optional<std::uint64_t> seed;  // present when produced by a search
};

// Requires every sub-channel to carry the weak flag and margin > 0. Returns
// a certificate iff the optimized inner bound beats the outer bound by at
// least `margin` bits.
std::optional<InseparabilityCertificate> inseparability_certificate(
    const ChannelInstance& ch, double margin, const OptimizeOptions& opts = {});

// Recomputes both sides from the certificate's raw channel and split;
// true iff they reproduce the stored values to kCapacityTol.
bool verify_certificate(const InseparabilityCertificate& cert);

}  // namespace tpgic
