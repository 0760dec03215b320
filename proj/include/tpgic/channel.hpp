// Channel data model for two-sided parallel Gaussian interference channels:
// per-subchannel coefficients/powers, the ten per-subchannel rate quantities,
// and the interference-regime classification.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpgic {

// Relative slack used by every magnitude comparison that defines a class or
// set boundary. Non-strict inequalities get the slack toward membership,
// strict ones must clear it.
inline constexpr double kTieRel = 1e-12;

// Eigenvalue floor for positive-semidefiniteness checks.
inline constexpr double kPsdTol = 1e-10;

// Absolute tolerance (in bits) for sum-capacity comparisons.
inline constexpr double kCapacityTol = 1e-9;

// Tie-tolerant comparisons. Slack is kTieRel * max(1, |x|, |y|); non-finite
// operands fall back to the plain comparison.
bool tie_leq(double x, double y);
bool tie_geq(double x, double y);
bool tie_lt(double x, double y);  // strictly below, beyond the slack
bool tie_gt(double x, double y);  // strictly above, beyond the slack
bool tie_eq(double x, double y);  // within the slack of equality

// Thrown when an operation is applied to a channel outside the interference
// class it is defined for.
class ClassPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One parallel sub-channel: four real coefficients (transmitter k to
// receiver l) and the two per-user average power constraints. Unit noise
// variance is baked into the model.
struct Subchannel {
  double h11 = 1.0;
  double h12 = 1.0;
  double h21 = 1.0;
  double h22 = 1.0;
  double p1 = 0.0;
  double p2 = 0.0;
};

// Throws std::invalid_argument unless all coefficients are finite and
// nonzero and both powers are finite and >= 0. `label` prefixes messages.
void validate_subchannel(const Subchannel& sub, const std::string& label);

// An ordered list of M >= 1 sub-channels. Immutable after construction.
class ChannelInstance {
 public:
  explicit ChannelInstance(std::vector<Subchannel> subchannels);

  std::size_t size() const { return subs_.size(); }
  const Subchannel& sub(std::size_t m) const { return subs_[m]; }
  const std::vector<Subchannel>& subchannels() const { return subs_; }

 private:
  std::vector<Subchannel> subs_;
};

// The ten per-subchannel rate quantities, in bits per channel use.
//   a = 1/2 log2(1 + h11^2 p1)          b = 1/2 log2(1 + h12^2 p1)
//   c = 1/2 log2(1 + h21^2 p2)          d = 1/2 log2(1 + h22^2 p2)
//   e = 1/2 log2(1 + h11^2 p1 + h21^2 p2)
//   f = 1/2 log2(1 + h12^2 p1 + h22^2 p2)
//   g = 1/2 log2(1 + h11^2 p1 / (1 + h21^2 p2))
//   h = 1/2 log2(1 + h22^2 p2 / (1 + h12^2 p1))
//   i = 1/2 log2(1 + h21^2 p2 + h11^2 p1 / (1 + h12^2 p1))
//   j = 1/2 log2(1 + h12^2 p1 + h22^2 p2 / (1 + h21^2 p2))
struct SubchannelRates {
  double a, b, c, d, e, f, g, h, i, j;
};

using RateQuantities = std::vector<SubchannelRates>;

SubchannelRates subchannel_rates(const Subchannel& sub);
RateQuantities rate_quantities(const ChannelInstance& ch);

// Aggregate interference regime. A channel gets a named regime only when
// every sub-channel carries the corresponding flag.
enum class Aggregate { Strong, MixedA, MixedB, Weak, Noisy, Unclassified };

const char* to_string(Aggregate a);

// Per-subchannel regime flags. The defining comparisons are non-strict, so
// boundary sub-channels carry several flags at once.
//   strong:  |h12| >= |h11| and |h21| >= |h22|
//   mixed_a: |h12| >= |h11| and |h21| <= |h22|
//   mixed_b: |h12| <= |h11| and |h21| >= |h22|
//   weak:    |h12| <= |h11| and |h21| <= |h22|
//   noisy:   |h21|/|h22| + |h12|/|h11| <= 1   (implies weak)
struct SubchannelFlags {
  bool strong = false;
  bool mixed_a = false;
  bool mixed_b = false;
  bool weak = false;
  bool noisy = false;
  bool boundary_tie = false;  // some defining comparison sits within the tie slack
};

struct ChannelClass {
  std::vector<SubchannelFlags> per_subchannel;
  Aggregate aggregate = Aggregate::Unclassified;
  // Every aggregate consistent with the flags; `aggregate` is the first of
  // Strong > MixedA > MixedB > Noisy > Weak among them.
  std::vector<Aggregate> valid_aggregates;
};

SubchannelFlags classify_subchannel(const Subchannel& sub);
ChannelClass classify(const ChannelInstance& ch);

// Returns a copy with every power multiplied by `factor` (>= 0, finite);
// coefficients are unchanged.
ChannelInstance scale_powers(const ChannelInstance& ch, double factor);

// Relabels user 1 <-> 2: h11<->h22, h12<->h21, p1<->p2 in every sub-channel.
// Maps MixedB channels onto MixedA orientation.
ChannelInstance swap_users(const ChannelInstance& ch);
Subchannel swap_users(const Subchannel& sub);

}  // namespace tpgic
