// Separability analysis: the iff membership conditions for strong and mixed
// channels, the noisy-interference set, the unknown weak regime, and the
// cross-check between set-membership and rate-inequality forms.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tpgic/capacity.hpp"

namespace tpgic {

enum class Family { S1, S2, S3, M1, M2, Noisy };
enum class Verdict { Separable, Inseparable, Unknown };

const char* to_string(Family f);
const char* to_string(Verdict v);

// Per-subchannel set memberships. Families that do not apply to the
// sub-channel's class are left unset. For MixedB channels the M-family
// entries refer to the mirrored (user-swapped) sets.
struct SubchannelMembership {
  std::optional<bool> in_s1, in_s2, in_s3;
  std::optional<bool> in_m1, in_m2;
  bool in_noisy = false;
  bool remark2_unknown = false;
  bool near_boundary = false;  // a defining comparison sits within the tie slack
};

struct SeparabilityVerdict {
  Verdict verdict = Verdict::Unknown;
  std::optional<Family> family;
  std::vector<SubchannelMembership> memberships;
  // Joint minus independent sum capacity, present when both are computable
  // (strong and mixed classes only).
  std::optional<double> gap_bits;
  std::string note;
};

// Strong-subchannel membership in the three separability sets, with
// r21 = h21^2/h22^2 and r12 = h12^2/h11^2:
//   S1: 1 + h11^2 p1 <= r21           and 1 + h22^2 p2 <= r12
//   S2: 1 + h11^2 p1 >  r21 >= 1      and r12 >= q
//   S3: 1 + h22^2 p2 >  r12 >= 1      and r12 <  q
// where q = 1 + p2 (h21^2 - h22^2) / (h11^2 p1), read as 1 when the
// numerator vanishes. Rejects non-strong sub-channels.
SubchannelMembership strong_membership(const Subchannel& sub);

// Mixed-subchannel membership (orientation |h12| >= |h11|, |h21| <= |h22|):
//   M1: h12^2/h11^2 <= (1 + h22^2 p2) / (1 + h21^2 p2)
//   M2: the strict opposite. The two sets partition.
SubchannelMembership mixed_membership(const Subchannel& sub);

// |h21|/|h22| + |h12|/|h11| <= 1.
bool noisy_membership(const Subchannel& sub);

// The weak sub-regime with unknown sum capacity:
// ratio sum > 1 while both ratios are <= 1.
bool remark2_unknown(const Subchannel& sub);

// Verdict for a strong channel: separable iff one family among S1/S2/S3
// contains every sub-channel. gap = joint - independent sum capacity.
SeparabilityVerdict separable_strong(const ChannelInstance& ch);

// Verdict for a mixed channel (MixedB via user swap): separable iff all
// sub-channels are in M1 or all in M2.
SeparabilityVerdict separable_mixed(const ChannelInstance& ch);

// Dispatch on the aggregate class. Strong/Mixed get their iff verdicts;
// Noisy aggregates are Separable with family Noisy (subject to a power
// condition that is not checked here); other weak or unclassified channels
// are Unknown.
SeparabilityVerdict analyze_separability(const ChannelInstance& ch);

// Confirms that the set-membership verdict agrees with the verdict derived
// from the rate-inequality forms (strong: a+d <= min(e,f) for all m, or
// e <= min(a+d,f) for all m, or f <= min(a+d,e) for all m; mixed:
// f <= d+g for all m or f > d+g for all m). Returns true when they agree.
bool cross_check_forms(const ChannelInstance& ch);

}  // namespace tpgic
