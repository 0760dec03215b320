// Worked instances with expected values frozen from a high-precision
// evaluation of the closed forms (cross-checked by the long-double oracle).
#pragma once

#include "tpgic/channel.hpp"

namespace fixtures {

// M=1, coefficients (1, 2, 2, 1), powers (1, 1): symmetric strong channel.
inline tpgic::ChannelInstance symmetric_strong() {
  return tpgic::ChannelInstance({{1.0, 2.0, 2.0, 1.0, 1.0, 1.0}});
}

// M=2 strong channel with opposed cross gains; joint coding beats
// independent coding.
inline tpgic::ChannelInstance opposed_strong_pair() {
  return tpgic::ChannelInstance(
      {{1.0, 3.0, 1.1, 1.0, 1.0, 1.0}, {1.0, 1.1, 3.0, 1.0, 1.0, 1.0}});
}

// M=1 mixed channel (1, 2, 0.5, 1), powers (1, 1).
inline tpgic::ChannelInstance mixed_single() {
  return tpgic::ChannelInstance({{1.0, 2.0, 0.5, 1.0, 1.0, 1.0}});
}

// M=1 noisy-interference channel (1, 0.4, 0.4, 1), powers (1, 1).
inline tpgic::ChannelInstance noisy_single() {
  return tpgic::ChannelInstance({{1.0, 0.4, 0.4, 1.0, 1.0, 1.0}});
}

// M=2 mixed channel whose sub-channels sit in different separability sets.
inline tpgic::ChannelInstance mixed_pair() {
  return tpgic::ChannelInstance(
      {{1.0, 1.1, 0.5, 1.0, 1.0, 1.0}, {1.0, 2.0, 0.5, 1.0, 1.0, 1.0}});
}

// symmetric_strong rate quantities.
inline constexpr double kSymStrongA = 0.5;
inline constexpr double kSymStrongB = 1.1609640474436812;   // 1/2 log2 5
inline constexpr double kSymStrongE = 1.2924812503605781;   // 1/2 log2 6
inline constexpr double kSymStrongG = 0.13151720291689692;  // 1/2 log2 1.2
inline constexpr double kSymStrongI = 1.1892558116268649;   // 1/2 log2 5.2
inline constexpr double kSymStrongJoint = 1.0;
inline constexpr double kSymStrongTin = 0.26303440583379383;
inline constexpr double kSymStrongOuter = 0.63151720291689692;

// opposed_strong_pair capacities.
inline constexpr double kOpposedJoint = 2.0;
inline constexpr double kOpposedIndependent = 1.6825732973475785;
inline constexpr double kOpposedGap = 0.31742670265242148;
inline constexpr double kOpposedSumE = 2.5710024579924379;
inline constexpr double kOpposedSubIndependent = 0.84128664867378926;
inline constexpr double kOpposedRatioAtOne = 1.1886554975957454;

// mixed_single capacities.
inline constexpr double kMixedSingleJoint = 0.92399845327747501;
inline constexpr double kMixedSingleF = 1.2924812503605781;

// noisy_single quantities.
inline constexpr double kNoisyG = 0.44845325351794821;
inline constexpr double kNoisyI = 0.50791610161575753;
inline constexpr double kNoisyTin = 0.89690650703589641;
inline constexpr double kNoisyOuter = 0.94845325351794821;
inline constexpr double kNoisyIJ = 1.0158322032315151;

// mixed_pair capacities.
inline constexpr double kMixedPairJoint = 1.84799690655495;
inline constexpr double kMixedPairIndependent = 1.7652851019512643;
inline constexpr double kMixedPairGap = 0.082711804603685747;
inline constexpr double kMixedPairSumF = 2.1337678990343674;

}  // namespace fixtures
