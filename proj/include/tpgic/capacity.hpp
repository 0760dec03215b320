// Sum capacities for strong and mixed channels under joint and independent
// coding, the treat-interference-as-noise sum rate, the strong capacity-region
// polygon, and the log-det utilities behind the diagonal-optimality checks.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "tpgic/channel.hpp"

namespace tpgic {

// Symmetric positive-semidefinite M x M covariance. Construction enforces
// symmetry and an eigenvalue floor of -kPsdTol.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Eigen::MatrixXd s);
  static CovarianceMatrix diagonal(const std::vector<double>& diag);

  const Eigen::MatrixXd& matrix() const { return s_; }
  Eigen::Index dim() const { return s_.rows(); }
  std::vector<double> diagonal_vector() const;

 private:
  Eigen::MatrixXd s_;
};

// Convex rate-region polygon, vertices counterclockwise starting at (0,0).
// Degenerate regions collapse to a segment or a single vertex.
struct RegionPolygon {
  std::vector<std::array<double, 2>> vertices;
};

// Joint-coding sum capacity of a strong channel:
//   min(sum_m a_m + d_m, sum_m e_m, sum_m f_m).
double sum_capacity_strong_joint(const ChannelInstance& ch);

// Independent-coding sum capacity of a strong channel:
//   sum_m min(a_m + d_m, e_m, f_m).
double sum_capacity_strong_independent(const ChannelInstance& ch);

// Joint-coding sum capacity of a mixed channel:
//   min(sum_m f_m, sum_m d_m + g_m)
// in the |h12| >= |h11|, |h21| <= |h22| orientation; MixedB channels are
// evaluated after swapping user indices.
double sum_capacity_mixed_joint(const ChannelInstance& ch);

// Independent-coding sum capacity of a mixed channel:
//   sum_m min(f_m, d_m + g_m), with the same MixedB swap.
double sum_capacity_mixed_independent(const ChannelInstance& ch);

// Treat-interference-as-noise sum rate sum_m (g_m + h_m). Achievable under
// independent coding for every channel.
double tin_sum_rate(const ChannelInstance& ch);

// Capacity-region polygon of a strong channel at full diagonal power:
//   { R >= 0, R1 <= sum a_m, R2 <= sum d_m, R1+R2 <= min(sum e_m, sum f_m) }.
RegionPolygon strong_region_polygon(const ChannelInstance& ch);

// The four region bounds of the strong channel at covariances S1, S2:
//   r1      = 1/2 log2 |I + H11 S1 H11^T|
//   r2      = 1/2 log2 |I + H22 S2 H22^T|
//   sum_rx1 = 1/2 log2 |I + H11 S1 H11^T + H21 S2 H21^T|
//   sum_rx2 = 1/2 log2 |I + H12 S1 H12^T + H22 S2 H22^T|
struct RegionBoundValues {
  double r1, r2, sum_rx1, sum_rx2;
};

// Requires dim(S_k) == M and diag(S_k) <= P_k elementwise (within kPsdTol
// slack). Determinants via pivoted LDLT of the symmetric forms.
RegionBoundValues region_bound_values(const ChannelInstance& ch,
                                      const CovarianceMatrix& s1,
                                      const CovarianceMatrix& s2);

// Determinant-ratio inequality behind diagonal optimality for mixed channels:
//   |I + H22^2 S2| / |I + H21^2 S2| <= |I + H22^2 P2| / |I + H21^2 P2|
// for S2 with diag(S2) = P2. Requires |h21,m| <= |h22,m| for all m.
struct Condition21Result {
  bool holds;
  double lhs, rhs;
};

Condition21Result check_condition_21(const ChannelInstance& ch,
                                     const CovarianceMatrix& s2);

// Midpoint concavity of the class-appropriate joint sum capacity: checks
//   C(lambda*P' + (1-lambda)*P'') >= lambda*C(P') + (1-lambda)*C(P'') - tol
// for two channels sharing coefficients and class. slack_bits = lhs - rhs.
struct ConcavityCheck {
  bool ok;
  double slack_bits;
};

ConcavityCheck midpoint_concavity_check(const ChannelInstance& a,
                                        const ChannelInstance& b,
                                        double lambda);

}  // namespace tpgic
