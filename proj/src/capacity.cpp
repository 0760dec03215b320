#include "tpgic/capacity.hpp"

#include <cmath>
#include <limits>

namespace tpgic {

namespace {

void require_aggregate(const ChannelInstance& ch, Aggregate want,
                       const char* op) {
  const Aggregate got = classify(ch).aggregate;
  if (got != want)
    throw ClassPreconditionError(std::string(op) + " requires a " +
                                 to_string(want) + " channel, got " +
                                 to_string(got));
}

// Mixed operations accept MixedA directly and MixedB after a user swap.
ChannelInstance mixed_oriented(const ChannelInstance& ch, const char* op) {
  const Aggregate got = classify(ch).aggregate;
  if (got == Aggregate::MixedA) return ch;
  if (got == Aggregate::MixedB) return swap_users(ch);
  throw ClassPreconditionError(std::string(op) +
                               " requires a MixedA or MixedB channel, got " +
                               std::string(to_string(got)));
}

// 1/2 log2 det of a symmetric positive-definite matrix via pivoted LDLT.
double half_log2_det(const Eigen::MatrixXd& m) {
  Eigen::LDLT<Eigen::MatrixXd> ldlt(m);
  if (ldlt.info() != Eigen::Success)
    throw std::runtime_error("LDLT factorization failed");
  double acc = 0.0;
  const auto d = ldlt.vectorD();
  for (Eigen::Index k = 0; k < d.size(); ++k) {
    if (!(d[k] > 0.0))
      throw std::runtime_error("matrix is not positive definite");
    acc += std::log2(d[k]);
  }
  return 0.5 * acc;
}

// Symmetric form I + Ha S Ha^T (+ Hb T Hb^T) with diagonal Ha, Hb given by
// per-subchannel coefficients.
Eigen::MatrixXd shifted_gram(const ChannelInstance& ch,
                             double Subchannel::*ca, const Eigen::MatrixXd& s,
                             const Eigen::MatrixXd* t = nullptr,
                             double Subchannel::*cb = nullptr) {
  const Eigen::Index m = static_cast<Eigen::Index>(ch.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) {
      const std::size_t ur = static_cast<std::size_t>(r);
      const std::size_t uc = static_cast<std::size_t>(c);
      double v = (ch.sub(ur).*ca) * (ch.sub(uc).*ca) * s(r, c);
      if (t != nullptr) v += (ch.sub(ur).*cb) * (ch.sub(uc).*cb) * (*t)(r, c);
      out(r, c) += v;
    }
  }
  return out;
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd s) : s_(std::move(s)) {
  if (s_.rows() != s_.cols() || s_.rows() < 1)
    throw std::invalid_argument("covariance must be a square matrix");
  const double scale = std::max(1.0, s_.cwiseAbs().maxCoeff());
  if ((s_ - s_.transpose()).cwiseAbs().maxCoeff() > kPsdTol * scale)
    throw std::invalid_argument("covariance must be symmetric");
  s_ = 0.5 * (s_ + s_.transpose().eval());  // exact symmetry for the solvers
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s_,
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::invalid_argument("covariance eigenvalue check failed");
  if (es.eigenvalues().minCoeff() < -kPsdTol)
    throw std::invalid_argument("covariance is not positive semidefinite");
}

CovarianceMatrix CovarianceMatrix::diagonal(const std::vector<double>& diag) {
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(diag.size()), static_cast<Eigen::Index>(diag.size()));
  for (Eigen::Index k = 0; k < s.rows(); ++k) s(k, k) = diag[static_cast<std::size_t>(k)];
  return CovarianceMatrix(std::move(s));
}

std::vector<double> CovarianceMatrix::diagonal_vector() const {
  std::vector<double> d(static_cast<std::size_t>(s_.rows()));
  for (Eigen::Index k = 0; k < s_.rows(); ++k) d[static_cast<std::size_t>(k)] = s_(k, k);
  return d;
}

double sum_capacity_strong_joint(const ChannelInstance& ch) {
  require_aggregate(ch, Aggregate::Strong, "sum_capacity_strong_joint");
  double ad = 0.0, e = 0.0, f = 0.0;
  for (const Subchannel& s : ch.subchannels()) {
    const SubchannelRates r = subchannel_rates(s);
    ad += r.a + r.d;
    e += r.e;
    f += r.f;
  }
  return std::min({ad, e, f});
}

double sum_capacity_strong_independent(const ChannelInstance& ch) {
  require_aggregate(ch, Aggregate::Strong, "sum_capacity_strong_independent");
  double total = 0.0;
  for (const Subchannel& s : ch.subchannels()) {
    const SubchannelRates r = subchannel_rates(s);
    total += std::min({r.a + r.d, r.e, r.f});
  }
  return total;
}

double sum_capacity_mixed_joint(const ChannelInstance& ch) {
  const ChannelInstance oriented = mixed_oriented(ch, "sum_capacity_mixed_joint");
  double f = 0.0, dg = 0.0;
  for (const Subchannel& s : oriented.subchannels()) {
    const SubchannelRates r = subchannel_rates(s);
    f += r.f;
    dg += r.d + r.g;
  }
  return std::min(f, dg);
}

double sum_capacity_mixed_independent(const ChannelInstance& ch) {
  const ChannelInstance oriented =
      mixed_oriented(ch, "sum_capacity_mixed_independent");
  double total = 0.0;
  for (const Subchannel& s : oriented.subchannels()) {
    const SubchannelRates r = subchannel_rates(s);
    total += std::min(r.f, r.d + r.g);
  }
  return total;
}

double tin_sum_rate(const ChannelInstance& ch) {
  double total = 0.0;
  for (const Subchannel& s : ch.subchannels()) {
    const SubchannelRates r = subchannel_rates(s);
    total += r.g + r.h;
  }
  return total;
}

RegionPolygon strong_region_polygon(const ChannelInstance& ch) {
  require_aggregate(ch, Aggregate::Strong, "strong_region_polygon");
  double a = 0.0, d = 0.0, e = 0.0, f = 0.0;
  for (const Subchannel& s : ch.subchannels()) {
    const SubchannelRates r = subchannel_rates(s);
    a += r.a;
    d += r.d;
    e += r.e;
    f += r.f;
  }
  const double sum_cap = std::min(e, f);

  std::vector<std::array<double, 2>> cand;
  cand.push_back({0.0, 0.0});
  cand.push_back({a, 0.0});
  if (sum_cap < a + d) {
    cand.push_back({a, sum_cap - a});
    cand.push_back({sum_cap - d, d});
  } else {
    cand.push_back({a, d});
  }
  cand.push_back({0.0, d});

  // Drop duplicates from degenerate cases (zero powers, sum bound through a
  // corner). Comparison scale follows the largest coordinate.
  const double scale = std::max({1.0, a, d});
  RegionPolygon poly;
  for (const auto& v : cand) {
    bool dup = false;
    for (const auto& w : poly.vertices)
      if (std::fabs(v[0] - w[0]) <= kTieRel * scale &&
          std::fabs(v[1] - w[1]) <= kTieRel * scale) {
        dup = true;
        break;
      }
    if (!dup) poly.vertices.push_back(v);
  }
  return poly;
}

RegionBoundValues region_bound_values(const ChannelInstance& ch,
                                      const CovarianceMatrix& s1,
                                      const CovarianceMatrix& s2) {
  const Eigen::Index m = static_cast<Eigen::Index>(ch.size());
  if (s1.dim() != m || s2.dim() != m)
    throw std::invalid_argument("covariance dimension must match sub-channel count");
  for (Eigen::Index k = 0; k < m; ++k) {
    const Subchannel& s = ch.sub(static_cast<std::size_t>(k));
    if (s1.matrix()(k, k) > s.p1 + kPsdTol * std::max(1.0, s.p1))
      throw std::invalid_argument("diag(S1) exceeds the user-1 power constraint");
    if (s2.matrix()(k, k) > s.p2 + kPsdTol * std::max(1.0, s.p2))
      throw std::invalid_argument("diag(S2) exceeds the user-2 power constraint");
  }

  RegionBoundValues v;
  v.r1 = half_log2_det(shifted_gram(ch, &Subchannel::h11, s1.matrix()));
  v.r2 = half_log2_det(shifted_gram(ch, &Subchannel::h22, s2.matrix()));
  const Eigen::MatrixXd& m2 = s2.matrix();
  v.sum_rx1 = half_log2_det(
      shifted_gram(ch, &Subchannel::h11, s1.matrix(), &m2, &Subchannel::h21));
  v.sum_rx2 = half_log2_det(
      shifted_gram(ch, &Subchannel::h12, s1.matrix(), &m2, &Subchannel::h22));
  return v;
}

Condition21Result check_condition_21(const ChannelInstance& ch,
                                     const CovarianceMatrix& s2) {
  const Eigen::Index m = static_cast<Eigen::Index>(ch.size());
  if (s2.dim() != m)
    throw std::invalid_argument("covariance dimension must match sub-channel count");
  for (std::size_t k = 0; k < ch.size(); ++k) {
    const Subchannel& s = ch.sub(k);
    if (!tie_leq(std::fabs(s.h21), std::fabs(s.h22)))
      throw ClassPreconditionError(
          "check_condition_21 requires |h21| <= |h22| in every sub-channel");
    const double diff = std::fabs(s2.matrix()(static_cast<Eigen::Index>(k),
                                              static_cast<Eigen::Index>(k)) - s.p2);
    if (diff > kPsdTol * std::max(1.0, s.p2))
      throw std::invalid_argument("diag(S2) must equal the user-2 power constraint");
  }

  const double lhs_log =
      half_log2_det(shifted_gram(ch, &Subchannel::h22, s2.matrix())) -
      half_log2_det(shifted_gram(ch, &Subchannel::h21, s2.matrix()));
  double rhs_log = 0.0;
  for (const Subchannel& s : ch.subchannels())
    rhs_log += 0.5 * std::log2(1.0 + s.h22 * s.h22 * s.p2) -
               0.5 * std::log2(1.0 + s.h21 * s.h21 * s.p2);

  Condition21Result res;
  res.lhs = std::exp2(2.0 * lhs_log);
  res.rhs = std::exp2(2.0 * rhs_log);
  res.holds = lhs_log <= rhs_log + kCapacityTol;
  return res;
}

ConcavityCheck midpoint_concavity_check(const ChannelInstance& a,
                                        const ChannelInstance& b,
                                        double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("lambda must lie in [0, 1]");
  if (a.size() != b.size())
    throw std::invalid_argument("channels must have the same sub-channel count");
  for (std::size_t m = 0; m < a.size(); ++m) {
    const Subchannel &sa = a.sub(m), &sb = b.sub(m);
    if (sa.h11 != sb.h11 || sa.h12 != sb.h12 || sa.h21 != sb.h21 ||
        sa.h22 != sb.h22)
      throw std::invalid_argument("channels must share identical coefficients");
  }
  const Aggregate cls = classify(a).aggregate;
  if (classify(b).aggregate != cls)
    throw ClassPreconditionError("channels must share the interference class");
  double (*joint)(const ChannelInstance&) = nullptr;
  switch (cls) {
    case Aggregate::Strong: joint = &sum_capacity_strong_joint; break;
    case Aggregate::MixedA:
    case Aggregate::MixedB: joint = &sum_capacity_mixed_joint; break;
    default:
      throw ClassPreconditionError(
          "midpoint_concavity_check requires a Strong or Mixed channel");
  }

  std::vector<Subchannel> blend = a.subchannels();
  for (std::size_t m = 0; m < blend.size(); ++m) {
    blend[m].p1 = lambda * a.sub(m).p1 + (1.0 - lambda) * b.sub(m).p1;
    blend[m].p2 = lambda * a.sub(m).p2 + (1.0 - lambda) * b.sub(m).p2;
  }
  const double lhs = joint(ChannelInstance(std::move(blend)));
  const double rhs = lambda * joint(a) + (1.0 - lambda) * joint(b);

  ConcavityCheck out;
  out.slack_bits = lhs - rhs;
  out.ok = out.slack_bits >= -kCapacityTol;
  return out;
}

}  // namespace tpgic
