#include "tpgic/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace tpgic {

namespace {

void validate_split(const ChannelInstance& ch, std::span<const double> b1,
                    std::span<const double> b2) {
  auto check = [&](std::span<const double> b, const char* name) {
    if (b.size() != 1 && b.size() != ch.size())
      throw std::invalid_argument(std::string(name) +
                                  " must have one entry or one per sub-channel");
    for (double v : b)
      if (!std::isfinite(v) || v < 0.0 || v > 1.0)
        throw std::invalid_argument(std::string(name) +
                                    " entries must lie in [0, 1]");
  };
  check(b1, "beta1");
  check(b2, "beta2");
}

bool all_weak(const ChannelInstance& ch) {
  for (const Subchannel& s : ch.subchannels())
    if (!classify_subchannel(s).weak) return false;
  return true;
}

// Golden-section maximization of f on [lo, hi]. Interval-driven; returns the
// best sampled point. The objective is piecewise smooth, so this refines a
// grid-localized optimum rather than guaranteeing a global one.
std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                     double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 80 && (b - a) > 1e-12; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

struct BetaPoint {
  std::vector<double> b1, b2;
  double value;
};

// One coordinate-descent pass: per coordinate, a line grid plus a golden
// refinement around the best cell. Updates `pt` in place.
void descend_once(const ChannelInstance& ch, BetaPoint& pt, int grid_k) {
  const std::size_t n1 = pt.b1.size(), n2 = pt.b2.size();
  auto line = [&](std::vector<double>& vec, std::size_t idx) {
    auto eval = [&](double v) {
      vec[idx] = v;
      return inner_bound_total(ch, pt.b1, pt.b2);
    };
    double best_x = vec[idx], best_v = eval(best_x);
    for (int i = 0; i <= grid_k; ++i) {
      const double x = static_cast<double>(i) / grid_k;
      const double v = eval(x);
      if (v > best_v) {
        best_v = v;
        best_x = x;
      }
    }
    const double step = 1.0 / grid_k;
    auto [gx, gv] = golden_max(eval, std::max(0.0, best_x - step),
                               std::min(1.0, best_x + step));
    if (gv > best_v) {
      best_v = gv;
      best_x = gx;
    }
    vec[idx] = best_x;
    pt.value = best_v;
  };
  for (std::size_t m = 0; m < n1; ++m) line(pt.b1, m);
  for (std::size_t m = 0; m < n2; ++m) line(pt.b2, m);
}

}  // namespace

double outer_bound_independent(const ChannelInstance& ch) {
  double total = 0.0;
  for (const Subchannel& s : ch.subchannels()) {
    const SubchannelRates r = subchannel_rates(s);
    total += std::min({r.a + r.h, r.d + r.g, r.i + r.j});
  }
  return total;
}

double inner_bound_total(const ChannelInstance& ch,
                         std::span<const double> beta1,
                         std::span<const double> beta2) {
  double r1c_rx1 = 0.0, r1c_rx2 = 0.0;
  double r2c_rx1 = 0.0, r2c_rx2 = 0.0;
  double r12_rx1 = 0.0, r12_rx2 = 0.0;
  double r1p = 0.0, r2p = 0.0;
  for (std::size_t m = 0; m < ch.size(); ++m) {
    const Subchannel& s = ch.sub(m);
    const double b1 = beta1[beta1.size() == 1 ? 0 : m];
    const double b2 = beta2[beta2.size() == 1 ? 0 : m];
    const double g11 = s.h11 * s.h11, g12 = s.h12 * s.h12;
    const double g21 = s.h21 * s.h21, g22 = s.h22 * s.h22;
    const double p1c = b1 * s.p1, p1p = (1.0 - b1) * s.p1;
    const double p2c = b2 * s.p2, p2p = (1.0 - b2) * s.p2;
    const double z1 = 1.0 + g11 * p1p + g21 * p2p;
    const double z2 = 1.0 + g12 * p1p + g22 * p2p;
    r1c_rx1 += 0.5 * std::log2(1.0 + g11 * p1c / z1);
    r1c_rx2 += 0.5 * std::log2(1.0 + g12 * p1c / z2);
    r2c_rx1 += 0.5 * std::log2(1.0 + g21 * p2c / z1);
    r2c_rx2 += 0.5 * std::log2(1.0 + g22 * p2c / z2);
    r12_rx1 += 0.5 * std::log2(1.0 + (g11 * p1c + g21 * p2c) / z1);
    r12_rx2 += 0.5 * std::log2(1.0 + (g12 * p1c + g22 * p2c) / z2);
    r1p += 0.5 * std::log2(1.0 + g11 * p1p / (1.0 + g21 * p2p));
    r2p += 0.5 * std::log2(1.0 + g22 * p2p / (1.0 + g12 * p1p));
  }
  const double r1c = std::min(r1c_rx1, r1c_rx2);
  const double r2c = std::min(r2c_rx1, r2c_rx2);
  const double r12c = std::min(r12_rx1, r12_rx2);
  return std::min(r1c + r2c, r12c) + r1p + r2p;
}

InnerBoundComponents inner_bound_value(const ChannelInstance& ch,
                                       const SplitParams& split) {
  validate_split(ch, split.beta1, split.beta2);
  InnerBoundComponents out;
  out.z1_diag.reserve(ch.size());
  out.z2_diag.reserve(ch.size());
  double r1c_rx1 = 0.0, r1c_rx2 = 0.0;
  double r2c_rx1 = 0.0, r2c_rx2 = 0.0;
  double r12_rx1 = 0.0, r12_rx2 = 0.0;
  double r1p = 0.0, r2p = 0.0;
  for (std::size_t m = 0; m < ch.size(); ++m) {
    const Subchannel& s = ch.sub(m);
    const double b1 = split.b1(m), b2 = split.b2(m);
    const double g11 = s.h11 * s.h11, g12 = s.h12 * s.h12;
    const double g21 = s.h21 * s.h21, g22 = s.h22 * s.h22;
    const double p1c = b1 * s.p1, p1p = (1.0 - b1) * s.p1;
    const double p2c = b2 * s.p2, p2p = (1.0 - b2) * s.p2;
    const double z1 = 1.0 + g11 * p1p + g21 * p2p;
    const double z2 = 1.0 + g12 * p1p + g22 * p2p;
    out.z1_diag.push_back(z1);
    out.z2_diag.push_back(z2);
    r1c_rx1 += 0.5 * std::log2(1.0 + g11 * p1c / z1);
    r1c_rx2 += 0.5 * std::log2(1.0 + g12 * p1c / z2);
    r2c_rx1 += 0.5 * std::log2(1.0 + g21 * p2c / z1);
    r2c_rx2 += 0.5 * std::log2(1.0 + g22 * p2c / z2);
    r12_rx1 += 0.5 * std::log2(1.0 + (g11 * p1c + g21 * p2c) / z1);
    r12_rx2 += 0.5 * std::log2(1.0 + (g12 * p1c + g22 * p2c) / z2);
    r1p += 0.5 * std::log2(1.0 + g11 * p1p / (1.0 + g21 * p2p));
    r2p += 0.5 * std::log2(1.0 + g22 * p2p / (1.0 + g12 * p1p));
  }
  out.r1c = std::min(r1c_rx1, r1c_rx2);
  out.r2c = std::min(r2c_rx1, r2c_rx2);
  out.r12c = std::min(r12_rx1, r12_rx2);
  out.r1p = r1p;
  out.r2p = r2p;
  out.total = std::min(out.r1c + out.r2c, out.r12c) + out.r1p + out.r2p;
  return out;
}

BoundsReport optimize_inner_bound(const ChannelInstance& ch,
                                  const OptimizeOptions& opts) {
  if (!(opts.grid_resolution > 0.0 && opts.grid_resolution <= 0.5))
    throw std::invalid_argument("grid resolution must lie in (0, 0.5]");
  if (!(opts.tol_bits > 0.0))
    throw std::invalid_argument("refinement tolerance must be positive");
  const int k = static_cast<int>(std::ceil(1.0 / opts.grid_resolution));

  // Scalar grid phase, row-major so ties keep the lexicographically
  // smallest (beta1, beta2).
  double sb1 = 0.0, sb2 = 0.0;
  double best = -1.0;
  {
    std::vector<double> b1(1), b2(1);
    for (int i = 0; i <= k; ++i) {
      b1[0] = static_cast<double>(i) / k;
      for (int j = 0; j <= k; ++j) {
        b2[0] = static_cast<double>(j) / k;
        const double v = inner_bound_total(ch, b1, b2);
        if (v > best) {
          best = v;
          sb1 = b1[0];
          sb2 = b2[0];
        }
      }
    }
  }

  // Alternating golden-section refinement around the best scalar cell.
  {
    const double step = 1.0 / k;
    std::vector<double> b1{sb1}, b2{sb2};
    for (int round = 0; round < 60; ++round) {
      const double before = best;
      auto [x1, v1] = golden_max(
          [&](double x) {
            b1[0] = x;
            return inner_bound_total(ch, b1, b2);
          },
          std::max(0.0, b1[0] - step), std::min(1.0, b1[0] + step));
      if (v1 > best) {
        best = v1;
        b1[0] = x1;
      } else {
        b1[0] = sb1;
      }
      sb1 = b1[0];
      auto [x2, v2] = golden_max(
          [&](double x) {
            b2[0] = x;
            return inner_bound_total(ch, b1, b2);
          },
          std::max(0.0, b2[0] - step), std::min(1.0, b2[0] + step));
      if (v2 > best) {
        best = v2;
        b2[0] = x2;
      } else {
        b2[0] = sb2;
      }
      sb2 = b2[0];
      if (best - before < opts.tol_bits) break;
    }
  }

  SplitParams best_split = SplitParams::scalar(sb1, sb2);

  if (opts.per_subchannel) {
    const std::size_t m = ch.size();
    std::vector<BetaPoint> starts;
    starts.push_back({std::vector<double>(m, sb1), std::vector<double>(m, sb2), 0.0});
    starts.push_back({std::vector<double>(m, 0.0), std::vector<double>(m, 0.0), 0.0});
    starts.push_back({std::vector<double>(m, 1.0), std::vector<double>(m, 1.0), 0.0});
    // Opposed patterns: the gainful splits on weak channels pair a
    // common-heavy user with a private-only user per sub-channel.
    BetaPoint alt_a{std::vector<double>(m), std::vector<double>(m), 0.0};
    BetaPoint alt_b{std::vector<double>(m), std::vector<double>(m), 0.0};
    for (std::size_t i = 0; i < m; ++i) {
      alt_a.b1[i] = (i % 2 == 0) ? 1.0 : 0.0;
      alt_a.b2[i] = (i % 2 == 0) ? 0.0 : 1.0;
      alt_b.b1[i] = (i % 2 == 0) ? 0.0 : 1.0;
      alt_b.b2[i] = (i % 2 == 0) ? 1.0 : 0.0;
    }
    starts.push_back(std::move(alt_a));
    starts.push_back(std::move(alt_b));

    for (BetaPoint& pt : starts) {
      pt.value = inner_bound_total(ch, pt.b1, pt.b2);
      for (int sweep = 0; sweep < opts.sweeps; ++sweep) {
        const double before = pt.value;
        descend_once(ch, pt, k);
        if (pt.value - before < opts.tol_bits) break;
      }
      if (pt.value > best) {
        best = pt.value;
        best_split = SplitParams::per_subchannel(pt.b1, pt.b2);
      }
    }
  }

  BoundsReport report;
  report.outer_independent = outer_bound_independent(ch);
  report.inner_joint = best;
  report.best_split = best_split;
  report.components = inner_bound_value(ch, best_split);
  report.margin = report.inner_joint - report.outer_independent;
  report.inseparable_certified =
      all_weak(ch) && report.margin >= opts.margin_threshold;
  return report;
}

std::optional<InseparabilityCertificate> inseparability_certificate(
    const ChannelInstance& ch, double margin, const OptimizeOptions& opts) {
  if (!(margin > 0.0))
    throw std::invalid_argument("certification margin must be positive");
  if (!all_weak(ch))
    throw ClassPreconditionError(
        "inseparability_certificate requires |h12| <= |h11| and "
        "|h21| <= |h22| in every sub-channel");
  OptimizeOptions o = opts;
  o.margin_threshold = margin;
  const BoundsReport report = optimize_inner_bound(ch, o);
  if (report.margin < margin) return std::nullopt;
  InseparabilityCertificate cert{ch, report.best_split, report.inner_joint,
                                 report.outer_independent, report.margin,
                                 std::nullopt};
  return cert;
}

bool verify_certificate(const InseparabilityCertificate& cert) {
  const double inner = inner_bound_value(cert.channel, cert.split).total;
  const double outer = outer_bound_independent(cert.channel);
  return std::fabs(inner - cert.inner) <= kCapacityTol &&
         std::fabs(outer - cert.outer) <= kCapacityTol &&
         std::fabs((inner - outer) - cert.margin) <= kCapacityTol;
}

}  // namespace tpgic
