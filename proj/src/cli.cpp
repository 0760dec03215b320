#include "tpgic/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "tpgic/report.hpp"

namespace tpgic {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string num6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void emit(const std::string& text, const std::string& output_path,
          std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) throw SpecFileError(output_path + ": cannot open for writing");
  f << text;
}

std::string classification_text(const ChannelInstance& ch) {
  const ChannelClass cc = classify(ch);
  std::string s = "aggregate: ";
  s += to_string(cc.aggregate);
  s += "\nvalid aggregates:";
  for (Aggregate a : cc.valid_aggregates) s += std::string(" ") + to_string(a);
  if (cc.valid_aggregates.empty()) s += " none";
  s += "\n";
  for (std::size_t m = 0; m < cc.per_subchannel.size(); ++m) {
    const SubchannelFlags& f = cc.per_subchannel[m];
    s += "m=" + std::to_string(m) + ":";
    if (f.strong) s += " strong";
    if (f.mixed_a) s += " mixed_a";
    if (f.mixed_b) s += " mixed_b";
    if (f.weak) s += " weak";
    if (f.noisy) s += " noisy";
    if (f.boundary_tie) s += " [boundary-tie]";
    s += "\n";
  }
  return s;
}

std::string rates_text(const ChannelInstance& ch) {
  const RateQuantities rq = rate_quantities(ch);
  std::string s = "rate quantities (bits/channel use)\n";
  for (std::size_t m = 0; m < rq.size(); ++m) {
    const SubchannelRates& r = rq[m];
    s += "m=" + std::to_string(m) + ": a=" + num(r.a) + " b=" + num(r.b) +
         " c=" + num(r.c) + " d=" + num(r.d) + " e=" + num(r.e) +
         " f=" + num(r.f) + " g=" + num(r.g) + " h=" + num(r.h) +
         " i=" + num(r.i) + " j=" + num(r.j) + "\n";
  }
  return s;
}

std::string sumcap_text(Aggregate agg, double joint, double independent) {
  std::string s = "class: ";
  s += to_string(agg);
  s += "\njoint: " + num(joint) + " bits/channel use\n";
  s += "independent: " + num(independent) + " bits/channel use\n";
  s += "gap: " + num(joint - independent) + " bits/channel use\n";
  return s;
}

std::string region_text(const RegionPolygon& poly) {
  std::string s = "capacity region vertices (R1, R2) in bits/channel use\n";
  for (std::size_t k = 0; k < poly.vertices.size(); ++k)
    s += "vertex " + std::to_string(k) + ": (" + num(poly.vertices[k][0]) +
         ", " + num(poly.vertices[k][1]) + ")\n";
  return s;
}

std::string separable_text(const SeparabilityVerdict& v) {
  std::string s(to_string(v.verdict));
  if (v.family) s += std::string(" (family ") + to_string(*v.family) + ")";
  if (v.gap_bits) s += ", gap " + num6(*v.gap_bits);
  s += "\n";
  if (!v.note.empty()) s += v.note + "\n";
  return s;
}

std::string split_text(const SplitParams& split) {
  auto join = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + num(v[k]);
    return s;
  };
  return "beta1=" + join(split.beta1) + " beta2=" + join(split.beta2);
}

std::string bounds_text(const ChannelInstance& ch, const BoundsReport& r) {
  std::string s = "class: ";
  s += to_string(classify(ch).aggregate);
  s += "\nouter bound (independent coding): " + num(r.outer_independent) +
       " bits/channel use\n";
  s += "inner bound (superposition, optimized): " + num(r.inner_joint) +
       " bits/channel use\n";
  s += "margin (inner - outer): " + num(r.margin) + " bits/channel use\n";
  s += "best split: " + split_text(r.best_split) + "\n";
  s += std::string("inseparable certified: ") +
       (r.inseparable_certified ? "yes" : "no") + "\n";
  return s;
}

std::string search_text(const SearchResult& res) {
  std::string s = "seed: " + std::to_string(res.seed) +
                  " budget: " + std::to_string(res.budget) +
                  " subchannels: " + std::to_string(res.subchannels) + "\n";
  s += "best draw: " + std::to_string(res.best_draw) +
       " gap: " + num(res.best_gap) + " bits\n";
  if (res.certificate) {
    s += "certificate: margin " + num(res.certificate->margin) +
         " >= " + num(res.margin_threshold) + " bits\n";
  } else {
    s += "certificate: none (best gap " + num(res.best_gap) + " < " +
         num(res.margin_threshold) + " bits)\n";
  }
  s += "best channel: " + channel_spec_json(res.best_channel).dump() + "\n";
  return s;
}

std::string ratio_text(const RatioSeries& series) {
  std::string s = "scale  joint  independent  ratio\n";
  for (const RatioPoint& p : series)
    s += num(p.scale) + "  " + num(p.joint_bits) + "  " +
         num(p.independent_bits) + "  " + num(p.ratio) + "\n";
  return s;
}

std::vector<double> parse_scales(const std::string& text) {
  std::vector<double> scales;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in --scales");
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("--scales entry '" + item + "' is not a number");
    }
    if (pos != item.size())
      throw std::invalid_argument("--scales entry '" + item + "' is not a number");
    scales.push_back(v);
  }
  if (scales.empty()) throw std::invalid_argument("--scales must be non-empty");
  return scales;
}

struct Options {
  std::string input;
  std::string output;
  std::string format = "text";
  double grid = 0.01;
  double tol = 1e-6;
  double margin = 1e-3;
  bool per_subchannel_beta = false;
  std::uint64_t seed = 1;
  std::uint64_t budget = 100000;
  std::size_t subchannels = 2;
  std::string scales = "0.1,0.01,0.001,0.0001,0.00001";
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"analysis toolkit for two-sided parallel Gaussian interference channels"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("--input", o.input, "channel spec JSON file")->required();
    cmd->add_option("--output", o.output, "write the report to this path");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  CLI::App* rates = app.add_subcommand("rates", "per-subchannel rate quantities");
  add_io(rates, true);
  CLI::App* cls = app.add_subcommand("classify", "interference classification");
  add_io(cls, true);
  CLI::App* sumcap =
      app.add_subcommand("sumcap", "joint and independent sum capacities");
  add_io(sumcap, true);
  CLI::App* region =
      app.add_subcommand("region", "strong-channel capacity region polygon");
  add_io(region, true);
  CLI::App* separable =
      app.add_subcommand("separable", "separability verdict and memberships");
  add_io(separable, true);
  CLI::App* bounds =
      app.add_subcommand("bounds", "outer bound and optimized inner bound");
  add_io(bounds, true);
  bounds->add_option("--grid", o.grid, "beta grid resolution (0, 0.5]");
  bounds->add_option("--tol", o.tol, "refinement tolerance in bits");
  bounds->add_option("--margin", o.margin, "certification margin in bits");
  bounds->add_flag("--per-subchannel-beta", o.per_subchannel_beta,
                   "optimize a separate split per sub-channel");
  CLI::App* search =
      app.add_subcommand("search", "randomized search for inseparable weak channels");
  add_io(search, false);
  search->add_option("--seed", o.seed, "random seed");
  search->add_option("--budget", o.budget, "number of random draws")
      ->check(CLI::PositiveNumber);
  search->add_option("--subchannels", o.subchannels, "sub-channels per draw")
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  search->add_option("--margin", o.margin, "certification margin in bits");
  CLI::App* sweep =
      app.add_subcommand("sweep", "classify a grid over the cross-gain ratios");
  sweep->add_option("--input", o.input, "sweep spec JSON file")->required();
  sweep->add_option("--output", o.output, "write the table to this path");
  sweep->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  CLI::App* asympt =
      app.add_subcommand("asympt", "joint/independent ratio across power scales");
  add_io(asympt, true);
  asympt->add_option("--scales", o.scales,
                     "comma-separated decreasing power scales");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInvalidInput;
  }

  std::optional<ChannelInstance> channel;
  try {
    if (rates->parsed()) {
      channel = load_channel_spec(o.input);
      if (o.format == "json")
        emit(rates_json(*channel).dump(2) + "\n", o.output, out);
      else if (o.format == "csv")
        emit(rates_csv(*channel), o.output, out);
      else
        emit(rates_text(*channel), o.output, out);
    } else if (cls->parsed()) {
      channel = load_channel_spec(o.input);
      if (o.format == "json")
        emit(classify_json(*channel).dump(2) + "\n", o.output, out);
      else if (o.format == "csv")
        emit(classify_csv(*channel), o.output, out);
      else
        emit(classification_text(*channel), o.output, out);
    } else if (sumcap->parsed()) {
      channel = load_channel_spec(o.input);
      const Aggregate agg = classify(*channel).aggregate;
      double joint = 0.0, independent = 0.0;
      if (agg == Aggregate::Strong) {
        joint = sum_capacity_strong_joint(*channel);
        independent = sum_capacity_strong_independent(*channel);
      } else if (agg == Aggregate::MixedA || agg == Aggregate::MixedB) {
        joint = sum_capacity_mixed_joint(*channel);
        independent = sum_capacity_mixed_independent(*channel);
      } else {
        throw ClassPreconditionError(
            std::string("sumcap requires a Strong or Mixed channel, got ") +
            to_string(agg));
      }
      if (o.format == "json")
        emit(sumcap_json(agg, joint, independent).dump(2) + "\n",
             o.output, out);
      else if (o.format == "csv")
        emit(sumcap_csv(agg, joint, independent), o.output, out);
      else
        emit(sumcap_text(agg, joint, independent), o.output, out);
    } else if (region->parsed()) {
      channel = load_channel_spec(o.input);
      const RegionPolygon poly = strong_region_polygon(*channel);
      if (o.format == "json")
        emit(region_json(poly).dump(2) + "\n", o.output, out);
      else if (o.format == "csv")
        emit(region_csv(poly), o.output, out);
      else
        emit(region_text(poly), o.output, out);
    } else if (separable->parsed()) {
      channel = load_channel_spec(o.input);
      const SeparabilityVerdict v = analyze_separability(*channel);
      if (o.format == "json")
        emit(separability_json(v).dump(2) + "\n", o.output, out);
      else if (o.format == "csv")
        emit(separability_csv(v), o.output, out);
      else
        emit(separable_text(v), o.output, out);
    } else if (bounds->parsed()) {
      channel = load_channel_spec(o.input);
      OptimizeOptions opts;
      opts.grid_resolution = o.grid;
      opts.tol_bits = o.tol;
      opts.per_subchannel = o.per_subchannel_beta;
      opts.margin_threshold = o.margin;
      const BoundsReport report = optimize_inner_bound(*channel, opts);
      if (o.format == "json")
        emit(report_document_json(*channel, report).dump(2) + "\n", o.output, out);
      else if (o.format == "csv")
        emit(bounds_csv(report), o.output, out);
      else
        emit(bounds_text(*channel, report), o.output, out);
    } else if (search->parsed()) {
      SearchOptions opts;
      opts.margin = o.margin;
      const SearchResult res =
          search_inseparable(o.seed, o.budget, o.subchannels, opts);
      if (o.format == "json")
        emit(search_json(res).dump(2) + "\n", o.output, out);
      else if (o.format == "csv")
        emit(search_csv(res), o.output, out);
      else
        emit(search_text(res), o.output, out);
    } else if (sweep->parsed()) {
      const SweepSpec spec = load_sweep_spec(o.input);
      const std::vector<SweepRow> rows = sweep_plane(spec);
      if (o.format == "json")
        emit(sweep_json(rows).dump(2) + "\n", o.output, out);
      else
        emit(sweep_csv(rows), o.output, out);
    } else if (asympt->parsed()) {
      channel = load_channel_spec(o.input);
      const RatioSeries series =
          asymptotic_ratio(*channel, parse_scales(o.scales));
      if (o.format == "json")
        emit(ratio_series_json(series).dump(2) + "\n", o.output, out);
      else if (o.format == "csv")
        emit(ratio_series_csv(series), o.output, out);
      else
        emit(ratio_text(series), o.output, out);
    }
  } catch (const ClassPreconditionError& e) {
    err << "error: " << e.what() << "\n";
    if (channel) err << classification_text(*channel);
    return kExitWrongClass;
  } catch (const SpecFileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}

}  // namespace tpgic
