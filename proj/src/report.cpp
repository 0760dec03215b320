#include "tpgic/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace tpgic {

namespace {

std::string position_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecFileError(origin + ":" + position_of(text, e.byte) + ": " +
                        e.what());
  }
}

[[noreturn]] void fail(const std::string& origin, const std::string& path,
                       const std::string& msg) {
  throw SpecFileError(origin + ": " + path + ": " + msg);
}

double require_number(const Json& obj, const std::string& origin,
                      const std::string& path, const char* key) {
  if (!obj.contains(key)) fail(origin, path, std::string("missing field '") + key + "'");
  const Json& v = obj.at(key);
  if (!v.is_number()) fail(origin, path + "/" + key, "must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(origin, path + "/" + key, "must be finite");
  return d;
}

void check_schema(const Json& doc, const std::string& origin) {
  if (doc.contains("schema")) {
    const Json& s = doc.at("schema");
    if (!s.is_number_integer() || s.get<int>() != kSchemaVersion)
      fail(origin, "/schema", "unsupported schema version");
  }
}

void reject_unknown_keys(const Json& obj, const std::string& origin,
                         const std::string& path,
                         std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* k : allowed)
      if (item.key() == k) {
        ok = true;
        break;
      }
    if (!ok) fail(origin, path + "/" + item.key(), "unknown field");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecFileError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json opt_bool(const std::optional<bool>& b) {
  if (!b) return nullptr;
  return *b;
}

std::string csv_bool(bool b) { return b ? "1" : "0"; }

std::string csv_opt_bool(const std::optional<bool>& b) {
  return b ? csv_bool(*b) : std::string();
}

std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string family_label(const SeparabilityVerdict& v) {
  if (v.family) return to_string(*v.family);
  return v.verdict == Verdict::Inseparable ? "None" : "Unknown";
}

Json header(const char* kind) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["version"] = kToolVersion;
  doc["kind"] = kind;
  return doc;
}

Json membership_json(const SubchannelMembership& m) {
  Json j;
  j["in_S1"] = opt_bool(m.in_s1);
  j["in_S2"] = opt_bool(m.in_s2);
  j["in_S3"] = opt_bool(m.in_s3);
  j["in_M1"] = opt_bool(m.in_m1);
  j["in_M2"] = opt_bool(m.in_m2);
  j["in_N"] = m.in_noisy;
  j["remark2_unknown"] = m.remark2_unknown;
  j["near_boundary"] = m.near_boundary;
  return j;
}

}  // namespace

double round9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return std::strtod(buf, nullptr);
}

ChannelInstance parse_channel_spec(const std::string& text,
                                   const std::string& origin) {
  const Json doc = parse_json(text, origin);
  if (!doc.is_object()) fail(origin, "/", "top level must be an object");
  check_schema(doc, origin);
  reject_unknown_keys(doc, origin, "", {"schema", "subchannels"});
  if (!doc.contains("subchannels"))
    fail(origin, "/", "missing field 'subchannels'");
  const Json& subs = doc.at("subchannels");
  if (!subs.is_array() || subs.empty())
    fail(origin, "/subchannels", "must be a non-empty array");

  std::vector<Subchannel> out;
  out.reserve(subs.size());
  for (std::size_t m = 0; m < subs.size(); ++m) {
    const std::string path = "/subchannels/" + std::to_string(m);
    const Json& e = subs.at(m);
    if (!e.is_object()) fail(origin, path, "must be an object");
    reject_unknown_keys(e, origin, path, {"h11", "h12", "h21", "h22", "p1", "p2"});
    Subchannel s;
    s.h11 = require_number(e, origin, path, "h11");
    s.h12 = require_number(e, origin, path, "h12");
    s.h21 = require_number(e, origin, path, "h21");
    s.h22 = require_number(e, origin, path, "h22");
    s.p1 = require_number(e, origin, path, "p1");
    s.p2 = require_number(e, origin, path, "p2");
    if (s.h11 == 0.0) fail(origin, path + "/h11", "must be nonzero");
    if (s.h12 == 0.0) fail(origin, path + "/h12", "must be nonzero");
    if (s.h21 == 0.0) fail(origin, path + "/h21", "must be nonzero");
    if (s.h22 == 0.0) fail(origin, path + "/h22", "must be nonzero");
    if (s.p1 < 0.0) fail(origin, path + "/p1", "must be >= 0");
    if (s.p2 < 0.0) fail(origin, path + "/p2", "must be >= 0");
    out.push_back(s);
  }
  return ChannelInstance(std::move(out));
}

ChannelInstance load_channel_spec(const std::string& path) {
  return parse_channel_spec(read_file(path), path);
}

Json channel_spec_json(const ChannelInstance& ch) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  Json subs = Json::array();
  for (const Subchannel& s : ch.subchannels()) {
    Json e;
    e["h11"] = s.h11;
    e["h12"] = s.h12;
    e["h21"] = s.h21;
    e["h22"] = s.h22;
    e["p1"] = s.p1;
    e["p2"] = s.p2;
    subs.push_back(std::move(e));
  }
  doc["subchannels"] = std::move(subs);
  return doc;
}

SweepSpec parse_sweep_spec(const std::string& text, const std::string& origin) {
  const Json doc = parse_json(text, origin);
  if (!doc.is_object()) fail(origin, "/", "top level must be an object");
  check_schema(doc, origin);
  reject_unknown_keys(doc, origin, "",
                      {"schema", "template", "x_ratio", "y_ratio", "copies"});
  if (!doc.contains("template")) fail(origin, "/", "missing field 'template'");
  const Json& tpl = doc.at("template");
  if (!tpl.is_object()) fail(origin, "/template", "must be an object");
  reject_unknown_keys(tpl, origin, "/template", {"h11", "h22", "p1", "p2"});

  SweepSpec spec;
  spec.base.h11 = require_number(tpl, origin, "/template", "h11");
  spec.base.h22 = require_number(tpl, origin, "/template", "h22");
  spec.base.p1 = require_number(tpl, origin, "/template", "p1");
  spec.base.p2 = require_number(tpl, origin, "/template", "p2");
  if (spec.base.h11 == 0.0) fail(origin, "/template/h11", "must be nonzero");
  if (spec.base.h22 == 0.0) fail(origin, "/template/h22", "must be nonzero");
  if (spec.base.p1 < 0.0) fail(origin, "/template/p1", "must be >= 0");
  if (spec.base.p2 < 0.0) fail(origin, "/template/p2", "must be >= 0");

  auto parse_axis = [&](const char* key) -> SweepAxis {
    if (!doc.contains(key)) fail(origin, "/", std::string("missing field '") + key + "'");
    const Json& ax = doc.at(key);
    const std::string path = std::string("/") + key;
    if (!ax.is_object()) fail(origin, path, "must be an object");
    reject_unknown_keys(ax, origin, path, {"min", "max", "step"});
    SweepAxis out;
    out.min = require_number(ax, origin, path, "min");
    out.max = require_number(ax, origin, path, "max");
    out.step = require_number(ax, origin, path, "step");
    if (!(out.min > 0.0)) fail(origin, path + "/min", "must be > 0");
    if (!(out.step > 0.0)) fail(origin, path + "/step", "must be > 0");
    if (out.max < out.min) fail(origin, path + "/max", "must be >= min");
    return out;
  };
  spec.x = parse_axis("x_ratio");
  spec.y = parse_axis("y_ratio");

  spec.copies = 1;
  if (doc.contains("copies")) {
    const Json& c = doc.at("copies");
    if (!c.is_number_integer() || c.get<int>() < 1)
      fail(origin, "/copies", "must be an integer >= 1");
    spec.copies = c.get<int>();
  }
  return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
  return parse_sweep_spec(read_file(path), path);
}

Json rates_json(const ChannelInstance& ch) {
  Json doc = header("rates");
  doc["units"] = "bits/channel use";
  Json rows = Json::array();
  const RateQuantities rq = rate_quantities(ch);
  for (std::size_t m = 0; m < rq.size(); ++m) {
    const SubchannelRates& r = rq[m];
    Json e;
    e["m"] = m;
    e["a"] = round9(r.a);
    e["b"] = round9(r.b);
    e["c"] = round9(r.c);
    e["d"] = round9(r.d);
    e["e"] = round9(r.e);
    e["f"] = round9(r.f);
    e["g"] = round9(r.g);
    e["h"] = round9(r.h);
    e["i"] = round9(r.i);
    e["j"] = round9(r.j);
    rows.push_back(std::move(e));
  }
  doc["subchannels"] = std::move(rows);
  return doc;
}

Json classify_json(const ChannelInstance& ch) {
  const ChannelClass cc = classify(ch);
  Json doc = header("classify");
  doc["aggregate"] = to_string(cc.aggregate);
  Json valid = Json::array();
  for (Aggregate a : cc.valid_aggregates) valid.push_back(to_string(a));
  doc["valid_aggregates"] = std::move(valid);
  Json rows = Json::array();
  for (std::size_t m = 0; m < cc.per_subchannel.size(); ++m) {
    const SubchannelFlags& f = cc.per_subchannel[m];
    Json e;
    e["m"] = m;
    e["strong"] = f.strong;
    e["mixed_a"] = f.mixed_a;
    e["mixed_b"] = f.mixed_b;
    e["weak"] = f.weak;
    e["noisy"] = f.noisy;
    e["boundary_tie"] = f.boundary_tie;
    rows.push_back(std::move(e));
  }
  doc["per_subchannel"] = std::move(rows);
  return doc;
}

Json sumcap_json(Aggregate agg, double joint, double independent) {
  Json doc = header("sumcap");
  doc["class"] = to_string(agg);
  doc["joint"] = round9(joint);
  doc["independent"] = round9(independent);
  doc["gap"] = round9(joint - independent);
  doc["units"] = "bits/channel use";
  return doc;
}

Json region_json(const RegionPolygon& poly) {
  Json doc = header("region");
  Json verts = Json::array();
  for (const auto& v : poly.vertices)
    verts.push_back(Json::array({round9(v[0]), round9(v[1])}));
  doc["vertices"] = std::move(verts);
  doc["units"] = "bits/channel use";
  return doc;
}

Json separability_json(const SeparabilityVerdict& v) {
  Json doc = header("separable");
  doc["verdict"] = to_string(v.verdict);
  doc["family"] = v.family ? Json(to_string(*v.family)) : Json(nullptr);
  doc["gap"] = v.gap_bits ? Json(round9(*v.gap_bits)) : Json(nullptr);
  doc["note"] = v.note;
  Json rows = Json::array();
  for (std::size_t m = 0; m < v.memberships.size(); ++m) {
    Json e;
    e["m"] = m;
    const Json fields = membership_json(v.memberships[m]);
    for (const auto& item : fields.items()) e[item.key()] = item.value();
    rows.push_back(std::move(e));
  }
  doc["memberships"] = std::move(rows);
  return doc;
}

Json split_json(const SplitParams& split) {
  Json j;
  j["mode"] = split.is_scalar() ? "scalar" : "per-subchannel";
  j["beta1"] = split.beta1;
  j["beta2"] = split.beta2;
  return j;
}

Json bounds_report_json(const BoundsReport& report) {
  Json j;
  j["outer_independent"] = round9(report.outer_independent);
  j["inner_joint"] = round9(report.inner_joint);
  j["margin"] = round9(report.margin);
  j["inseparable_certified"] = report.inseparable_certified;
  Json split = split_json(report.best_split);
  for (auto& b : split["beta1"]) b = round9(b.get<double>());
  for (auto& b : split["beta2"]) b = round9(b.get<double>());
  j["best_split"] = std::move(split);
  Json c;
  c["r1c"] = round9(report.components.r1c);
  c["r2c"] = round9(report.components.r2c);
  c["r12c"] = round9(report.components.r12c);
  c["r1p"] = round9(report.components.r1p);
  c["r2p"] = round9(report.components.r2p);
  Json z1 = Json::array(), z2 = Json::array();
  for (double z : report.components.z1_diag) z1.push_back(round9(z));
  for (double z : report.components.z2_diag) z2.push_back(round9(z));
  c["z1_diag"] = std::move(z1);
  c["z2_diag"] = std::move(z2);
  c["total"] = round9(report.components.total);
  j["components"] = std::move(c);
  return j;
}

Json certificate_json(const InseparabilityCertificate& cert) {
  Json doc = header("certificate");
  doc["channel"] = channel_spec_json(cert.channel);
  // Exact split values so re-verification reproduces the stored sides.
  doc["split"] = split_json(cert.split);
  doc["inner"] = cert.inner;
  doc["outer"] = cert.outer;
  doc["margin"] = cert.margin;
  doc["seed"] = cert.seed ? Json(*cert.seed) : Json(nullptr);
  return doc;
}

Json report_document_json(const ChannelInstance& ch, const BoundsReport& report) {
  Json doc = header("report");
  Json tol;
  tol["tie_rel"] = kTieRel;
  tol["capacity_abs_bits"] = kCapacityTol;
  tol["psd_floor"] = kPsdTol;
  doc["tolerances"] = std::move(tol);
  doc["channel"] = channel_spec_json(ch);
  doc["class"] = classify_json(ch);
  doc["rates"] = rates_json(ch)["subchannels"];

  const Aggregate agg = classify(ch).aggregate;
  Json caps;
  caps["tin_sum_rate"] = round9(tin_sum_rate(ch));
  if (agg == Aggregate::Strong) {
    caps["joint"] = round9(sum_capacity_strong_joint(ch));
    caps["independent"] = round9(sum_capacity_strong_independent(ch));
  } else if (agg == Aggregate::MixedA || agg == Aggregate::MixedB) {
    caps["joint"] = round9(sum_capacity_mixed_joint(ch));
    caps["independent"] = round9(sum_capacity_mixed_independent(ch));
  }
  doc["sum_capacities"] = std::move(caps);
  doc["separability"] = separability_json(analyze_separability(ch));
  doc["bounds"] = bounds_report_json(report);
  return doc;
}

Json search_json(const SearchResult& res) {
  Json doc = header("search");
  doc["seed"] = res.seed;
  doc["budget"] = res.budget;
  doc["subchannels"] = res.subchannels;
  doc["margin_threshold"] = res.margin_threshold;
  doc["best_draw"] = res.best_draw;
  doc["best_screen_gap"] = round9(res.best_screen_gap);
  doc["best_gap"] = round9(res.best_gap);
  doc["best_channel"] = channel_spec_json(res.best_channel);
  doc["best_report"] = bounds_report_json(res.best_report);
  doc["certificate"] =
      res.certificate ? certificate_json(*res.certificate) : Json(nullptr);
  return doc;
}

Json sweep_json(const std::vector<SweepRow>& rows) {
  Json doc = header("sweep");
  Json arr = Json::array();
  for (const SweepRow& r : rows) {
    Json e;
    e["x_ratio"] = round9(r.x_ratio);
    e["y_ratio"] = round9(r.y_ratio);
    e["aggregate_class"] = to_string(r.aggregate);
    e["verdict"] = to_string(r.verdict);
    e["family"] = r.family ? Json(to_string(*r.family))
                           : Json(r.verdict == Verdict::Inseparable ? "None"
                                                                    : "Unknown");
    e["membership"] = membership_json(r.membership);
    e["boundary_tie"] = r.boundary_tie;
    arr.push_back(std::move(e));
  }
  doc["rows"] = std::move(arr);
  return doc;
}

Json ratio_series_json(const RatioSeries& series) {
  Json doc = header("asympt");
  Json arr = Json::array();
  for (const RatioPoint& p : series) {
    Json e;
    e["scale"] = p.scale;
    e["joint"] = round9(p.joint_bits);
    e["independent"] = round9(p.independent_bits);
    e["ratio"] = round9(p.ratio);
    arr.push_back(std::move(e));
  }
  doc["points"] = std::move(arr);
  return doc;
}

std::string rates_csv(const ChannelInstance& ch) {
  std::string out = "m,a,b,c,d,e,f,g,h,i,j\n";
  const RateQuantities rq = rate_quantities(ch);
  for (std::size_t m = 0; m < rq.size(); ++m) {
    const SubchannelRates& r = rq[m];
    out += std::to_string(m);
    for (double v : {r.a, r.b, r.c, r.d, r.e, r.f, r.g, r.h, r.i, r.j})
      out += "," + csv_num(v);
    out += "\n";
  }
  return out;
}

std::string classify_csv(const ChannelInstance& ch) {
  const ChannelClass cc = classify(ch);
  std::string out = "m,strong,mixed_a,mixed_b,weak,noisy,boundary_tie,aggregate\n";
  for (std::size_t m = 0; m < cc.per_subchannel.size(); ++m) {
    const SubchannelFlags& f = cc.per_subchannel[m];
    out += std::to_string(m) + "," + csv_bool(f.strong) + "," +
           csv_bool(f.mixed_a) + "," + csv_bool(f.mixed_b) + "," +
           csv_bool(f.weak) + "," + csv_bool(f.noisy) + "," +
           csv_bool(f.boundary_tie) + "," + to_string(cc.aggregate) + "\n";
  }
  return out;
}

std::string sumcap_csv(Aggregate agg, double joint, double independent) {
  std::string out = "class,joint_bits,independent_bits,gap_bits\n";
  out += std::string(to_string(agg)) + "," + csv_num(joint) + "," +
         csv_num(independent) + "," + csv_num(joint - independent) + "\n";
  return out;
}

std::string region_csv(const RegionPolygon& poly) {
  std::string out = "vertex,r1,r2\n";
  for (std::size_t k = 0; k < poly.vertices.size(); ++k)
    out += std::to_string(k) + "," + csv_num(poly.vertices[k][0]) + "," +
           csv_num(poly.vertices[k][1]) + "\n";
  return out;
}

std::string separability_csv(const SeparabilityVerdict& v) {
  std::string out = "verdict,family,gap_bits\n";
  out += std::string(to_string(v.verdict)) + "," + family_label(v) + "," +
         (v.gap_bits ? csv_num(*v.gap_bits) : std::string()) + "\n";
  return out;
}

std::string bounds_csv(const BoundsReport& report) {
  std::string out =
      "outer_independent,inner_joint,margin,inseparable_certified,beta1,beta2\n";
  auto join = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k)
      s += (k ? ";" : "") + csv_num(v[k]);
    return s;
  };
  out += csv_num(report.outer_independent) + "," + csv_num(report.inner_joint) +
         "," + csv_num(report.margin) + "," +
         csv_bool(report.inseparable_certified) + "," +
         join(report.best_split.beta1) + "," + join(report.best_split.beta2) +
         "\n";
  return out;
}

std::string search_csv(const SearchResult& res) {
  std::string out =
      "seed,budget,subchannels,best_draw,best_gap,certified\n";
  out += std::to_string(res.seed) + "," + std::to_string(res.budget) + "," +
         std::to_string(res.subchannels) + "," + std::to_string(res.best_draw) +
         "," + csv_num(res.best_gap) + "," +
         csv_bool(res.certificate.has_value()) + "\n";
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "x_ratio,y_ratio,aggregate_class,family,in_S1,in_S2,in_S3,in_M1,in_M2,"
      "in_N,remark2_unknown,boundary_tie\n";
  for (const SweepRow& r : rows) {
    const SubchannelMembership& m = r.membership;
    std::string family = r.family ? to_string(*r.family)
                         : (r.verdict == Verdict::Inseparable ? "None" : "Unknown");
    out += csv_num(r.x_ratio) + "," + csv_num(r.y_ratio) + "," +
           to_string(r.aggregate) + "," + family + "," + csv_opt_bool(m.in_s1) +
           "," + csv_opt_bool(m.in_s2) + "," + csv_opt_bool(m.in_s3) + "," +
           csv_opt_bool(m.in_m1) + "," + csv_opt_bool(m.in_m2) + "," +
           csv_bool(m.in_noisy) + "," + csv_bool(m.remark2_unknown) + "," +
           csv_bool(r.boundary_tie) + "\n";
  }
  return out;
}

std::string ratio_series_csv(const RatioSeries& series) {
  std::string out = "scale,joint_bits,independent_bits,ratio\n";
  for (const RatioPoint& p : series)
    out += csv_num(p.scale) + "," + csv_num(p.joint_bits) + "," +
           csv_num(p.independent_bits) + "," + csv_num(p.ratio) + "\n";
  return out;
}

InseparabilityCertificate parse_certificate(const std::string& text,
                                            const std::string& origin) {
  const Json doc = parse_json(text, origin);
  if (!doc.is_object()) fail(origin, "/", "top level must be an object");
  check_schema(doc, origin);
  if (!doc.contains("channel")) fail(origin, "/", "missing field 'channel'");
  ChannelInstance ch = parse_channel_spec(doc.at("channel").dump(), origin);
  if (!doc.contains("split")) fail(origin, "/", "missing field 'split'");
  const Json& sp = doc.at("split");
  if (!sp.contains("beta1") || !sp.contains("beta2") ||
      !sp.at("beta1").is_array() || !sp.at("beta2").is_array())
    fail(origin, "/split", "must carry beta1 and beta2 arrays");
  SplitParams split;
  for (const auto& b : sp.at("beta1")) split.beta1.push_back(b.get<double>());
  for (const auto& b : sp.at("beta2")) split.beta2.push_back(b.get<double>());
  InseparabilityCertificate cert{std::move(ch), std::move(split),
                                 require_number(doc, origin, "", "inner"),
                                 require_number(doc, origin, "", "outer"),
                                 require_number(doc, origin, "", "margin"),
                                 std::nullopt};
  if (doc.contains("seed") && !doc.at("seed").is_null())
    cert.seed = doc.at("seed").get<std::uint64_t>();
  return cert;
}

}  // namespace tpgic
