// File formats: channel spec and sweep spec parsing with field-path
// diagnostics, JSON report documents, and the fixed-header CSV tables.
#pragma once

#include <json.hpp>
#include <string>

#include "tpgic/explore.hpp"
#include "tpgic/version.hpp"

namespace tpgic {

using Json = nlohmann::ordered_json;

// Raised for malformed or invalid input files. Messages carry the origin
// plus a line/column position (parse errors) or a JSON field path
// (validation errors).
class SpecFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses {"schema": 1, "subchannels": [{h11, h12, h21, h22, p1, p2}, ...]}.
// `origin` names the source (file path or "<stdin>") in diagnostics.
ChannelInstance parse_channel_spec(const std::string& text,
                                   const std::string& origin);
ChannelInstance load_channel_spec(const std::string& path);

// Lossless echo of a channel (full double precision, round-trips exactly).
Json channel_spec_json(const ChannelInstance& ch);

// Sweep spec file:
// {"schema": 1, "template": {h11, h22, p1, p2}, "x_ratio": {min, max, step},
//  "y_ratio": {min, max, step}, "copies": 1}
SweepSpec parse_sweep_spec(const std::string& text, const std::string& origin);
SweepSpec load_sweep_spec(const std::string& path);

// Computed quantities are serialized with 9 significant digits.
double round9(double v);

Json rates_json(const ChannelInstance& ch);
Json classify_json(const ChannelInstance& ch);
Json sumcap_json(Aggregate agg, double joint, double independent);
Json region_json(const RegionPolygon& poly);
Json separability_json(const SeparabilityVerdict& v);
Json split_json(const SplitParams& split);
Json bounds_report_json(const BoundsReport& report);
Json certificate_json(const InseparabilityCertificate& cert);
Json report_document_json(const ChannelInstance& ch, const BoundsReport& report);
Json search_json(const SearchResult& res);
Json sweep_json(const std::vector<SweepRow>& rows);
Json ratio_series_json(const RatioSeries& series);

// CSV writers; every table has a fixed documented header row.
std::string rates_csv(const ChannelInstance& ch);
std::string classify_csv(const ChannelInstance& ch);
std::string sumcap_csv(Aggregate agg, double joint, double independent);
std::string region_csv(const RegionPolygon& poly);
std::string separability_csv(const SeparabilityVerdict& v);
std::string bounds_csv(const BoundsReport& report);
std::string search_csv(const SearchResult& res);
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string ratio_series_csv(const RatioSeries& series);

// Parses a certificate JSON document back into its typed form.
InseparabilityCertificate parse_certificate(const std::string& text,
                                            const std::string& origin);

}  // namespace tpgic
