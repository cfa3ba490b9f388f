#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bell/detector.hpp"
#include "bell/optimizer.hpp"
#include "bell/simulate.hpp"

namespace bell::io {

/// Formats a double with 17 significant digits ('.' decimal separator, no
/// locale), enough for a lossless 64-bit round trip.
std::string fmt(double v);

/// Header comment written at the top of every output file: tool version, the
/// full command/config string and the seed.
std::string file_header(const std::string& config_line, std::uint64_t seed);

// ---- counts tables ----
// CSV columns: settingAtom,settingPhoton,outcomeAtom,outcomePhoton,count
// JSON carries the same rows plus n and seed.

void write_counts_csv(std::ostream& os, const CountsTable& t, const std::string& config_line);
void write_counts_json(std::ostream& os, const CountsTable& t, const std::string& config_line);

/// Parses either format (auto-detected).  Throws ParseError on malformed input.
CountsTable read_counts(const std::string& text);

// ---- behaviors ----
// JSON schema: { "settings": [ {"atom":"A","photon":"B","probs":[[..3x3..]]} x4 ],
//               "model": {"etaA":..,"etaB":..,"beta":..} }

void write_behavior_json(std::ostream& os, const Behavior& b, const std::string& config_line);
Behavior read_behavior_json(const std::string& text);

/// Loads a behavior from file text: a behavior JSON directly, or a counts
/// table (CSV or JSON) which is then converted to its frequency estimate.
Behavior read_behavior_any(const std::string& text);

// ---- sweep outputs ----

void write_threshold_csv(std::ostream& os, const ThresholdPoint& p, const SweepConfig& cfg,
                         const std::string& config_line);
void write_threshold_json(std::ostream& os, const ThresholdPoint& p, const SweepConfig& cfg,
                          const std::string& config_line);

/// Curve CSV columns:
///   eta_B,max_beta,margin,cert_theta,cert_angle_A,cert_angle_a,cert_angle_B,cert_angle_b,errors
/// The certificate is written in the family frame (see to_family_frame), so a
/// row fully reproduces its violating configuration.
void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& pts,
                     const std::string& config_line, std::uint64_t seed);
void write_curve_json(std::ostream& os, const std::vector<CurvePoint>& pts,
                      const std::string& config_line, std::uint64_t seed);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace bell::io
