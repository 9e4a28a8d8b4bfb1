#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cfp/simulator.hpp"
#include "cfp/utp.hpp"

namespace cfp {

/// Configuration file schema: { "n", "epsilon", "points": [{"x","y"}...],
/// optional "exact": { "center": {"x","y"},
///                     "robots": [{"turns_num","turns_den","radius"}...] } }.
/// The exact block, when present, is authoritative; points are rederived.
nlohmann::ordered_json config_to_json(const Configuration& config);
Configuration config_from_json(const nlohmann::ordered_json& j);

void save_config(const Configuration& config, const std::string& path);
Configuration load_config(const std::string& path);

/// Trace files are JSON lines: a header line with format and version, one
/// step record per line, and a final outcome line.
void write_trace(const Trace& trace, std::ostream& out);
void save_trace(const Trace& trace, const std::string& path);
Trace load_trace(const std::string& path);

/// Certificates reuse the trace schema with a per-step verdict field.
void write_certificate(const Certificate& cert, std::ostream& out);
void save_certificate(const Certificate& cert, const std::string& path);

}  // namespace cfp
