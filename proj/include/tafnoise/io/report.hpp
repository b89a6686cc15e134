// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tafnoise/alpha.hpp"
#include "tafnoise/alt_models.hpp"
#include "tafnoise/ddh.hpp"
#include "tafnoise/fits.hpp"
#include "tafnoise/stats.hpp"

#include <json.hpp>

#include <string>

namespace tafnoise::io {

/// Reports preserve insertion order so the config echo stays on top.
using Json = nlohmann::ordered_json;

inline constexpr int report_schema_version = 1;

Json to_json(const FitReport& rep);
Json to_json(const AlphaEstimate& est);
Json to_json(const CorrectionReport& rep);
Json to_json(const ModelValue& v);
Json to_json(const TTestResult& r);

/// Wraps the payload in the report envelope (schema version, command name,
/// config echo) and writes it with a trailing newline. The document is
/// composed in full before the file is opened.
void write_report(const std::string& path, const std::string& command,
                  Json config, Json payload);

/// The same envelope as a string (used by tests and for stdout output).
std::string report_document(const std::string& command, Json config,
                            Json payload);

}  // namespace tafnoise::io
