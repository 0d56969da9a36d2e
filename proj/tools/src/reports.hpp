#pragma once

#include <string>

#include "json.hpp"
#include "projcodes/code_file.hpp"
#include "projcodes/multilevel.hpp"
#include "projcodes/puncturing.hpp"
#include "projcodes/simulator.hpp"

namespace projcodes::cli {

using nlohmann::json;

/// One JSON object per line on stdout.
void emit(const json& record);

json field_json(const FieldPtr& f);
json verify_json(const VerifyReport& r);
json blocks_json(const SubspaceCode& code);
json punctured_json(const PuncturedCode& p);
json decode_json(const SubspaceDecodeResult& r);
json simulation_json(const SimulationReport& r, const ChannelConfig& c);

}  // namespace projcodes::cli
