#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "tonelab/tone_bounds.hpp"

// Deterministic report emission: JSON documents per check, CSV for sweeps.
// Output bytes are a pure function of (config, seed, build).
namespace tonelab::reports {

using json = nlohmann::ordered_json;

// --out flag if non-empty, else $TONELAB_OUT_DIR, else "reports".
std::string resolve_out_dir(const std::string& flag);

struct WriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Creates the directory if needed; throws WriteError on failure.
void write_file(const std::string& dir, const std::string& name,
                const std::string& content);

// Doubles serialized as numbers; infinities and NaN as strings (JSON has no
// literal for them).
json num(double x);

json bound_report_json(const tone_bounds::BoundReport& rep, const json& params);

}  // namespace tonelab::reports
