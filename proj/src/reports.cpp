#include "tonelab/reports.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace tonelab::reports {

std::string resolve_out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("TONELAB_OUT_DIR"); env && *env)
    return env;
  return "reports";
}

void write_file(const std::string& dir, const std::string& name,
                const std::string& content) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw WriteError("write_file: cannot create directory " + dir);
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WriteError("write_file: cannot open " + path.string());
  out << content;
  if (!out) throw WriteError("write_file: short write to " + path.string());
}

json num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json bound_report_json(const tone_bounds::BoundReport& rep, const json& params) {
  json j;
  j["source"] = rep.source;
  j["lower"] = num(rep.lower);
  j["upper"] = num(rep.upper);
  j["lambda1"] = num(rep.lambda1);
  j["margin_lower"] = num(rep.margin_lower);
  j["margin_upper"] = num(rep.margin_upper);
  j["params"] = params;
  j["verdict"] = rep.pass ? "PASS" : "FAIL";
  return j;
}

}  // namespace tonelab::reports
