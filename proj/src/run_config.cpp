#include "lilab/run_config.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "lilab/errors.hpp"

namespace lilab {

const char* to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

int RunConfig::output_digits() const {
  const long b = effective_bits > 0 ? effective_bits : bits;
  return std::max(20, static_cast<int>(std::ceil(static_cast<double>(b) * 0.3)));
}

std::string RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["bits"] = bits;
  j["effective_bits"] = effective_bits;
  j["output_digits"] = output_digits();
  j["zeros"] = zeros_path;
  j["tail_T"] = tail_T;
  j["tail_K"] = tail_K;
  j["window_lo"] = window_lo;
  j["window_hi"] = window_hi;
  j["window_cutoffs"] = window_cutoffs;
  j["format"] = to_string(format);
  j["plot"] = plot;
  j["plot_prefix"] = plot_prefix;
  j["serial"] = serial;
  j["from"] = from;
  j["to"] = to;
  j["step"] = step;
  j["method"] = method;
  j["delta"] = delta;
  j["sigma"] = sigma;
  j["tau_star"] = tau_star;
  j["base"] = base;
  j["prime_sum"] = prime_sum;
  j["stieltjes"] = stieltjes_path;
  return j.dump();
}

RunConfig RunConfig::from_json(const std::string& text) {
  RunConfig c;
  try {
    const auto j = nlohmann::json::parse(text);
    c.command = j.at("command").get<std::string>();
    c.bits = j.at("bits").get<long>();
    c.effective_bits = j.at("effective_bits").get<long>();
    c.zeros_path = j.at("zeros").get<std::string>();
    c.tail_T = j.at("tail_T").get<std::string>();
    c.tail_K = j.at("tail_K").get<int>();
    c.window_lo = j.at("window_lo").get<double>();
    c.window_hi = j.at("window_hi").get<double>();
    c.window_cutoffs = j.at("window_cutoffs").get<int>();
    const auto f = j.at("format").get<std::string>();
    if (f != "csv" && f != "json") throw Error(ErrorCode::parse, "unknown format " + f);
    c.format = f == "csv" ? OutputFormat::csv : OutputFormat::json;
    c.plot = j.at("plot").get<bool>();
    c.plot_prefix = j.at("plot_prefix").get<std::string>();
    c.serial = j.at("serial").get<bool>();
    c.from = j.at("from").get<long>();
    c.to = j.at("to").get<long>();
    c.step = j.at("step").get<long>();
    c.method = j.at("method").get<std::string>();
    c.delta = j.at("delta").get<bool>();
    c.sigma = j.at("sigma").get<std::string>();
    c.tau_star = j.at("tau_star").get<std::string>();
    c.base = j.at("base").get<std::string>();
    c.prime_sum = j.at("prime_sum").get<std::uint64_t>();
    c.stieltjes_path = j.at("stieltjes").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, std::string("run config: ") + e.what());
  }
  return c;
}

}  // namespace lilab
