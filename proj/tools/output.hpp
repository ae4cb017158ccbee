#pragma once

// Tables for li_lab: CSV or JSON on a stream, optional gnuplot data + script.

#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lilab/bigfloat.hpp"
#include "lilab/run_config.hpp"

namespace li_lab {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> summary;
  std::vector<std::string> plot_columns;  // plotted against the first column
};

inline std::string fmt(const lilab::BigFloat& v, int digits) {
  if (v.is_zero()) return "0";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

inline std::string fmt_short(const lilab::BigFloat& v) { return fmt(v, 8); }

inline void emit(const Table& t, const lilab::RunConfig& cfg, std::ostream& out) {
  if (cfg.format == lilab::OutputFormat::csv) {
    out << "# config: " << cfg.to_json() << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << "\n";
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
      out << "\n";
    }
    for (const auto& [k, v] : t.summary) out << "# " << k << ": " << v << "\n";
    return;
  }
  nlohmann::ordered_json j;
  j["config"] = nlohmann::ordered_json::parse(cfg.to_json());
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json o;
    for (std::size_t i = 0; i < r.size(); ++i) o[t.columns[i]] = r[i];
    j["rows"].push_back(std::move(o));
  }
  nlohmann::ordered_json s = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.summary) s[k] = v;
  j["summary"] = std::move(s);
  out << j.dump(1) << "\n";
}

// <prefix>.dat (whitespace separated) and <prefix>.gp referencing it.
inline void write_plot(const Table& t, const std::string& prefix, const std::string& title) {
  std::vector<std::size_t> idx;
  for (const auto& c : t.plot_columns)
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      if (t.columns[i] == c) idx.push_back(i);
  {
    std::ofstream dat(prefix + ".dat");
    dat << "# " << t.columns[0];
    for (auto i : idx) dat << " " << t.columns[i];
    dat << "\n";
    for (const auto& r : t.rows) {
      dat << r[0];
      for (auto i : idx) dat << " " << (r[i].empty() || r[i] == "n/a" ? "NaN" : r[i]);
      dat << "\n";
    }
  }
  std::ofstream gp(prefix + ".gp");
  gp << "set title '" << title << "'\n";
  gp << "set xlabel '" << t.columns[0] << "'\n";
  gp << "set key left top\n";
  gp << "plot ";
  for (std::size_t k = 0; k < idx.size(); ++k)
    gp << (k ? ", \\\n     " : "") << "'" << prefix << ".dat' using 1:" << k + 2 << " with lines title '"
       << t.columns[idx[k]] << "'";
  gp << "\n";
}

}  // namespace li_lab
