// gen_zeros: writes a zero-ordinate table and its JSON metadata.
//
//   gen_zeros --count 100000 --refine 1000 --refined-digits 20 --digits 11 --out zeros_100k.txt
//
// The first `refine` ordinates are polished with the MPFR Z(t); the rest are
// Riemann-Siegel values in long double.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lilab/errors.hpp"
#include "lilab/zero_finder.hpp"
#include "lilab/zeros.hpp"

using namespace lilab;

namespace {

std::string fixed(const BigFloat& x, int digits) {
  const int n = mpfr_snprintf(nullptr, 0, "%.*Rf", digits, x.get());
  std::string buf(static_cast<std::size_t>(n) + 1, '\0');
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", digits, x.get());
  buf.resize(static_cast<std::size_t>(n));
  return buf;
}

std::string fixed(long double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lf", digits, x);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate a table of zeta zero ordinates"};
  std::size_t count = 100;
  std::size_t refine = 100;
  int refined_digits = 30;
  int digits = 11;
  std::string out_path;
  bool serial = false;
  bool reuse = false;
  app.add_option("--count", count, "number of ordinates")->check(CLI::PositiveNumber);
  app.add_option("--refine", refine, "leading ordinates refined with the MPFR Z(t)");
  app.add_option("--refined-digits", refined_digits, "fractional digits of refined ordinates")->check(CLI::Range(5, 200));
  app.add_option("--digits", digits, "fractional digits of Riemann-Siegel ordinates")->check(CLI::Range(1, 14));
  app.add_option("--out", out_path, "output file")->required();
  app.add_flag("--serial", serial, "disable OpenMP");
  app.add_flag("--reuse", reuse, "keep an existing output file that already holds `count` valid ordinates");
  CLI11_PARSE(app, argc, argv);
  refine = std::min(refine, count);

  try {
    if (reuse && std::filesystem::exists(out_path)) {
      try {
        if (load_zeros(out_path).size() >= count) {
          std::cerr << "reusing " << out_path << "\n";
          return 0;
        }
      } catch (const Error&) {
      }
    }
    const auto t0 = std::chrono::steady_clock::now();
    const Parallelism par = serial ? Parallelism::serial : Parallelism::openmp;
    const std::vector<long double> approx = rs_zeros(count, par);

    PrecisionContext ctx;
    ctx.bits = static_cast<int>(std::ceil(refined_digits * 3.3219281)) + 24;
    std::vector<std::string> lines(count);
    const long nr = static_cast<long>(refine);
#pragma omp parallel for schedule(dynamic, 4) if (!serial)
    for (long k = 0; k < nr; ++k) {
      const long double t = approx[static_cast<std::size_t>(k)];
      const long double radius = std::min(1e-4L, 0.05L / std::log(t));
      lines[static_cast<std::size_t>(k)] = fixed(refine_zero(t, radius, ctx), refined_digits);
    }
    for (std::size_t k = refine; k < count; ++k) lines[k] = fixed(approx[k], digits);

    std::ostringstream text;
    text << "# zeta zero ordinates 1.." << count << "; first " << refine << " refined with MPFR Z(t) to "
         << refined_digits << " digits, rest by Riemann-Siegel\n";
    for (const auto& l : lines) text << l << "\n";

    const std::string origin = "gen_zeros (Riemann-Siegel, MPFR refinement)";
    std::istringstream check(text.str());
    const ZeroTable table = parse_zeros(check, origin);
    const auto parent = std::filesystem::path(out_path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(out_path, std::ios::binary);
    std::ofstream meta(out_path + ".json");
    out << text.str();
    meta << table.metadata_json() << "\n";
    if (!out.flush() || !meta.flush()) {
      std::cerr << "gen_zeros: cannot write " << out_path << "\n";
      return 1;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "wrote " << table.size() << " ordinates to " << out_path << ", T = " << table.height().to_string(15)
              << " (" << secs << " s)\n";
  } catch (const Error& e) {
    std::cerr << "gen_zeros: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
