#pragma once

// Off-axis sandbox: a base zero set plus one injected tau*, compared with the
// base alone and with the on-axis twin of tau*.

#include <optional>
#include <vector>

#include "lilab/asymptotics.hpp"
#include "lilab/li.hpp"

namespace lilab {

struct SandboxRun {
  BigComplex tau;                     // normalised: Re >= 0, Im > 0
  std::size_t pairs = 0;
  std::vector<BigFloat> lambda;       // index n - 1
  std::vector<BigFloat> excess;       // lambda - lambda(base); lambda if the base is empty
  std::vector<std::optional<BigFloat>> offaxis;  // lambda - lambda(twin table)
  std::optional<long> first_negative;
  std::optional<long> onset;          // first n with |offaxis| > 1
  RhFalsePrediction theory;           // at n = 0: rates and onsets only
  long fit_from = 0;
  std::optional<GrowthFit> fit;       // exponential fit of the excess over its top quarter
};

// lambda_1 .. lambda_{n_max} by direct zero sums (no tail).
SandboxRun run_sandbox(const std::vector<BigComplex>& base, const BigComplex& tau_star, long n_max,
                       const PrecisionContext& ctx, Parallelism par = Parallelism::openmp);

std::vector<BigComplex> ordinates_of(const ZeroTable& t);

}  // namespace lilab
