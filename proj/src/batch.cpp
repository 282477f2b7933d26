#include "cl3exp/batch.hpp"

#include <algorithm>
#include <exception>

#include "cl3exp/error.hpp"
#include "cl3exp/exp_closed.hpp"

namespace cl3 {
namespace {

Multivector evaluate(const Multivector& x, Engine engine, const SeriesConfig& cfg) {
  return engine == Engine::Closed ? exp_closed(x) : exp_series_scaled(x, cfg);
}

double discrepancy(const Multivector& x, const SeriesConfig& cfg, bool relative) {
  const Multivector closed = exp_closed(x);
  const double d = max_abs_diff(closed, exp_series_scaled(x, cfg));
  return relative ? d / std::max(1.0, max_abs(closed)) : d;
}

void check_sizes(std::size_t in, std::size_t out) {
  if (in != out) throw InvalidArgument("exp_batch: input and output sizes differ");
}

}  // namespace

void exp_batch_serial(std::span<const Multivector> in, std::span<Multivector> out,
                      Engine engine, const SeriesConfig& cfg) {
  check_sizes(in.size(), out.size());
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = evaluate(in[i], engine, cfg);
}

void exp_batch(std::span<const Multivector> in, std::span<Multivector> out, Engine engine,
               const SeriesConfig& cfg) {
  check_sizes(in.size(), out.size());
  const auto n = static_cast<std::ptrdiff_t>(in.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = evaluate(in[i], engine, cfg);
    } catch (...) {
#pragma omp critical(cl3_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

double max_engine_discrepancy_serial(std::span<const Multivector> in, const SeriesConfig& cfg,
                                     bool relative) {
  double worst = 0.0;
  for (const Multivector& x : in) worst = std::max(worst, discrepancy(x, cfg, relative));
  return worst;
}

double max_engine_discrepancy(std::span<const Multivector> in, const SeriesConfig& cfg,
                              bool relative) {
  const auto n = static_cast<std::ptrdiff_t>(in.size());
  double worst = 0.0;
  std::exception_ptr failure;
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      worst = std::max(worst, discrepancy(in[i], cfg, relative));
    } catch (...) {
#pragma omp critical(cl3_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return worst;
}

}  // namespace cl3
