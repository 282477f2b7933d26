#pragma once

#include <span>

#include "cl3exp/exp_series.hpp"
#include "cl3exp/multivector.hpp"

namespace cl3 {

enum class Engine { Closed, Series };

// Batch kernels. The *_serial variants are the reference implementations
// the OpenMP versions are tested and benchmarked against; both produce
// identical results element by element. The first exception raised by any
// element is rethrown after the loop.

void exp_batch(std::span<const Multivector> in, std::span<Multivector> out,
               Engine engine, const SeriesConfig& cfg = {});
void exp_batch_serial(std::span<const Multivector> in, std::span<Multivector> out,
                      Engine engine, const SeriesConfig& cfg = {});

/// max over the batch of max_abs(exp_closed(x) - exp_series_scaled(x)),
/// optionally divided by max(1, max_abs(exp_closed(x))).
double max_engine_discrepancy(std::span<const Multivector> in, const SeriesConfig& cfg = {},
                              bool relative = false);
double max_engine_discrepancy_serial(std::span<const Multivector> in,
                                     const SeriesConfig& cfg = {}, bool relative = false);

}  // namespace cl3
