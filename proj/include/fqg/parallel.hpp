#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fqg/report.hpp"

namespace fqg {

/// Worker count: the FQG_THREADS environment variable when set to a positive
/// integer, otherwise the hardware concurrency.
std::size_t worker_count();

/// Calls body(i) for i in [0, n), spread over worker_count() threads in
/// contiguous chunks. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Returns the witness of a failing index, or nullopt when index passes.
using WitnessFn = std::function<std::optional<std::vector<long>>(std::size_t)>;

/// Evaluates probe over [0, n) in parallel and folds the outcome into one
/// Check. The reported witness is that of the smallest failing index, so the
/// result does not depend on the number of workers.
Check sweep(std::string name, std::size_t n, const WitnessFn& probe);

}  // namespace fqg
