#ifndef PCDL_PARALLEL_HPP
#define PCDL_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace pcdl {

/// Worker count from PCDL_JOBS, or 1 when unset or unparsable.
int default_jobs();

/// Runs body(0..count-1) on up to `jobs` threads. Indices are handed out in
/// increasing order; the caller merges results by index.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace pcdl

#endif  // PCDL_PARALLEL_HPP
