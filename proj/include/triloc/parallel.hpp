#pragma once

#include <cstdint>

namespace triloc {

/// Worker threads for OpenMP regions: omp_get_max_threads(), capped by the
/// TRILOC_THREADS environment variable when set to a positive integer.
int worker_count();

/// splitmix64 finalizer; used to derive independent RNG streams.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for the stream identified by (seed, salt, index).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t salt, std::uint64_t index) noexcept;

}  // namespace triloc
