#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

namespace dppcore {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to decorrelate derived seeds.
std::uint64_t mix64(std::uint64_t x);

/// Seed for one repeat of one (sampler, m) cell. Depends only on its
/// arguments, so results do not depend on scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                          std::uint64_t m, std::uint64_t repeat);

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection (no modulo bias).
std::size_t uniform_index(Rng& rng, std::size_t bound);

double standard_normal(Rng& rng);

/// Thread count from DPPCORE_THREADS, else hardware concurrency (>= 1).
unsigned default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers. Work is
/// handed out by an atomic counter; callers store results by index.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace dppcore
