#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <random>
#include <vector>

namespace arrtool {

enum class ExecutionMode { serial, parallel };

/// Independent per-trial seed (splitmix64 of seed and trial index), so
/// results do not depend on scheduling.
inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Runs fn(trial, rng) for trial = 0..n-1. The serial path is the reference;
/// the parallel path must produce the same vector.
template <class Result, class Fn>
std::vector<Result> run_trials(std::size_t n, std::uint64_t seed, ExecutionMode mode, Fn fn) {
  std::vector<Result> out(n);
  if (mode == ExecutionMode::serial) {
    for (std::size_t i = 0; i < n; ++i) {
      std::mt19937_64 rng(trial_seed(seed, i));
      out[i] = fn(i, rng);
    }
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    const auto t = static_cast<std::size_t>(i);
    try {
      std::mt19937_64 rng(trial_seed(seed, t));
      out[t] = fn(t, rng);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace arrtool
