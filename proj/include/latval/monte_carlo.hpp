#pragma once

#include "latval/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

// Chunked Monte Carlo driver. Every chunk of kChunk trials owns an RNG seeded
// from (seed, chunk index), and per-chunk integer counts are summed, so the
// result depends only on (seed, samples), never on the thread count.
namespace latval::mc {

inline constexpr std::int64_t kChunk = 4096;
inline constexpr int kMaxResample = 1000;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
  return splitmix64(splitmix64(splitmix64(master) ^ a) ^ (b * 0xd1342543de82ef95ULL));
}

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

using Rng = std::mt19937_64;

struct Counts {
  std::vector<std::int64_t> hits;
  std::int64_t samples = 0;
  std::int64_t resampled = 0;
};

/// Runs `samples` accepted trials. `trial(rng)` returns a bucket in
/// [0, buckets) or -1 to request a resample (boundary event). Each thread
/// works on its own copy of `trial`, so it may carry scratch buffers.
template <class Trial>
Counts run(std::int64_t samples, std::uint64_t seed, int threads, int buckets, const Trial& trial) {
  const std::int64_t nchunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::vector<std::int64_t>> per_chunk(nchunks, std::vector<std::int64_t>(buckets, 0));
  std::vector<std::int64_t> resampled(nchunks, 0);
  std::vector<std::exception_ptr> errors(nchunks);

  auto work = [&](int t, int nt) {
    Trial local = trial;
    for (std::int64_t c = t; c < nchunks; c += nt) {
      try {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(c), 0x5eed));
        const std::int64_t n = std::min(kChunk, samples - c * kChunk);
        for (std::int64_t i = 0; i < n; ++i) {
          int b = -1;
          for (int attempt = 0; attempt < kMaxResample && b < 0; ++attempt) {
            b = local(rng);
            if (b < 0) ++resampled[c];
          }
          if (b < 0) throw Error("Monte Carlo trial kept hitting boundary events");
          ++per_chunk[c][b];
        }
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };

  const int nt = std::max(1, std::min<int>(resolve_threads(threads), static_cast<int>(nchunks)));
  if (nt <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(work, t, nt);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  Counts out;
  out.hits.assign(buckets, 0);
  out.samples = samples;
  for (std::int64_t c = 0; c < nchunks; ++c) {
    for (int b = 0; b < buckets; ++b) out.hits[b] += per_chunk[c][b];
    out.resampled += resampled[c];
  }
  return out;
}

}  // namespace latval::mc
