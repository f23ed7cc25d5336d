#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lshmm/hap_cache.hpp"
#include "lshmm/params.hpp"
#include "lshmm/tables.hpp"

namespace lshmm {

// Execution configuration for one propagation call. Threads split recipient
// columns into contiguous ranges; each column's arithmetic is a fixed serial
// sequence, so results are bit-identical for any thread count or pinning.
struct KernelConfig {
  // 0: use LS_ENGINE_THREADS if set, else hardware concurrency.
  int n_threads = 0;
  // Non-empty: one thread per listed core id, pinned best-effort (ignored
  // with a warning on platforms without affinity support). Entries must be
  // unique and within machine range. Overrides n_threads.
  std::vector<int> cores;
  // 0: widest instruction-set specialization supported by this build and
  // CPU; otherwise one of {1, 2, 4, 8} doubles. All widths compute identical
  // results; the accumulation order is fixed independently of the width.
  int lane_width = 0;
  // Inner-loop unroll depth, one of {1, 4, 8}.
  int unroll = 4;
};

struct KernelId {
  MuKind mu;
  PiKind pi;
  int lane_width;
  int unroll;

  std::string name() const;
};

// Picks one of the four specialized code paths. Uniform-pi kernels never
// touch an N x N matrix and scalar-mu kernels never index a mu array.
KernelId select_kernel(MuKind mu, PiKind pi, const KernelConfig& cfg = {});

// Widest lane specialization usable on this machine with this build.
int detected_lane_width();
std::vector<int> compiled_lane_widths();

// Resolved thread count for a config (env var / hardware detection applied).
int resolve_thread_count(const KernelConfig& cfg);

// Advances the forward recursion in place to `target` (or by a single
// variant when omitted; a fresh table initializes to variant 0). Requires
// pars to match the table's recorded parameter hash. Propagating to t <=
// current variant is an error; reset the table to rewind. Each column is
// advanced all the way to the target before the next column starts.
void forward(ForwardTable& fwd, const HaplotypeCache& cache, const Parameters& pars,
             std::optional<std::int64_t> target = std::nullopt,
             const KernelConfig& cfg = {});

// Mirror image: a fresh table initializes to variant L-1 with beta = 1, and
// the current variant only ever decreases.
void backward(BackwardTable& bck, const HaplotypeCache& cache, const Parameters& pars,
              std::optional<std::int64_t> target = std::nullopt,
              const KernelConfig& cfg = {});

namespace detail {
// Splits [0, width) into contiguous chunks and runs `work(begin, end)` on
// the configured threads (used by propagation and decoding).
void run_columns(std::uint32_t width, const KernelConfig& cfg,
                 const std::function<void(std::uint32_t, std::uint32_t)>& work);
}  // namespace detail

}  // namespace lshmm
