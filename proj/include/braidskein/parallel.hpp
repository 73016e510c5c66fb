#pragma once

// OpenMP kernels. Each has a serial reference (resolve, resolve_batch_serial)
// that the tests compare against; results are exact, so parallel and serial
// outputs must agree bit for bit.

#include <span>
#include <vector>

#include "braidskein/braid.hpp"
#include "braidskein/resolution.hpp"
#include "braidskein/skein.hpp"

namespace braidskein {

struct ParallelOptions {
  /// Subtrees are split off breadth-first until at least this many are
  /// pending, then resolved independently.
  std::size_t min_tasks = 64;
};

/// Same result as resolve(w); subtrees are evaluated across threads.
SkeinVector resolve_parallel(const BraidWord& w, const ParallelOptions& options = {});

std::vector<SkeinVector> resolve_batch(std::span<const BraidWord> words);
std::vector<SkeinVector> resolve_batch_serial(std::span<const BraidWord> words);

/// Threads OpenMP will use for a parallel region (1 without OpenMP).
int max_threads();

}  // namespace braidskein
