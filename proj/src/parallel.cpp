#include "braidskein/parallel.hpp"

#include <deque>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "walk.hpp"

namespace braidskein {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

SkeinVector resolve_parallel(const BraidWord& w, const ParallelOptions& options) {
  const auto order = detail::basepoint_order(w.strand_count(), std::nullopt);
  SkeinVector out(w.strand_count());

  // Breadth-first split into independent subtrees.
  std::deque<detail::NodeState> pending;
  pending.push_back(detail::root_state(w));
  std::vector<detail::NodeState> tasks;
  while (!pending.empty() && pending.size() + tasks.size() < options.min_tasks) {
    detail::NodeState st = std::move(pending.front());
    pending.pop_front();
    const std::size_t bad = detail::find_first_bad(st, order);
    if (bad == detail::kNoBad) {
      out.add_monomial(detail::cycle_type_of(st.n, st.letters), st.coefficient.sign, st.coefficient.a,
                       st.coefficient.b);
      continue;
    }
    auto [changed, removed] = detail::branch(st, bad);
    pending.push_back(std::move(changed));
    pending.push_back(std::move(removed));
  }
  for (auto& st : pending) tasks.push_back(std::move(st));

  const auto count = static_cast<std::ptrdiff_t>(tasks.size());
  std::vector<SkeinVector> partial(tasks.size(), SkeinVector(w.strand_count()));
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    detail::expand_serial(std::move(tasks[i]), order, partial[i]);
  }
  // Fixed summation order keeps the result independent of scheduling.
  for (const auto& p : partial) out += p;
  return out;
}

std::vector<SkeinVector> resolve_batch(std::span<const BraidWord> words) {
  std::vector<SkeinVector> out(words.size(), SkeinVector(1));
  const auto count = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = resolve(words[i]);
  return out;
}

std::vector<SkeinVector> resolve_batch_serial(std::span<const BraidWord> words) {
  std::vector<SkeinVector> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(resolve(w));
  return out;
}

}  // namespace braidskein
