// Serial against OpenMP resolution on a fixed pseudo-random batch.
// Usage: bench_resolve [words] [length] [strands]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "braidskein/parallel.hpp"
#include "braidskein/resolution.hpp"

using namespace braidskein;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int words = argc > 1 ? std::atoi(argv[1]) : 200;
  const int length = argc > 2 ? std::atoi(argv[2]) : 14;
  const int strands = argc > 3 ? std::atoi(argv[3]) : 4;

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> gen(1, strands - 1), sign(0, 1);
  std::vector<BraidWord> batch;
  for (int i = 0; i < words; ++i) {
    std::vector<int> g;
    for (int j = 0; j < length; ++j) g.push_back(sign(rng) ? gen(rng) : -gen(rng));
    batch.push_back(BraidWord::from_generators(strands, g));
  }

  std::vector<SkeinVector> serial, parallel;
  const double ts = seconds([&] { serial = resolve_batch_serial(batch); });
  const double tp = seconds([&] { parallel = resolve_batch(batch); });
  std::vector<SkeinVector> single;
  const double tss = seconds([&] { single.push_back(resolve(batch.front())); });
  const double tsp = seconds([&] { single.push_back(resolve_parallel(batch.front())); });

  std::cout << "threads            " << max_threads() << "\n"
            << "batch " << words << "x" << length << " on " << strands << " strands\n"
            << "  serial           " << ts << " s\n"
            << "  openmp           " << tp << " s\n"
            << "  speedup          " << (tp > 0 ? ts / tp : 0) << "\n"
            << "single word tree\n"
            << "  serial           " << tss << " s\n"
            << "  openmp           " << tsp << " s\n"
            << "outputs agree      " << ((serial == parallel && single[0] == single[1]) ? "yes" : "NO") << "\n";
  return serial == parallel && single[0] == single[1] ? 0 : 1;
}
