// Compares the OpenMP enumeration kernel against the serial reference
// route through the public decision operations.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "sfs/decide.hpp"

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
  long long max = argc > 1 ? std::atoll(argv[1]) : 40;
  std::printf("%10s %10s %12s %12s %9s\n", "max_alpha", "examples", "kernel[s]", "reference[s]",
              "speedup");
  for (long long n = 10; n <= max; n += 10) {
    auto t0 = std::chrono::steady_clock::now();
    auto kernel = sfs::enumerate_turnover_gap_examples(n);
    auto t1 = std::chrono::steady_clock::now();
    auto reference = sfs::enumerate_turnover_gap_examples_reference(n);
    auto t2 = std::chrono::steady_clock::now();
    if (kernel != reference) {
      std::fprintf(stderr, "mismatch at max_alpha=%lld: kernel %zu vs reference %zu\n", n,
                   kernel.size(), reference.size());
      return 1;
    }
    double tk = seconds(t0, t1), tr = seconds(t1, t2);
    std::printf("%10lld %10zu %12.4f %12.4f %8.2fx\n", n, kernel.size(), tk, tr,
                tk > 0 ? tr / tk : 0.0);
  }
  return 0;
}
