// Benchmark: OpenMP-parallel kernels against their serial reference
// implementations, with a verification that both produce identical results.

#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "veldkamp/reference.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int points = 22;        // enumeration sweep size (2^points subsets)
  int veldkamp_n = 10;    // diagram for the pair-closure benchmark
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--points" && i + 1 < argc) points = std::stoi(argv[++i]);
    else if (arg == "--veldkamp-n" && i + 1 < argc) veldkamp_n = std::stoi(argv[++i]);
    else {
      std::cerr << "usage: " << argv[0] << " [--points P] [--veldkamp-n N]\n";
      return 1;
    }
  }
  if (points < 5 || points > 30 || veldkamp_n < 4 || veldkamp_n > 16) {
    std::cerr << "points must be in 5..30 and veldkamp-n in 4..16\n";
    return 1;
  }

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; both runs are serial\n";
#endif

  {
    auto structure = veld::build_extended_dynkin_d(points - 1);
    std::cout << "hyperplane enumeration over " << points << " points (2^"
              << points << " subsets)\n";

    auto t0 = Clock::now();
    auto serial = veld::ref::enumerate_hyperplanes_serial(structure);
    const double serial_s = seconds_since(t0);

    t0 = Clock::now();
    auto parallel = veld::enumerate_hyperplanes(structure);
    const double parallel_s = seconds_since(t0);

    if (parallel.sets() != serial) {
      std::cerr << "MISMATCH between serial and parallel enumeration\n";
      return 1;
    }
    std::cout << "  hyperplanes: " << serial.size() << "\n"
              << "  serial:   " << serial_s << " s\n"
              << "  parallel: " << parallel_s << " s  (speedup "
              << serial_s / parallel_s << "x)\n";
  }

  {
    auto catalog =
        veld::enumerate_hyperplanes(veld::build_extended_dynkin_d(veldkamp_n));
    std::cout << "veldkamp lines over " << catalog.size() << " hyperplanes\n";

    auto t0 = Clock::now();
    auto serial = veld::ref::veldkamp_lines_serial(catalog);
    const double serial_s = seconds_since(t0);

    t0 = Clock::now();
    auto space = veld::build_veldkamp_space(catalog);
    const double parallel_s = seconds_since(t0);

    if (space.lines3.size() != serial.size()) {
      std::cerr << "MISMATCH between serial and parallel line counts\n";
      return 1;
    }
    std::cout << "  lines: " << serial.size() << "\n"
              << "  serial triple scan: " << serial_s << " s\n"
              << "  parallel pair closure: " << parallel_s << " s  (speedup "
              << serial_s / parallel_s << "x)\n";
  }
  return 0;
}
