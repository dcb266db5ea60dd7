#include <chrono>
#include <cstdlib>
#include <iostream>

#include "rqns/numerical_semigroup.hpp"

// Compares the OpenMP subset search against the serial reference and
// reports per-row timings.  Usage: bench_enumerate [max_frobenius]

int main(int argc, char** argv) {
  int64_t max_f = argc > 1 ? std::atoll(argv[1]) : 18;
  using clock = std::chrono::steady_clock;
  std::cout << "F\tcount\tserial_ms\tparallel_ms\tspeedup\n";
  for (int64_t f = 1; f <= max_f; ++f) {
    auto t0 = clock::now();
    auto serial = rqns::enumerate_by_frobenius_serial(f, max_f);
    auto t1 = clock::now();
    auto parallel = rqns::enumerate_by_frobenius(f, max_f);
    auto t2 = clock::now();
    if (serial != parallel) {
      std::cerr << "mismatch at F=" << f << "\n";
      return 1;
    }
    double sm = std::chrono::duration<double, std::milli>(t1 - t0).count();
    double pm = std::chrono::duration<double, std::milli>(t2 - t1).count();
    std::cout << f << "\t" << serial.size() << "\t" << sm << "\t" << pm << "\t"
              << (pm > 0 ? sm / pm : 0.0) << "\n";
  }
  return 0;
}
