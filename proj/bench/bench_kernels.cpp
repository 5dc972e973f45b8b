// Times the serial reference loops against the OpenMP kernels on inputs large
// enough to matter, and verifies that both modes agree bit for bit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pframe/dilation.hpp"
#include "pframe/operators.hpp"
#include "support/testsupport.hpp"

using namespace pframe;
namespace ts = pframe::testsupport;

namespace {

using Clock = std::chrono::steady_clock;

double time_run(const std::function<double()>& fn, double* result) {
  const auto start = Clock::now();
  *result = fn();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const std::string& name, const std::string& size,
            const std::function<double(Exec)>& kernel) {
  double serial_value = 0.0;
  double parallel_value = 0.0;
  const double serial_s =
      time_run([&] { return kernel(Exec::serial); }, &serial_value);
  const double parallel_s =
      time_run([&] { return kernel(Exec::parallel); }, &parallel_value);
  const bool identical = serial_value == parallel_value;
  std::printf("%-22s %-22s serial %8.1f ms   omp %8.1f ms   speedup %5.2fx   %s\n",
              name.c_str(), size.c_str(), serial_s * 1e3, parallel_s * 1e3,
              serial_s / parallel_s, identical ? "bit-identical" : "MISMATCH");
  std::fflush(stdout);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; both columns run serially\n");
#endif

  std::mt19937 gen(424243);

  {
    const auto matrix = ts::random_valid_matrix(4, 2, gen);
    const auto signal = ts::random_signal(2, 8, gen);
    report("analyze", "M=4 N=2 k=8",
           [&](Exec exec) { return analyze(matrix, signal, exec).sum_sq(); });
  }

  {
    const auto matrix = ts::random_valid_matrix(6, 3, gen);
    report("resolution-of-identity", "M=6 N=3 k=6", [&](Exec exec) {
      return resolution_of_identity_check(matrix, 6, exec);
    });
  }

  {
    const auto matrix = ts::random_valid_matrix(4, 4, gen);
    report("level-parseval", "M=4 N=4 k=4", [&](Exec exec) {
      return level_parseval_deviation(matrix, 4, exec);
    });
  }

  {
    const auto sys = build_dilation(ts::m3_seed());
    report("cuntz-check", "NN'=4 k=4",
           [&](Exec exec) { return cuntz_check(sys, 4, exec); });
  }

  {
    const auto sys = build_dilation(ts::random_valid_matrix(8, 4, gen));
    report("orthonormal-basis", "NN'=8 k=3", [&](Exec exec) {
      return orthonormal_basis_check(sys, 3, exec);
    });
  }

  {
    const auto sys = build_dilation(ts::random_valid_matrix(6, 2, gen));
    report("compatibility", "NN'=6 k=3", [&](Exec exec) {
      return compatibility_check(sys, 3, exec);
    });
  }

  return 0;
}
