// Timings of the OpenMP matrix kernels against their serial references.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gh/matrix.hpp"

using namespace gh;

namespace {

Matrix sparse_random(size_t n, double density, std::mt19937& gen) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> v(-5, 5);
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (u(gen) < density) m(i, j) = Scalar(v(gen), 1 + (v(gen) & 3));
  return m;
}

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::mt19937 gen(11);
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads %d, best of %d\n", threads, reps);
  std::printf("%-8s %6s %8s %12s %12s %8s\n", "kernel", "n", "density", "serial_s", "parallel_s", "speedup");
  bool agree = true;
  for (size_t n : {64, 128, 256})
    for (double density : {0.05, 0.3}) {
      Matrix a = sparse_random(n, density, gen), b = sparse_random(n, density, gen);
      Matrix ps, pp;
      double ts = best_of(reps, [&] { ps = matmul_serial(a, b); });
      double tp = best_of(reps, [&] { pp = matmul(a, b); });
      agree = agree && ps == pp;
      std::printf("%-8s %6zu %8.2f %12.4f %12.4f %8.2f\n", "matmul", n, density, ts, tp, ts / tp);
    }
  for (size_t n : {8, 16, 24}) {
    Matrix a = sparse_random(n, 0.3, gen), b = sparse_random(n, 0.3, gen);
    Matrix ks, kp;
    double ts = best_of(reps, [&] { ks = kron_serial(a, b); });
    double tp = best_of(reps, [&] { kp = kron(a, b); });
    agree = agree && ks == kp;
    std::printf("%-8s %6zu %8.2f %12.4f %12.4f %8.2f\n", "kron", n * n, 0.3, ts, tp, ts / tp);
  }
  std::printf("results %s\n", agree ? "agree" : "DIFFER");
  return agree ? 0 : 1;
}
