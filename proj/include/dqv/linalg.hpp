#pragma once

#include <vector>

#include "dqv/tower.hpp"

namespace dqv {

using AlgMatrix = std::vector<std::vector<Alg>>;

// Fraction-free (Bareiss) rank. Pivots are certified with decide_zero, so a
// zero divisor in a split-able tower surfaces as ZeroDivisor.
int rank_serial(AlgMatrix m);
// Same elimination with the row updates of each step spread over OpenMP
// threads; pivot choice stays serial so the result matches rank_serial.
int rank_parallel(AlgMatrix m, int threads = 0);

struct RankCertificate {
  int rank = 0;
  std::vector<int> rows, cols;        // an r x r minor that is nonzero
  Alg minor_det;                      // its determinant
  std::vector<std::vector<Alg>> left_kernel;  // N - r independent y with y*M = 0
};

// Independent oracle: Gauss-Jordan on the transpose, then a nonzero minor and a
// left-kernel basis that are re-checked by direct multiplication.
RankCertificate rank_certificate(const AlgMatrix& m);
bool verify_certificate(const AlgMatrix& m, const RankCertificate& c);

AlgMatrix transpose(const AlgMatrix& m);

}  // namespace dqv
