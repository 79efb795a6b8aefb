#include <algorithm>

#include "dqv/geometry.hpp"
#include "dqv/invariants.hpp"

namespace dqv {

AlgMatrix cubic_evaluation_matrix(const std::vector<ProjPoint>& pts) {
  static const std::vector<Mono> cubics = monomials(5, 3);
  AlgMatrix e;
  if (pts.empty()) return e;
  TowerPtr k = pts[0].tower();
  for (const auto& p : pts) k = common_tower(k, p.tower());
  for (const auto& p : pts) {
    std::vector<std::vector<Alg>> pw(5);
    for (std::size_t i = 0; i < 5; ++i) {
      Alg x = p.coords()[i].embed(k);
      pw[i] = {Alg(k, Rational(1)), x, x * x, x * x * x};
    }
    std::vector<Alg> row;
    row.reserve(cubics.size());
    for (const auto& m : cubics) {
      Alg v = pw[0][m.e[0]];
      for (std::size_t i = 1; i < 5; ++i)
        if (m.e[i]) v *= pw[i][m.e[i]];
      row.push_back(v);
    }
    e.push_back(std::move(row));
  }
  return e;
}

DefectResult defect(const std::vector<ProjPoint>& pts, int threads) {
  std::vector<ProjPoint> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DuplicatePoints("defect needs pairwise distinct points");
  DefectResult r;
  r.points = static_cast<int>(pts.size());
  if (pts.empty()) return r;
  AlgMatrix e = cubic_evaluation_matrix(pts);
  r.rank = rank_parallel(e, threads);
  RankCertificate cert = rank_certificate(e);
  if (!verify_certificate(e, cert)) throw OracleDisagreement("rank certificate failed verification");
  r.oracle_rank = cert.rank;
  if (r.rank != r.oracle_rank)
    throw OracleDisagreement("Bareiss rank " + std::to_string(r.rank) + " vs certificate rank " +
                             std::to_string(r.oracle_rank));
  r.defect = r.points - r.rank;
  return r;
}

}  // namespace dqv
