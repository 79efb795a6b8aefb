#include "doctest.h"
#include "dqv/fields.hpp"
#include "dqv/linalg.hpp"
#include "helpers.hpp"

using namespace dqv;

namespace {

AlgMatrix rational_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  AlgMatrix m;
  for (auto r : rows) {
    std::vector<Alg> row;
    for (long v : r) row.push_back(Alg(v));
    m.push_back(row);
  }
  return m;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank_serial(rational_matrix({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_serial(rational_matrix({{0, 0}, {0, 0}})) == 0);
  CHECK(rank_serial(rational_matrix({{0, 1, 2}, {1, 0, 3}, {1, 1, 5}})) == 2);
  CHECK(rank_serial(rational_matrix({{1, 2, 3}})) == 1);
  CHECK(rank_serial({}) == 0);
}

TEST_CASE("three rank routines agree on random low-rank products") {
  std::mt19937_64 g(2024);
  TowerPtr k = fields::qi_s6();
  for (int trial = 0; trial < 12; ++trial) {
    const int rows = 9, cols = 7, r = 1 + trial % 5;
    AlgMatrix a(rows, std::vector<Alg>(r)), b(r, std::vector<Alg>(cols));
    for (auto& row : a)
      for (auto& x : row) x = test::random_alg(g, k);
    for (auto& row : b)
      for (auto& x : row) x = test::random_alg(g, k);
    AlgMatrix m(rows, std::vector<Alg>(cols, Alg(k)));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        for (int l = 0; l < r; ++l) m[i][j] += a[i][l] * b[l][j];
    int rs = rank_serial(m);
    CHECK(rs <= r);
    CHECK(rank_parallel(m, 1) == rs);
    CHECK(rank_parallel(m, 3) == rs);
    RankCertificate c = rank_certificate(m);
    CHECK(c.rank == rs);
    CHECK(static_cast<int>(c.left_kernel.size()) == rows - rs);
    CHECK(verify_certificate(m, c));
  }
}

TEST_CASE("a tampered certificate is rejected") {
  AlgMatrix m = rational_matrix({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  RankCertificate c = rank_certificate(m);
  CHECK(c.rank == 2);
  REQUIRE(verify_certificate(m, c));
  c.left_kernel[0][0] += Alg(1L);
  CHECK(!verify_certificate(m, c));
}

TEST_CASE("transpose") {
  AlgMatrix m = rational_matrix({{1, 2, 3}, {4, 5, 6}});
  AlgMatrix t = transpose(m);
  REQUIRE(t.size() == 3);
  CHECK(t[2][1] == Alg(6L));
}
