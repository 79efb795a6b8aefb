#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "dqv/chartable.hpp"
#include "dqv/invariants.hpp"
#include "dqv/perm.hpp"

using namespace dqv;
namespace fs = std::filesystem;

TEST_CASE("permutations") {
  Perm c = Perm::cycle(5, {0, 1, 2, 3, 4});
  CHECK(c.order() == 5);
  CHECK(c.is_even());
  CHECK(c * c.inverse() == Perm::identity(5));
  Perm t = Perm::cycle(5, {0, 1});
  CHECK(!t.is_even());
  CHECK((t * c)(4) == 1);
}

TEST_CASE("group orders") {
  CHECK(PermGroup::symmetric(5).order() == 120);
  CHECK(PermGroup::alternating(5).order() == 60);
  CHECK(PermGroup::alternating(6).order() == 360);
  CHECK(PermGroup::symmetric(6).order() == 720);
  PermGroup p = PermGroup::psl2_5_on_p1();
  CHECK(p.order() == 60);
  CHECK(p.degree() == 6);
  for (const auto& g : p.elements()) CHECK(g.is_even());
}

TEST_CASE("bundled character tables load and are orthogonal") {
  for (const char* g : {"A5", "S5", "A6", "S6", "PSL2_7", "PSL2_11", "PSp4_3"}) {
    CAPTURE(g);
    CharacterTable t = load_table(default_data_dir(), g);
    CHECK(t.check_row_orthogonality().empty());
    long total = 0;
    for (const auto& c : t.classes()) total += c.size;
    CHECK(total == t.order());
    if (t.is_complete()) {
      CHECK(t.check_column_orthogonality().empty());
      long sq = 0;
      for (const auto& ch : t.characters()) sq += static_cast<long>(ch.dim) * ch.dim;
      CHECK(sq == t.order());
    }
  }
}

TEST_CASE("invariant dimensions from characters") {
  CharacterTable a5 = load_table(default_data_dir(), "A5");
  ClassFunction w5 = a5.character("W5").values;
  CHECK(a5.invariant_dimension(w5, 2) == 1);
  CHECK(a5.invariant_dimension(w5, 4) == 2);
  ClassFunction v = a5.add(a5.add(a5.trivial(), a5.trivial()), a5.character("W3").values);
  CHECK(a5.invariant_dimension(v, 2) == 4);
  CHECK(a5.invariant_dimension(v, 4) == 9);
  CharacterTable p = load_table(default_data_dir(), "PSL2_11");
  CHECK(p.invariant_dimension(p.character("5").values, 2) == 0);
}

TEST_CASE("explicit matrix groups agree with characters") {
  MatrixGroup ico = MatrixGroup::a5_icosahedral();
  CHECK(ico.elements().size() == 60);
  CHECK(fixed_dimension(ico, 2) == 4);
  MatrixGroup s6 = MatrixGroup::standard_summand(PermGroup::symmetric(6));
  CHECK(s6.dim() == 5);
  CHECK(fixed_dimension(s6, 2) == 1);
  CHECK(fixed_dimension(s6, 4) == 2);
  CHECK(invariant_basis(s6, 4).size() == 2);
  CHECK(monomials(5, 3).size() == 35);
}

TEST_CASE("parse rejects a table that is not orthogonal") {
  const std::string bad =
      "group C2 order 2 classes 2\n"
      "class 1A size 1 pow2 1A pow3 1A pow4 1A\n"
      "class 2A size 1 pow2 1A pow3 2A pow4 1A\n"
      "char 1 dim 1\n1 1\n"
      "char s dim 1\n1 1\n";
  CHECK_THROWS_AS(CharacterTable::parse(bad), DataFormatError);
  const std::string good =
      "group C2 order 2 classes 2\n"
      "class 1A size 1 pow2 1A pow3 1A pow4 1A\n"
      "class 2A size 1 pow2 1A pow3 2A pow4 1A\n"
      "char 1 dim 1\n1 1\n"
      "char s dim 1\n1 -1\n";
  CharacterTable t = CharacterTable::parse(good);
  CHECK(t.invariant_dimension(t.character("s").values, 2) == 1);
  CHECK(t.invariant_dimension(t.character("s").values, 3) == 0);
}

TEST_CASE("checksum manifest guards the data files") {
  fs::path dir = fs::temp_directory_path() / "dqv_tables_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto& e : fs::directory_iterator(default_data_dir())) fs::copy(e.path(), dir / e.path().filename());
  CHECK_NOTHROW(load_table(dir.string(), "A5"));
  {
    std::ofstream f(dir / "A5.tbl", std::ios::app);
    f << "\n";
  }
  CHECK_THROWS_AS(load_table(dir.string(), "A5"), ChecksumMismatch);
  CHECK_THROWS_AS(load_table(dir.string(), "M11"), DataFileMissing);
  fs::remove_all(dir);
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
