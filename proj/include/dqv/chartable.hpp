#pragma once

#include <array>
#include <string>
#include <vector>

#include "dqv/tower.hpp"

namespace dqv {

struct ClassInfo {
  std::string label;
  long size = 0;
  std::array<int, 5> pow{};  // pow[k] = class index of g^k, k = 2..4 (pow[1] = self)
};

struct Character {
  std::string name;
  int dim = 0;
  std::vector<Alg> values;
};

using ClassFunction = std::vector<Alg>;

class CharacterTable {
 public:
  // Parses the line format; verifies structure and exact orthogonality.
  static CharacterTable parse(const std::string& text, const std::string& source = "<memory>");

  const std::string& group() const { return group_; }
  long order() const { return order_; }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  const std::vector<Character>& characters() const { return chars_; }
  const TowerPtr& field() const { return field_; }
  int conductor() const { return conductor_; }
  bool is_complete() const { return chars_.size() == classes_.size(); }

  int class_index(const std::string& label) const;
  const Character& character(const std::string& name) const;

  ClassFunction conj(const ClassFunction& f) const;
  ClassFunction add(const ClassFunction& a, const ClassFunction& b) const;
  // <a, b> = (1/|G|) sum size * a * conj(b)
  Alg inner(const ClassFunction& a, const ClassFunction& b) const;
  ClassFunction trivial() const;
  ClassFunction sym_power(const ClassFunction& chi, int k) const;
  // Multiplicity of the trivial character in Sym^k of the dual.
  long invariant_dimension(const ClassFunction& chi, int k) const;

  // Exact checks; each returns an empty string on success, else a description.
  std::string check_row_orthogonality() const;
  std::string check_column_orthogonality() const;

 private:
  Alg conj_value(const Alg& x) const;
  std::string group_;
  long order_ = 0;
  std::vector<ClassInfo> classes_;
  std::vector<Character> chars_;
  TowerPtr field_;
  int conductor_ = 1;
};

std::string default_data_dir();
std::string sha256_hex(const std::string& bytes);
// Reads <dir>/<group>.tbl after checking it against <dir>/MANIFEST.sha256.
CharacterTable load_table(const std::string& data_dir, const std::string& group);

}  // namespace dqv
