#include "dqv/chartable.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include "dqv/expr.hpp"
#include "dqv/fields.hpp"

#ifndef DQV_DEFAULT_DATA_DIR
#define DQV_DEFAULT_DATA_DIR "data"
#endif

namespace dqv {

namespace {

// Whitespace split that keeps parenthesised groups together.
std::vector<std::string> split_values(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : line) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
      if (!cur.empty()) out.push_back(cur), cur.clear();
      continue;
    }
    cur += c;
  }
  if (!cur.empty()) out.push_back(cur);
  if (depth != 0) throw DataFormatError("unbalanced parentheses in \"" + line + "\"");
  return out;
}

}  // namespace

CharacterTable CharacterTable::parse(const std::string& text, const std::string& source) {
  CharacterTable t;
  auto fail = [&](const std::string& m) -> void { throw DataFormatError(source + ": " + m); };

  // conductor = lcm of every z<m> mentioned
  std::regex zre("z([0-9]+)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), zre); it != std::sregex_iterator(); ++it)
    t.conductor_ = std::lcm(t.conductor_, std::stoi((*it)[1].str()));
  t.field_ = t.conductor_ <= 2 ? fields::q() : fields::cyclotomic_field(t.conductor_);
  const int N = t.conductor_;
  const TowerPtr K = t.field_;
  NameResolver resolve = [N, K](const std::string& name) -> std::optional<Alg> {
    if (name.size() < 2 || name[0] != 'z') return std::nullopt;
    int m = std::stoi(name.substr(1));
    if (m <= 0 || N % m) return std::nullopt;
    if (N <= 2) return Alg(K, Rational(m == 1 ? 1 : -1));
    return Alg::gen(K, "z").pow(N / m);
  };

  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    lines.push_back(line.substr(b));
  }
  if (lines.empty()) fail("empty file");
  std::size_t k = 0;
  {
    std::istringstream h(lines[0]);
    std::string w1, w2, w3;
    long nclasses = 0;
    if (!(h >> w1 >> t.group_ >> w2 >> t.order_ >> w3 >> nclasses) || w1 != "group" || w2 != "order" ||
        w3 != "classes")
      fail("bad header");
    k = static_cast<std::size_t>(nclasses);
  }
  std::vector<std::array<std::string, 5>> pow_labels;
  std::size_t li = 1;
  for (std::size_t c = 0; c < k; ++c, ++li) {
    if (li >= lines.size()) fail("missing class lines");
    std::istringstream h(lines[li]);
    std::string kw, label, ksz, p2, l2, p3, l3, p4, l4;
    long size = 0;
    if (!(h >> kw >> label >> ksz >> size) || kw != "class" || ksz != "size") fail("bad class line: " + lines[li]);
    std::array<std::string, 5> pl;
    pl[1] = label;
    while (h >> p2 >> l2) {
      if (p2 == "pow2") pl[2] = l2;
      else if (p2 == "pow3") pl[3] = l2;
      else if (p2 == "pow4") pl[4] = l2;
      else fail("unknown class field " + p2);
    }
    t.classes_.push_back({label, size, {}});
    pow_labels.push_back(pl);
  }
  long total = 0;
  for (const auto& c : t.classes_) total += c.size;
  if (total != t.order_) fail("class sizes sum to " + std::to_string(total) + ", not " + std::to_string(t.order_));
  for (std::size_t c = 0; c < k; ++c)
    for (int p = 1; p <= 4; ++p) {
      if (pow_labels[c][static_cast<std::size_t>(p)].empty()) {
        t.classes_[c].pow[static_cast<std::size_t>(p)] = -1;
        continue;
      }
      t.classes_[c].pow[static_cast<std::size_t>(p)] = t.class_index(pow_labels[c][static_cast<std::size_t>(p)]);
    }
  while (li < lines.size()) {
    std::istringstream h(lines[li]);
    std::string kw, name, kd;
    int dim = 0;
    if (!(h >> kw >> name >> kd >> dim) || kw != "char" || kd != "dim") fail("bad char line: " + lines[li]);
    ++li;
    std::vector<std::string> toks;
    while (toks.size() < k && li < lines.size() && lines[li].rfind("char ", 0) != 0) {
      auto more = split_values(lines[li]);
      toks.insert(toks.end(), more.begin(), more.end());
      ++li;
    }
    if (toks.size() != k) fail("character " + name + " has " + std::to_string(toks.size()) + " values");
    Character ch{name, dim, {}};
    for (const auto& s : toks) ch.values.push_back(parse_alg(s, K, resolve));
    if (!ch.values[0].is_rational() || ch.values[0].rational() != dim)
      fail("character " + name + " has chi(1) != " + std::to_string(dim));
    t.chars_.push_back(std::move(ch));
  }
  if (t.classes_.empty() || t.classes_[0].size != 1) fail("first class must be the identity");
  std::string err = t.check_row_orthogonality();
  if (!err.empty()) fail(err);
  if (t.is_complete()) {
    err = t.check_column_orthogonality();
    if (!err.empty()) fail(err);
  }
  return t;
}

int CharacterTable::class_index(const std::string& label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].label == label) return static_cast<int>(i);
  throw DataFormatError(group_ + ": unknown class " + label);
}

const Character& CharacterTable::character(const std::string& name) const {
  for (const auto& c : chars_)
    if (c.name == name) return c;
  throw DataFormatError(group_ + ": unknown character " + name);
}

Alg CharacterTable::conj_value(const Alg& x) const {
  if (conductor_ <= 2) return x;
  // z -> z^(N-1) on the power basis
  Alg zinv = Alg::gen(field_, "z").pow(conductor_ - 1);
  Alg out(field_);
  Alg p(field_, Rational(1));
  const Flat f = x.embed(field_).flat();
  for (std::size_t e = 0; e < f.size(); ++e) {
    if (sgn(f[e]) != 0) out += Alg(field_, f[e]) * p;
    p *= zinv;
  }
  return out;
}

ClassFunction CharacterTable::conj(const ClassFunction& f) const {
  ClassFunction g;
  for (const auto& v : f) g.push_back(conj_value(v));
  return g;
}

ClassFunction CharacterTable::add(const ClassFunction& a, const ClassFunction& b) const {
  if (a.size() != b.size()) throw DimensionMismatch("class functions of different length");
  ClassFunction c;
  for (std::size_t i = 0; i < a.size(); ++i) c.push_back(a[i] + b[i]);
  return c;
}

Alg CharacterTable::inner(const ClassFunction& a, const ClassFunction& b) const {
  Alg s(field_);
  for (std::size_t i = 0; i < classes_.size(); ++i)
    s += Alg(classes_[i].size) * a[i] * conj_value(b[i]);
  return s * Alg(Rational(1, 1) / order_);
}

ClassFunction CharacterTable::trivial() const { return ClassFunction(classes_.size(), Alg(field_, Rational(1))); }

ClassFunction CharacterTable::sym_power(const ClassFunction& chi, int k) const {
  if (k < 0 || k > 4) throw MissingPowerMap("symmetric powers implemented for k <= 4");
  const std::size_t n = classes_.size();
  auto p = [&](std::size_t c, int j) -> Alg {
    int idx = j == 1 ? static_cast<int>(c) : classes_[c].pow[static_cast<std::size_t>(j)];
    if (idx < 0) throw MissingPowerMap(group_ + ": no pow" + std::to_string(j) + " for " + classes_[c].label);
    return chi[static_cast<std::size_t>(idx)];
  };
  ClassFunction out(n);
  for (std::size_t c = 0; c < n; ++c) {
    switch (k) {
      case 0:
        out[c] = Alg(field_, Rational(1));
        break;
      case 1:
        out[c] = p(c, 1);
        break;
      case 2:
        out[c] = (p(c, 1) * p(c, 1) + p(c, 2)) * Alg(Rational(1, 2));
        break;
      case 3: {
        Alg p1 = p(c, 1);
        out[c] = (p1 * p1 * p1 + Alg(3L) * p1 * p(c, 2) + Alg(2L) * p(c, 3)) * Alg(Rational(1, 6));
        break;
      }
      default: {
        Alg p1 = p(c, 1), p2 = p(c, 2);
        out[c] = (p1.pow(4) + Alg(6L) * p1 * p1 * p2 + Alg(3L) * p2 * p2 + Alg(8L) * p1 * p(c, 3) +
                  Alg(6L) * p(c, 4)) *
                 Alg(Rational(1, 24));
      }
    }
  }
  return out;
}

long CharacterTable::invariant_dimension(const ClassFunction& chi, int k) const {
  Alg d = inner(sym_power(conj(chi), k), trivial());
  if (!d.is_rational()) throw OracleDisagreement(group_ + ": non-rational invariant count " + d.str());
  Rational q = d.rational();
  if (q.get_den() != 1 || sgn(q) < 0)
    throw OracleDisagreement(group_ + ": invariant count " + q.get_str() + " is not a nonnegative integer");
  return q.get_num().get_si();
}

std::string CharacterTable::check_row_orthogonality() const {
  for (std::size_t a = 0; a < chars_.size(); ++a)
    for (std::size_t b = 0; b < chars_.size(); ++b) {
      Alg v = inner(chars_[a].values, chars_[b].values);
      bool ok = a == b ? v.is_one() : v.is_zero();
      if (!ok) return "<" + chars_[a].name + "," + chars_[b].name + "> = " + v.str();
    }
  return "";
}

std::string CharacterTable::check_column_orthogonality() const {
  const std::size_t n = classes_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Alg s(field_);
      for (const auto& c : chars_) s += c.values[i] * conj_value(c.values[j]);
      Alg want = i == j ? Alg(Rational(order_) / classes_[i].size) : Alg();
      if (s != want) return "column " + classes_[i].label + "," + classes_[j].label + " sums to " + s.str();
    }
  return "";
}

std::string default_data_dir() {
  if (const char* e = std::getenv("DQV_DATA_DIR"); e && *e) return e;
  return DQV_DEFAULT_DATA_DIR;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) != 1 || EVP_DigestFinal_ex(ctx, md, &len) != 1) {
    EVP_MD_CTX_free(ctx);
    throw ConfigError("sha256 failed");
  }
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

namespace {
std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DataFileMissing(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}
}  // namespace

CharacterTable load_table(const std::string& data_dir, const std::string& group) {
  const std::string fn = group + ".tbl";
  const std::string manifest = read_file(data_dir + "/MANIFEST.sha256");
  std::string expected;
  std::istringstream m(manifest);
  std::string hash, name;
  while (m >> hash >> name)
    if (name == fn) expected = hash;
  const std::string body = read_file(data_dir + "/" + fn);  // DataFileMissing first
  if (expected.empty()) throw ChecksumMismatch(fn + " is not listed in the manifest");
  const std::string got = sha256_hex(body);
  if (got != expected) throw ChecksumMismatch(fn + ": expected " + expected + ", found " + got);
  return CharacterTable::parse(body, data_dir + "/" + fn);
}

}  // namespace dqv
