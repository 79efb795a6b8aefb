#include "dqv/classify.hpp"
#include "dqv/expr.hpp"
#include "dqv/fields.hpp"

namespace dqv {

bool LineLocus::contains(const SurfaceParams& p) const {
  TowerPtr k = common_tower(p.tower(), common_tower(m.tower(), c.tower()));
  return decide_zero(p.nu.embed(k) - m.embed(k) * p.mu.embed(k) - c.embed(k));
}

namespace constants {

namespace {

Alg qi(const char* text) { return parse_alg(text, fields::qi()); }
Alg q6(const char* text) { return parse_alg(text, fields::qi_s6()); }

UPoly upoly(const TowerPtr& k, std::initializer_list<const char*> low_to_high) {
  std::vector<Alg> c;
  for (const char* t : low_to_high) c.push_back(parse_alg(t, k));
  return UPoly(k, std::move(c));
}

Alg horner(const Alg& a, const std::vector<Rational>& high_to_low) {
  Alg acc(a.tower());
  for (const auto& c : high_to_low) acc = acc * a + Alg(a.tower(), c);
  return acc;
}

}  // namespace

LineLocus printed_line(const std::string& name) {
  if (name == "C5+") return {qi("8/25 + 6/25*i"), qi("7/500 + 6/125*i")};
  if (name == "C5-") return {qi("8/25 - 6/25*i"), qi("7/500 - 6/125*i")};
  if (name == "C10+") return {q6("8/25 + 2/75*s6*i"), q6("23/750 + 2/375*s6*i")};
  if (name == "C10-") return {q6("8/25 - 2/75*s6*i"), q6("23/750 - 2/375*s6*i")};
  throw ConfigError("unknown line " + name);
}

LineLocus derived_line(const std::string& name) {
  const TowerPtr k = fields::qi_s6();
  Alg one(k, Rational(1));
  ProjPoint rep;
  if (name == "C5+") rep = ProjPoint({one, one, one, one, q6("2*i")});
  else if (name == "C5-") rep = ProjPoint({one, one, one, one, q6("-2*i")});
  else if (name == "C10+") rep = ProjPoint({one, one, one, q6("s6*i/2"), q6("s6*i/2")});
  else if (name == "C10-") rep = ProjPoint({one, one, one, q6("-s6*i/2"), q6("-s6*i/2")});
  else throw ConfigError("unknown line " + name);
  ParamLocus l = singular_param_locus(rep);
  if (l.kind != ParamLocus::Line) throw DimensionMismatch(name + ": parameter locus is not a line");
  return {l.m, l.c};
}

UPoly printed_c20() { return upoly(fields::q(), {"-1/4", "0", "-27", "-81", "-405/4"}); }
UPoly printed_c30() { return upoly(fields::q(), {"3/4", "14", "99", "324", "405"}); }

SurfaceParams mu5ab(int sign) {
  return sign > 0 ? SurfaceParams{qi("-1/5 - 1/15*i"), qi("-17/500 - 8/375*i")}
                  : SurfaceParams{qi("-1/5 + 1/15*i"), qi("-17/500 + 8/375*i")};
}

SurfaceParams mu20to10(int sign) {
  return sign > 0 ? SurfaceParams{q6("-1/5 - 2/45*s6*i"), q6("-59/2250 - 16/1125*s6*i")}
                  : SurfaceParams{q6("-1/5 + 2/45*s6*i"), q6("-59/2250 + 16/1125*s6*i")};
}

SurfaceParams mu30to10(int sign) {
  return sign > 0 ? SurfaceParams{q6("-1/5 + 1/90*s6*i"), q6("-79/2250 + 4/1125*s6*i")}
                  : SurfaceParams{q6("-1/5 - 1/90*s6*i"), q6("-79/2250 - 4/1125*s6*i")};
}

UPoly mu5_quadratic(int sign) {
  return sign > 0 ? upoly(fields::qi(), {"-1249 + 9382*i", "126510 + 149670*i", "894825"})
                  : upoly(fields::qi(), {"-1249 - 9382*i", "126510 - 149670*i", "894825"});
}

UPoly mu10_quadratic(int sign) {
  return sign > 0 ? upoly(fields::qi_s6(), {"1556 + 93*s6*i", "34140 + 1485*s6*i", "216090"})
                  : upoly(fields::qi_s6(), {"1556 - 93*s6*i", "34140 - 1485*s6*i", "216090"});
}

UPoly octic20() { return upoly(fields::q(), {"52", "172", "257", "266", "217", "116", "56", "16", "4"}); }
UPoly octic30() {
  return upoly(fields::q(), {"163", "602", "1765", "3740", "5698", "5952", "4608", "2048", "512"});
}

Alg b20(const Alg& a) {
  return horner(a, {Rational(98, 215), Rational(314, 215), Rational(1094, 215), Rational(376, 43),
                    Rational(1401, 86), Rational(6567, 430), Rational(2874, 215), Rational(1271, 215)});
}

Alg b30(const Alg& a) {
  return horner(a, {Rational(-22544, 12639), Rational(-26992, 4213), Rational(-174304, 12639),
                    Rational(-204442, 12639), Rational(-1036395, 67408), Rational(-1670095, 202224),
                    Rational(-1606787, 404448), Rational(-480445, 404448)});
}

std::pair<Alg, Alg> a20_explicit(int sign) {
  const TowerPtr k = fields::qi_s95();
  if (sign > 0)
    return {parse_alg("-(19 + 2*s95)/26 + (-30 + 3*s95)/26*i", k),
            parse_alg("(-19 + 2*s95)/26 - (30 + 3*s95)/26*i", k)};
  return {parse_alg("(-19 + 2*s95)/26 + (30 + 3*s95)/26*i", k),
          parse_alg("-(19 + 2*s95)/26 + (30 - 3*s95)/26*i", k)};
}

UPoly pair_quadratic(const std::string& name) {
  const TowerPtr k6 = fields::qi_s6(), k = fields::qi();
  if (name == "a20,1+") return upoly(k6, {"-1 + s6*i", "1 + s6*i", "1"});
  if (name == "a20,2+") return upoly(k6, {"39 - 45*s6*i", "-63 + 35*s6*i", "49"});
  if (name == "a20,1-") return upoly(k6, {"-1 - s6*i", "1 - s6*i", "1"});
  if (name == "a20,2-") return upoly(k6, {"39 + 45*s6*i", "-63 - 35*s6*i", "49"});
  if (name == "a30,1+") return upoly(k, {"1 - 4*i", "4 - 4*i", "4"});
  if (name == "a30,2+") return upoly(k, {"121 + 20*i", "-52 - 260*i", "676"});
  if (name == "a30,1-") return upoly(k, {"1 + 4*i", "4 + 4*i", "4"});
  if (name == "a30,2-") return upoly(k, {"121 - 20*i", "-52 + 260*i", "676"});
  if (name == "a30+") return upoly(k6, {"-12 + 5*s6*i", "14 + 35*s6*i", "98"});
  if (name == "a30-") return upoly(k6, {"-12 - 5*s6*i", "14 - 35*s6*i", "98"});
  throw ConfigError("unknown pair " + name);
}

bool pair_is_type3(const std::string& name) { return name.rfind("a20", 0) == 0; }

}  // namespace constants

}  // namespace dqv
