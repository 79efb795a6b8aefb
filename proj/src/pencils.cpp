#include <algorithm>

#include "dqv/classify.hpp"
#include "dqv/fields.hpp"

namespace dqv {

namespace {

// nu as a function of mu on the closure of the Type3 / Type4 curve, from the
// closed forms in s = a + b after solving the mu-relation for s.
Alg curve_nu(const Alg& mu, bool type3) {
  if (type3) {
    // mu = -(s+1)/(3(s+3))  =>  s = -(9 mu + 1)/(3 mu + 1)
    Alg s = -(Alg(9L) * mu + Alg(1L)) / (Alg(3L) * mu + Alg(1L));
    return type3_nu(s, (s * s + Alg(3L)) / Alg(2L));
  }
  // mu = -(s+1)/(3(2s+1))  =>  s = -(3 mu + 1)/(6 mu + 1)
  Alg s = -(Alg(3L) * mu + Alg(1L)) / (Alg(6L) * mu + Alg(1L));
  return type4_nu(s, (Alg(2L) * s * s + Alg(1L)) / Alg(4L));
}

constexpr int kNodes = 5;
constexpr int kConfirm = 3;

// Rational nodes avoiding the excluded values -1/3 and -1/6.
std::vector<Alg> nodes(int n) {
  std::vector<Alg> out;
  for (int t = 1; static_cast<int>(out.size()) < n; ++t) out.push_back(Alg(Rational(t, 7)));
  return out;
}

UPoly derived_curve(bool type3) {
  std::vector<Alg> xs = nodes(kNodes), ys;
  for (const auto& x : xs) ys.push_back(curve_nu(x, type3));
  return interpolate(xs, ys);
}

bool same(const Alg& a, const Alg& b) {
  TowerPtr k = common_tower(a.tower(), b.tower());
  return decide_zero(a.embed(k) - b.embed(k));
}

CheckRecord identity_record(bool type3, bool printed) {
  const std::string tag = type3 ? "C20" : "C30";
  CheckRecord c;
  c.id = std::string("pencil.") + tag + (printed ? ".printed" : ".derived");
  c.anchor = printed ? "printed quartic relation for " + tag + ", against the closed forms"
                     : "quartic relation for " + tag + " recomputed from the closed forms";
  UPoly d = derived_curve(type3);
  std::vector<Alg> all = nodes(kNodes + kConfirm);
  bool confirm = true;
  for (const auto& x : all) confirm = confirm && same(d.eval(x), curve_nu(x, type3));
  Json p{{"mode", "interpolation"},
         {"nodes", kNodes},
         {"confirmations", kConfirm},
         {"derived", d.str("mu")},
         {"derived_degree", d.degree()}};
  bool ok = confirm && d.degree() <= 4;
  if (printed) {
    UPoly pr = type3 ? constants::printed_c20() : constants::printed_c30();
    p["printed"] = pr.str("mu");
    UPoly diff = d - pr;
    p["derived_minus_printed"] = diff.str("mu");
    ok = ok && diff.is_zero();
    if (!ok)
      p["message"] = IdentityFailure(tag + ": nu(mu) from the closed forms differs from the printed quartic by " +
                                     diff.str("mu"))
                         .what();
  } else if (!ok) {
    p["message"] = IdentityFailure(tag + ": nu(mu) is not a polynomial of degree <= 4").what();
  }
  c.status = ok ? Status::Pass : Status::Fail;
  c.payload = p;
  return c;
}

CheckRecord line_record(const std::string& name) {
  CheckRecord c;
  c.id = "pencil." + name + ".line";
  c.anchor = "line " + name + " recomputed from an orbit representative";
  LineLocus pr = constants::printed_line(name), dr = constants::derived_line(name);
  bool ok = same(pr.m, dr.m) && same(pr.c, dr.c);
  c.status = ok ? Status::Pass : Status::Fail;
  c.payload = Json{{"printed", "nu = (" + pr.m.str() + ")*mu + " + pr.c.str()},
                   {"derived", "nu = (" + dr.m.str() + ")*mu + " + dr.c.str()}};
  if (!ok) c.payload["message"] = IdentityFailure(name + ": printed and derived lines differ").what();
  return c;
}

struct Intersection {
  std::string line;
  bool type3;
  SurfaceParams point;
  std::string point_name;
};

// Table parameters on both the line and the curve, which explain further roots.
std::vector<SurfaceParams> table_points_on(const std::string& line, bool type3) {
  std::vector<SurfaceParams> out;
  const std::string curve = type3 ? "S20ab" : "S30ab";
  const std::string orbit = "S" + line.substr(1);
  for (const auto& r : table1_rows()) {
    if (r.mode != RowMode::Point || r.orbits.size() != 2) continue;
    if (std::find(r.orbits.begin(), r.orbits.end(), curve) == r.orbits.end()) continue;
    if (std::find(r.orbits.begin(), r.orbits.end(), orbit) == r.orbits.end()) continue;
    out.push_back(*r.params);
  }
  return out;
}

CheckRecord intersection_record(const Intersection& in) {
  const std::string tag = in.type3 ? "C20" : "C30";
  CheckRecord c;
  c.id = "pencil.intersection." + in.line + "." + tag;
  c.anchor = "intersection of " + in.line + " and " + tag + " at " + in.point_name;
  LineLocus l = constants::printed_line(in.line);
  const SurfaceParams& p = in.point;
  bool on_line = l.contains(p);
  bool on_curve = static_cast<bool>(in.type3 ? type3_pair(p) : type4_pair(p));
  UPoly pr = in.type3 ? constants::printed_c20() : constants::printed_c30();
  bool on_printed = same(pr.eval(p.mu), p.nu);
  // All intersections: roots of curve(mu) - (m mu + c); divide out the named point
  // and the table parameters lying on both loci.
  UPoly d = derived_curve(in.type3);
  TowerPtr k = common_tower(l.m.tower(), p.tower());
  UPoly rest = d.embed(k) - UPoly(k, {l.c.embed(k), l.m.embed(k)});
  Json found = Json::array();
  std::vector<SurfaceParams> known{p};
  for (const auto& q : table_points_on(in.line, in.type3)) known.push_back(q);
  for (const auto& q : known) {
    TowerPtr kq = common_tower(k, q.tower());
    for (;;) {
      UPoly r = rest.embed(kq);
      if (r.degree() < 1 || !decide_zero(r.eval(q.mu.embed(kq)))) break;
      rest = exact_div(r, UPoly(kq, {-q.mu.embed(kq), Alg(kq, Rational(1))}));
      found.push_back(q.mu.str());
    }
  }
  c.payload = Json{{"params", p.str()},
                   {"on_line", on_line},
                   {"on_curve", on_curve},
                   {"on_printed_quartic", on_printed},
                   {"intersection_roots", found},
                   {"unexplained_factor", rest.str("mu")}};
  bool ok = on_line && on_curve;
  c.status = ok ? Status::Pass : Status::Fail;
  if (!ok) c.payload["message"] = IdentityFailure(in.point_name + " is not on both " + in.line + " and " + tag).what();
  return c;
}

}  // namespace

Report pencil_geometry_check() {
  Report rep;
  rep.add(identity_record(true, true));
  rep.add(identity_record(true, false));
  rep.add(identity_record(false, true));
  rep.add(identity_record(false, false));
  for (const char* l : {"C5+", "C5-", "C10+", "C10-"}) rep.add(line_record(l));
  std::vector<Intersection> pts{
      {"C5+", true, constants::mu5ab(1), "mu5ab+"},       {"C5+", false, constants::mu5ab(1), "mu5ab+"},
      {"C5-", true, constants::mu5ab(-1), "mu5ab-"},      {"C5-", false, constants::mu5ab(-1), "mu5ab-"},
      {"C10+", true, constants::mu20to10(1), "mu20->10+"}, {"C10+", false, constants::mu30to10(1), "mu30->10+"},
      {"C10-", true, constants::mu20to10(-1), "mu20->10-"}, {"C10-", false, constants::mu30to10(-1), "mu30->10-"}};
  for (const auto& in : pts) rep.add(intersection_record(in));
  return rep;
}

}  // namespace dqv
