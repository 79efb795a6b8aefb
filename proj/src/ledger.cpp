#include <algorithm>

#include "dqv/classify.hpp"
#include "dqv/fields.hpp"

namespace dqv {

namespace {

struct Ledger {
  Report rep;
  void add(const std::string& id, const std::string& anchor, bool ok, const std::string& constant,
           const std::string& relation, Json extra = Json::object()) {
    CheckRecord c;
    c.id = "ledger." + id;
    c.anchor = anchor;
    c.status = ok ? Status::Pass : Status::Fail;
    c.payload = std::move(extra);
    c.payload["constant"] = constant;
    c.payload["relation"] = relation;
    if (!ok) c.payload["message"] = LedgerMismatch("{" + constant + ", " + relation + "}").what();
    rep.add(std::move(c));
  }
  // Runs a check body; an exception counts as a mismatch carrying the error text.
  template <class F>
  void guard(const std::string& id, const std::string& anchor, const std::string& constant,
             const std::string& relation, F body) {
    try {
      Json extra = Json::object();
      bool ok = body(extra);
      add(id, anchor, ok, constant, relation, std::move(extra));
    } catch (const ZeroDivisor&) {
      throw;
    } catch (const Error& e) {
      add(id, anchor, false, constant, relation, Json{{"error", e.what()}});
    }
  }
};

bool zero(const Alg& x) { return decide_zero(x); }

bool squarefree(const UPoly& f) { return gcd(f, f.derivative()).degree() == 0; }

std::string sgn(int s) { return s > 0 ? "+" : "-"; }

const RowSpec& row(int i) { return table1_rows()[static_cast<std::size_t>(i - 1)]; }

bool listed(int row_index, const std::string& name) {
  for (const auto& e : row(row_index).non_odp)
    if (e.name == name) return true;
  return false;
}

// Row whose printed pair carries this name.
int row_of_pair(const std::string& name) {
  for (const auto& r : table1_rows())
    if (r.pair == name) return r.index;
  throw ConfigError("no row for pair " + name);
}

bool on_curve(const SurfaceParams& p, bool type3) {
  return static_cast<bool>(type3 ? type3_pair(p) : type4_pair(p));
}

bool same_params(const SurfaceParams& a, const SurfaceParams& b) {
  TowerPtr k = common_tower(a.tower(), b.tower());
  return zero(a.mu.embed(k) - b.mu.embed(k)) && zero(a.nu.embed(k) - b.nu.embed(k));
}

SurfaceParams from_pair(const Alg& s, const Alg& p, bool type3) {
  return type3 ? SurfaceParams{type3_mu(s), type3_nu(s, p)} : SurfaceParams{type4_mu(s), type4_nu(s, p)};
}

Alg conic(const Alg& a, const Alg& b, bool type3) {
  return type3 ? a * a + b * b + Alg(3L) : Alg(2L) * (a * a + b * b) + Alg(1L);
}

}  // namespace

Report constant_ledger_check() {
  Ledger L;

  // --- quadratic parameter constants on the lines
  for (int s : {1, -1}) {
    const std::string line = "C5" + sgn(s);
    const std::string name = "mu5,1/2" + sgn(s);
    L.guard("mu5_quadratic" + sgn(s), "ledger quadratic for " + name, name, "894825 mu^2 + ... = 0, two roots",
            [&](Json& x) {
              UPoly q = constants::mu5_quadratic(s);
              x["polynomial"] = q.str("mu");
              bool ok = squarefree(q);
              // (d) both roots, with nu from the line, sit on the line and in the row's list
              auto br = evaluate_with_splitting<bool>([&](SplitContext& ctx) {
                UPoly m = q.monic();
                TowerPtr t = ctx.adjoin(m.ring(), "m", m.coeffs());
                Alg mu = Alg::gen(t, "m");
                LineLocus l = constants::printed_line(line);
                SurfaceParams p{mu, l.m * mu + l.c};
                return zero(q.embed(t).eval(mu)) && l.contains(p) && !on_curve(p, true) && !on_curve(p, false);
              });
              x["branches"] = br.size();
              for (const auto& b : br) ok = ok && b.value;
              x["listed_in_row"] = s > 0 ? 1 : 2;
              return ok && listed(s > 0 ? 1 : 2, name);
            });
    L.guard("mu5ab" + sgn(s), "ledger point mu5ab" + sgn(s), "mu5ab" + sgn(s),
            "on " + line + ", C20 and C30; listed in the row of " + line, [&](Json& x) {
              SurfaceParams p = constants::mu5ab(s);
              x["params"] = p.str();
              bool ok = constants::printed_line(line).contains(p) && on_curve(p, true) && on_curve(p, false);
              return ok && listed(s > 0 ? 1 : 2, "mu5ab" + sgn(s));
            });
  }
  for (int s : {1, -1}) {
    const std::string line = "C10" + sgn(s);
    const std::string name = "mu10,1/2" + sgn(s);
    const int r = s > 0 ? 4 : 5;
    L.guard("mu10_quadratic" + sgn(s), "ledger quadratic for " + name, name, "216090 mu^2 + ... = 0, two roots",
            [&](Json& x) {
              UPoly q = constants::mu10_quadratic(s);
              x["polynomial"] = q.str("mu");
              bool ok = squarefree(q);
              auto br = evaluate_with_splitting<bool>([&](SplitContext& ctx) {
                UPoly m = q.monic();
                TowerPtr t = ctx.adjoin(m.ring(), "m", m.coeffs());
                Alg mu = Alg::gen(t, "m");
                LineLocus l = constants::printed_line(line);
                SurfaceParams p{mu, l.m * mu + l.c};
                return zero(q.embed(t).eval(mu)) && l.contains(p) && !on_curve(p, true) && !on_curve(p, false);
              });
              x["branches"] = br.size();
              for (const auto& b : br) ok = ok && b.value;
              return ok && listed(r, name);
            });
    L.guard("mu20to10" + sgn(s), "ledger point mu20->10" + sgn(s), "mu20->10" + sgn(s),
            "on " + line + " and C20, not on C30; listed in the row of " + line, [&](Json& x) {
              SurfaceParams p = constants::mu20to10(s);
              x["params"] = p.str();
              return constants::printed_line(line).contains(p) && on_curve(p, true) && !on_curve(p, false) &&
                     listed(r, "mu20->10" + sgn(s));
            });
    L.guard("mu30to10" + sgn(s), "ledger point mu30->10" + sgn(s), "mu30->10" + sgn(s),
            "on " + line + " and C30, not on C20; listed in the row of " + line, [&](Json& x) {
              SurfaceParams p = constants::mu30to10(s);
              x["params"] = p.str();
              return constants::printed_line(line).contains(p) && on_curve(p, false) && !on_curve(p, true) &&
                     listed(r, "mu30->10" + sgn(s));
            });
  }

  // --- octics and the partner expressions
  for (bool type3 : {true, false}) {
    const std::string tag = type3 ? "20" : "30";
    const TowerPtr k = type3 ? fields::q_a20() : fields::q_a30();
    UPoly oct = type3 ? constants::octic20() : constants::octic30();
    auto b_of = [&](const Alg& a) { return type3 ? constants::b20(a) : constants::b30(a); };
    Alg a = Alg::gen(k, "a");
    L.guard("octic" + tag, "ledger octic for a" + tag + ",i", "a" + tag + ",i", "octic squarefree, 8 distinct roots",
            [&](Json& x) {
              x["polynomial"] = oct.str("a");
              return oct.degree() == 8 && squarefree(oct);
            });
    L.guard("b" + tag, "ledger partner b" + tag + ",i", "b" + tag + ",i",
            "b(a) is a root of the octic, b(a) != a, b(b(a)) = a", [&](Json& x) {
              Alg b = b_of(a);
              x["b"] = b.str();
              bool root = zero(oct.embed(k).eval(b));
              bool distinct = !zero(b - a);
              bool involution = zero(b_of(b) - a);
              x["root"] = root, x["distinct"] = distinct, x["involution"] = involution;
              return root && distinct && involution;
            });
    L.guard("conic" + tag, "ledger conic for (a" + tag + ",i, b" + tag + ",i)", "(a" + tag + ",i, b" + tag + ",i)",
            type3 ? "a^2 + b^2 + 3 = 0" : "2a^2 + 2b^2 + 1 = 0", [&](Json&) { return zero(conic(a, b_of(a), type3)); });
    L.guard("mu" + tag + "_i", "ledger parameters (mu" + tag + ",i, nu" + tag + ",i)",
            "(mu" + tag + ",i, nu" + tag + ",i)", "on C" + tag + "; listed in its curve row", [&](Json& x) {
              Alg b = b_of(a);
              SurfaceParams p = shape_to_params({type3 ? ShapeTag::Type3 : ShapeTag::Type4, a, b});
              SurfaceParams q = from_pair(a + b, a * b, type3);
              x["params"] = p.str();
              const int r = type3 ? 12 : 20;
              return same_params(p, q) && on_curve(p, type3) && listed(r, "mu" + tag + ",i");
            });
  }

  // --- explicit pair over Q(i, sqrt 95)
  for (int s : {1, -1}) {
    const std::string name = "a20" + sgn(s);
    L.guard(name, "ledger explicit pair a20" + sgn(s) + ", b20" + sgn(s), "(a20" + sgn(s) + ", b20" + sgn(s) + ")",
            "a^2 + b^2 + 3 = 0; derived (mu, nu) equals its table row", [&](Json& x) {
              auto [a, b] = constants::a20_explicit(s);
              Alg c = conic(a, b, true);
              x["a^2+b^2+3"] = c.str();
              SurfaceParams p = shape_to_params({ShapeTag::Type3, a, b});
              const RowSpec& rw = row(row_of_pair(name));
              x["row"] = rw.index;
              x["derived_params"] = p.str();
              bool on_line = constants::printed_line(s > 0 ? "C5+" : "C5-").contains(p);
              return zero(c) && !zero(a - b) && on_line && same_params(p, *rw.params);
            });
  }

  // --- pair quadratics
  for (const char* nm : {"a20,1+", "a20,2+", "a20,1-", "a20,2-", "a30,1+", "a30,2+", "a30,1-", "a30,2-", "a30+",
                         "a30-"}) {
    const std::string name = nm;
    const bool type3 = constants::pair_is_type3(name);
    L.guard("pair." + name, "ledger pair quadratic " + name, "(" + name + ", b)",
            std::string(type3 ? "a^2 + b^2 + 3 = 0" : "2a^2 + 2b^2 + 1 = 0") +
                "; derived (mu, nu) equals its table row and lies on its line",
            [&](Json& x) {
              UPoly q = constants::pair_quadratic(name);
              x["polynomial"] = q.str("x");
              Alg inv = q.lc().inverse();
              Alg sum = -q.coeff(1) * inv, prod = q.coeff(0) * inv;
              // a^2 + b^2 = s^2 - 2p
              Alg sq = sum * sum - Alg(2L) * prod;
              Alg c = type3 ? sq + Alg(3L) : Alg(2L) * sq + Alg(1L);
              bool distinct = !zero(sum * sum - Alg(4L) * prod);
              SurfaceParams p = from_pair(sum, prod, type3);
              const RowSpec& rw = row(row_of_pair(name));
              x["row"] = rw.index;
              x["derived_params"] = p.str();
              std::string other;
              for (const auto& o : rw.orbits)
                if (o.find("ab") == std::string::npos) other = o;
              const std::string line = "C" + other.substr(1);
              bool on_line = constants::printed_line(line).contains(p);
              x["line"] = line;
              return zero(c) && distinct && on_line && on_curve(p, type3) && same_params(p, *rw.params);
            });
  }
  return L.rep;
}

}  // namespace dqv
