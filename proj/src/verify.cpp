#include "dqv/classify.hpp"

namespace dqv {

Report verify_all(const RunOptions& opt) {
  Report rep;
  rep.append(table1(opt));
  rep.append(conjugation_check(opt));
  rep.append(constant_ledger_check());
  rep.append(pencil_geometry_check());
  rep.append(quadric_lemma_check());
  rep.append(invariants_check(opt.data_dir));
  rep.append(artin_mumford_suite(opt));
  rep.append(a6_identification(opt.data_dir));
  for (long t : {1L, 2L, -3L}) rep.append(theta_family_check(Rational(t)));
  return rep;
}

}  // namespace dqv
