#include "cycov/covers.hpp"

namespace cycov {

IndexOneCover index_one_cover(const FanPtr& f, const QDivisor& d) {
  check(f != nullptr && d.fan() == f, "divisor lives on the given fan");
  TorsionIndex ti = torsion_index(d);  // NotTorsion propagates
  RootData root = normalized_char_root(f, ti.v, ti.r);
  check(root.d == 1, "index-one cover irreducible");
  check(root.n_prime == ti.r, "cover degree equals the torsion index");
  // pi^* D = (1/r) * div of chi^v upstairs = div of chi^{v/r} in M'
  QDivisor pulled = div_char(root.component_fan, root.psi_exponent);
  check(pulled.is_integral(), "pullback of D integral on the cover");
  check(is_principal(pulled).has_value(), "pullback of D principal");
  return {ti.r, ti.v, std::move(root)};
}

SemistableReport semistable_analyze(const std::vector<Int>& m, const Int& n) {
  if (n < 1) fail("BadInput", "n must be >= 1");
  if (m.empty()) fail("BadInput", "at least one multiplicity required");
  bool any_positive = false;
  for (const Int& mi : m) {
    if (mi < 0) fail("BadInput", "multiplicities must be >= 0");
    if (mi > 0) any_positive = true;
  }
  if (!any_positive) fail("BadInput", "multiplicities must not all vanish");

  SemistableReport rep;
  rep.n = n;
  rep.m = m;
  Int g = n;
  for (const Int& mi : m) g = gcd(g, mi);
  rep.g = g;
  rep.n_prime = n / g;
  rep.component_count = g;

  // Lambda = {lambda : sum lambda_i m_i in nZ}, the dual formulation of the
  // root sublattice of the character m on Z^d.
  Fan ambient;
  ambient.rank = static_cast<int>(m.size());
  for (int i = 0; i < ambient.rank; ++i) {
    IntVec e(ambient.rank);
    e[i] = 1;
    ambient.rays.push_back(std::move(e));
  }
  std::vector<int> cone(ambient.rank);
  for (int i = 0; i < ambient.rank; ++i) cone[i] = i;
  ambient.cones.push_back(std::move(cone));
  rep.lattice_basis = root_sublattice(validate_fan(std::move(ambient)), m, n);

  Int max_m = 0;
  for (const Int& mi : m) max_m = std::max(max_m, mi);
  rep.is_normal = max_m == 1;
  rep.is_smooth = m.size() == 1 && m[0] == 1;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] >= 2) rep.singular_codim1.push_back(static_cast<int>(i));
    for (size_t j = i + 1; j < m.size(); ++j)
      if (m[i] == 1 && m[j] == 1)
        rep.singular_codim2.emplace_back(static_cast<int>(i),
                                         static_cast<int>(j));
  }
  return rep;
}

}  // namespace cycov
