#include "cycov/report.hpp"

namespace cycov {

Json json_of(const Int& x) {
  static const Int kSafe = (Int(1) << 53) - 1;
  if (abs(x) <= kSafe) return Json(x.get_si());
  return Json(x.get_str());
}

Json json_of(const Rat& x) { return Json(x.str()); }

Json json_of(const IntVec& v) {
  Json a = Json::array();
  for (const Int& e : v) a.push_back(json_of(e));
  return a;
}

Json json_of(const IntMat& m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows(); ++i) a.push_back(json_of(m.row(i)));
  return a;
}

Json json_of(const Fan& f) {
  Json j;
  j["rank"] = f.rank;
  Json rays = Json::array();
  for (const IntVec& r : f.rays) rays.push_back(json_of(r));
  j["rays"] = std::move(rays);
  j["cones"] = f.cones;
  return j;
}

Json json_of(const QDivisor& d) {
  Json a = Json::array();
  for (const Rat& c : d.coeffs()) a.push_back(json_of(c));
  return a;
}

Json json_of(const CycloNum& c) {
  Json j;
  j["level"] = json_of(c.level());
  Json coeffs = Json::array();
  for (const Rat& x : c.coeffs()) coeffs.push_back(json_of(x));
  j["coeffs"] = std::move(coeffs);
  j["text"] = c.str();
  return j;
}

Json json_of(const CycloPoly& p) {
  Json j;
  Json coeffs = Json::array();
  for (int k = 0; k <= p.degree(); ++k) {
    Json c = Json::array();
    for (const Rat& x : p.coeff(k).coeffs()) c.push_back(json_of(x));
    coeffs.push_back(std::move(c));
  }
  j["coeffs"] = std::move(coeffs);
  j["text"] = p.str();
  return j;
}

Json json_of(const ClassGroup& g) {
  Json j;
  j["free_rank"] = json_of(g.free_rank);
  Json t = Json::array();
  for (const Int& s : g.torsion) t.push_back(json_of(s));
  j["torsion"] = std::move(t);
  return j;
}

Json json_of(const RootData& r) {
  Json j;
  j["n"] = json_of(r.n);
  j["v"] = json_of(r.v);
  j["n_prime"] = json_of(r.n_prime);
  j["d"] = json_of(r.d);
  j["sublattice_basis"] = json_of(r.sublattice_basis);
  j["component_fan"] = json_of(*r.component_fan);
  Json ram = Json::array();
  for (const Int& x : r.ramification) ram.push_back(json_of(x));
  j["ramification"] = std::move(ram);
  j["pullback"] = json_of(r.pullback);
  Json eig = Json::array();
  for (const QDivisor& e : r.eigensheaves) eig.push_back(json_of(e));
  j["eigensheaves"] = std::move(eig);
  j["flat"] = r.flat;
  j["toroidal"] = r.toroidal;
  j["psi_exponent"] = json_of(r.psi_exponent);
  return j;
}

Json json_of(const std::vector<DecompRow>& rows) {
  Json a = Json::array();
  for (const DecompRow& r : rows) {
    Json j;
    j["i"] = json_of(r.i);
    j["mode"] = to_string(r.mode);
    j["twist"] = json_of(r.twist);
    j["log_support"] = r.log_support;
    a.push_back(std::move(j));
  }
  return a;
}

Json json_of(const Codim1Model& m) {
  Json j;
  j["n"] = json_of(m.n);
  j["m"] = json_of(m.m);
  j["g"] = json_of(m.g);
  j["n_prime"] = json_of(m.n_prime);
  j["j"] = json_of(m.j);
  j["m_prime"] = json_of(m.m_prime);
  return j;
}

Json json_of(const KummerDecomp& k) {
  Json j;
  j["n"] = json_of(k.n);
  j["d"] = json_of(k.d);
  j["n_prime"] = json_of(k.n_prime);
  j["f"] = json_of(k.f);
  j["g"] = json_of(k.g);
  j["level"] = json_of(k.level);
  j["maximality"] = k.maximality_certified ? "certified" : "asserted";
  Json zs = Json::array();
  for (const CycloNum& z : k.zetas) zs.push_back(json_of(z));
  j["zetas"] = std::move(zs);
  Json fs = Json::array();
  for (const CycloPoly& f : k.factors) fs.push_back(json_of(f));
  j["factors"] = std::move(fs);
  Json ps = Json::array();
  for (const CycloPoly& p : k.idempotents) ps.push_back(json_of(p));
  j["idempotents"] = std::move(ps);
  return j;
}

Json json_of(const IndexOneCover& c) {
  Json j;
  j["r"] = json_of(c.r);
  j["v"] = json_of(c.v);
  j["root"] = json_of(c.root);
  return j;
}

Json json_of(const SemistableReport& r) {
  Json j;
  j["n"] = json_of(r.n);
  Json m = Json::array();
  for (const Int& x : r.m) m.push_back(json_of(x));
  j["m"] = std::move(m);
  j["g"] = json_of(r.g);
  j["n_prime"] = json_of(r.n_prime);
  j["component_count"] = json_of(r.component_count);
  j["lattice_basis"] = json_of(r.lattice_basis);
  j["normal"] = r.is_normal;
  j["smooth"] = r.is_smooth;
  j["singular_codim1"] = r.singular_codim1;
  Json pairs = Json::array();
  for (const auto& [a, b] : r.singular_codim2)
    pairs.push_back(Json::array({a, b}));
  j["singular_codim2"] = std::move(pairs);
  return j;
}

namespace {

Int int_from_json(const Json& j, const char* where) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail("MalformedInput", std::string("bad integer in ") + where);
    }
  }
  fail("MalformedInput", std::string("expected integer in ") + where);
}

}  // namespace

Fan fan_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("rays") ||
      !j.contains("cones"))
    fail("MalformedInput", "fan file needs rank, rays, cones");
  Fan f;
  Int r = int_from_json(j["rank"], "rank");
  if (r < 1 || !r.fits_sint_p())
    fail("MalformedInput", "fan rank out of range");
  f.rank = static_cast<int>(r.get_si());
  if (!j["rays"].is_array())
    fail("MalformedInput", "rays must be an array of integer arrays");
  for (const Json& ray : j["rays"]) {
    if (!ray.is_array())
      fail("MalformedInput", "rays must be an array of integer arrays");
    IntVec v;
    for (const Json& e : ray) v.push_back(int_from_json(e, "ray entry"));
    f.rays.push_back(std::move(v));
  }
  if (!j["cones"].is_array())
    fail("MalformedInput", "cones must be an array of index arrays");
  for (const Json& cone : j["cones"]) {
    if (!cone.is_array())
      fail("MalformedInput", "cones must be an array of index arrays");
    std::vector<int> c;
    for (const Json& e : cone) {
      Int idx = int_from_json(e, "cone entry");
      if (!idx.fits_sint_p()) fail("MalformedInput", "cone index out of range");
      c.push_back(static_cast<int>(idx.get_si()));
    }
    f.cones.push_back(std::move(c));
  }
  return f;
}

std::vector<Rat> divisor_coeffs_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coefficients") ||
      !j["coefficients"].is_array())
    fail("MalformedInput", "divisor file needs a coefficients array");
  std::vector<Rat> out;
  for (const Json& e : j["coefficients"]) {
    if (e.is_number_integer()) {
      out.emplace_back(Int(static_cast<long>(e.get<int64_t>())));
    } else if (e.is_string()) {
      try {
        out.push_back(Rat::parse(e.get<std::string>()));
      } catch (const domain_error&) {
        fail("MalformedInput",
             "bad rational \"" + e.get<std::string>() + "\" in divisor file");
      }
    } else {
      fail("MalformedInput", "divisor coefficients must be strings like "
                             "\"1/2\" (or integers)");
    }
  }
  return out;
}

}  // namespace cycov
