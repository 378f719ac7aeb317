#include "cycov/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cycov/report.hpp"

namespace cycov {

namespace {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("MalformedInput", "cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    fail("MalformedInput", "bad JSON in " + path + ": " + e.what());
  }
  return j;
}

FanPtr load_fan(const std::string& path) {
  return validate_fan(fan_from_json(load_json_file(path)));
}

QDivisor load_divisor(const std::string& path, const FanPtr& fan) {
  return QDivisor(fan, divisor_coeffs_from_json(load_json_file(path)));
}

IntVec parse_int_list(const std::string& s) {
  IntVec out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.emplace_back(item);
    } catch (const std::invalid_argument&) {
      fail("MalformedInput", "bad integer \"" + item + "\" in list \"" + s +
                                 "\"");
    }
  }
  if (out.empty()) fail("MalformedInput", "empty integer list");
  return out;
}

std::vector<int> parse_index_list(const std::string& s) {
  std::vector<int> out;
  for (const Int& x : parse_int_list(s)) {
    if (!x.fits_sint_p()) fail("MalformedInput", "index out of range");
    out.push_back(static_cast<int>(x.get_si()));
  }
  return out;
}

Rat parse_rat(const std::string& s) {
  try {
    return Rat::parse(s);
  } catch (const domain_error& e) {
    fail("MalformedInput", e.what());
  }
}

Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    fail("MalformedInput", "bad integer \"" + s + "\"");
  }
}

// smallest N with mu_n contained in Q(zeta_N)
Int minimal_level(const Int& n) {
  for (Int cand = 1; cand <= n; ++cand) {
    if (divides(n, cand)) return cand;
    if (mpz_odd_p(cand.get_mpz_t()) && divides(n, 2 * cand)) return cand;
  }
  return n;
}

DecompMode parse_mode(const std::string& s) {
  if (s == "forms") return DecompMode::Forms;
  if (s == "forms-log") return DecompMode::FormsLog;
  if (s == "der") return DecompMode::Derivations;
  if (s == "der-log") return DecompMode::DerivationsLog;
  fail("MalformedInput",
       "mode must be one of forms, forms-log, der, der-log");
}

struct Options {
  std::string fan_path, divisor_path, output_path;
  std::string v_list, m_list, sigma_list, mode, f_value;
  std::string n_value, m_scalar, level_value;
};

void emit(const Json& report, const std::string& output_path,
          std::ostream& out) {
  if (output_path.empty()) {
    out << report.dump(2) << "\n";
    return;
  }
  std::ofstream f(output_path);
  if (!f) fail("MalformedInput", "cannot open output file: " + output_path);
  f << report.dump(2) << "\n";
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact computations with normalized cyclic covers of toric "
               "varieties"};
  app.require_subcommand(1);
  Options o;

  auto add_fan = [&](CLI::App* c) {
    c->add_option("--fan", o.fan_path, "fan file (JSON)")->required();
  };
  auto add_out = [&](CLI::App* c) {
    c->add_option("--output", o.output_path, "write the report here instead "
                                             "of standard output");
  };

  CLI::App* validate = app.add_subcommand("validate", "check fan invariants");
  add_fan(validate);
  add_out(validate);

  CLI::App* divchar = app.add_subcommand(
      "div-char", "divisor of a torus character");
  add_fan(divchar);
  divchar->add_option("--v", o.v_list, "character, comma-separated integers")
      ->required();
  add_out(divchar);

  CLI::App* classgroup =
      app.add_subcommand("class-group", "divisor class group of the fan");
  add_fan(classgroup);
  add_out(classgroup);

  CLI::App* root = app.add_subcommand(
      "root", "normalized n-th root of a character");
  add_fan(root);
  root->add_option("--v", o.v_list, "character")->required();
  root->add_option("--n", o.n_value, "root degree")->required();
  add_out(root);

  CLI::App* ramify =
      app.add_subcommand("ramify", "ramification indices over each ray");
  add_fan(ramify);
  ramify->add_option("--v", o.v_list, "character")->required();
  ramify->add_option("--n", o.n_value, "root degree")->required();
  add_out(ramify);

  CLI::App* eigensheaves = app.add_subcommand(
      "eigensheaves", "eigensheaf divisors floor(i*D) and flatness");
  add_fan(eigensheaves);
  eigensheaves->add_option("--v", o.v_list, "character")->required();
  eigensheaves->add_option("--n", o.n_value, "root degree")->required();
  add_out(eigensheaves);

  CLI::App* diffdecomp = app.add_subcommand(
      "diff-decomp", "differential / derivation eigenspace decomposition");
  add_fan(diffdecomp);
  diffdecomp->add_option("--divisor", o.divisor_path, "divisor file (JSON)")
      ->required();
  diffdecomp->add_option("--n", o.n_value, "root degree")->required();
  diffdecomp
      ->add_option("--mode", o.mode, "forms | forms-log | der | der-log")
      ->required();
  diffdecomp->add_option("--sigma", o.sigma_list,
                         "log divisor as ray indices (default: fractional "
                         "support)");
  add_out(diffdecomp);

  CLI::App* codim1 = app.add_subcommand(
      "codim1", "codimension-one local model of the root of u*f^m");
  codim1->add_option("--n", o.n_value, "root degree")->required();
  codim1->add_option("--m", o.m_scalar, "order of the function along the "
                                        "divisor")->required();
  add_out(codim1);

  CLI::App* kummer = app.add_subcommand(
      "kummer", "factorization of T^n - f over a cyclotomic field");
  kummer->add_option("--f", o.f_value, "rational f, e.g. -4 or 8/27")
      ->required();
  kummer->add_option("--n", o.n_value, "exponent")->required();
  kummer->add_option("--level", o.level_value,
                     "cyclotomic level N (default: minimal)");
  add_out(kummer);

  CLI::App* capelli = app.add_subcommand(
      "capelli", "irreducibility of T^n - f over Q");
  capelli->add_option("--f", o.f_value, "rational f")->required();
  capelli->add_option("--n", o.n_value, "exponent")->required();
  add_out(capelli);

  CLI::App* indexcover = app.add_subcommand(
      "index-cover", "index-one cover of a torsion divisor");
  add_fan(indexcover);
  indexcover->add_option("--divisor", o.divisor_path, "divisor file (JSON)")
      ->required();
  add_out(indexcover);

  CLI::App* semistable = app.add_subcommand(
      "semistable", "local model of the n-th root of a monomial");
  semistable
      ->add_option("--m", o.m_list, "multiplicities, comma-separated")
      ->required();
  semistable->add_option("--n", o.n_value, "root degree")->required();
  add_out(semistable);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    Json report;
    report["schema_version"] = "1";
    report["error"] = {{"name", "MalformedInput"}, {"detail", e.what()}};
    err << report.dump(2) << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  Json report;
  report["schema_version"] = "1";
  report["command"] = command;

  try {
    Json result;
    if (sub == validate) {
      FanPtr f = load_fan(o.fan_path);
      result = json_of(*f);
      result["valid"] = true;
    } else if (sub == divchar) {
      FanPtr f = load_fan(o.fan_path);
      result["coefficients"] = json_of(div_char(f, parse_int_list(o.v_list)));
    } else if (sub == classgroup) {
      result = json_of(class_group(load_fan(o.fan_path)));
    } else if (sub == root) {
      FanPtr f = load_fan(o.fan_path);
      result = json_of(
          normalized_char_root(f, parse_int_list(o.v_list),
                               parse_int(o.n_value)));
    } else if (sub == ramify) {
      FanPtr f = load_fan(o.fan_path);
      CharVec v = parse_int_list(o.v_list);
      Int n = parse_int(o.n_value);
      result["n"] = json_of(n);
      Json rows = Json::array();
      for (const IntVec& e : f->rays) {
        Int ord = pairing(v, e);
        Json row;
        row["ray"] = json_of(e);
        row["ord"] = json_of(ord);
        row["ramification"] = json_of(ramification_index(ord, n));
        rows.push_back(std::move(row));
      }
      result["rays"] = std::move(rows);
    } else if (sub == eigensheaves) {
      FanPtr f = load_fan(o.fan_path);
      RootData rd = normalized_char_root(f, parse_int_list(o.v_list),
                                         parse_int(o.n_value));
      Json eig = Json::array(), cart = Json::array();
      for (const QDivisor& e : rd.eigensheaves) {
        eig.push_back(json_of(e));
        cart.push_back(is_cartier(e));
      }
      result["eigensheaves"] = std::move(eig);
      result["cartier"] = std::move(cart);
      result["flat"] = rd.flat;
    } else if (sub == diffdecomp) {
      FanPtr f = load_fan(o.fan_path);
      QDivisor d = load_divisor(o.divisor_path, f);
      std::vector<int> sigma = o.sigma_list.empty()
                                   ? frac_support(d)
                                   : parse_index_list(o.sigma_list);
      auto rows = differential_decomposition(d, sigma, parse_int(o.n_value),
                                             parse_mode(o.mode));
      result["mode"] = to_string(parse_mode(o.mode));
      result["sigma"] = sigma;
      result["rows"] = json_of(rows);
    } else if (sub == codim1) {
      Codim1Model model =
          codim1_model(parse_int(o.n_value), parse_int(o.m_scalar));
      result = json_of(model);
      Json table = Json::array();
      for (Int i = 0; i < model.n; ++i) {
        Codim1Coords c = codim1_decompose(model, i);
        Json row;
        row["i"] = json_of(i);
        row["alpha"] = json_of(c.alpha);
        row["beta"] = json_of(c.beta);
        row["gamma"] = json_of(c.gamma);
        table.push_back(std::move(row));
      }
      result["table"] = std::move(table);
    } else if (sub == kummer) {
      Rat f = parse_rat(o.f_value);
      Int n = parse_int(o.n_value);
      Int level = o.level_value.empty()
                      ? minimal_level(max_root_divisor_Q(f, n).d)
                      : parse_int(o.level_value);
      result = json_of(kummer_decompose(f, n, level));
    } else if (sub == capelli) {
      Rat f = parse_rat(o.f_value);
      Int n = parse_int(o.n_value);
      CapelliResult cr = capelli_check(f, n);
      result["f"] = json_of(f);
      result["n"] = json_of(n);
      result["irreducible"] = cr.irreducible;
      result["reason"] = cr.reason;
    } else if (sub == indexcover) {
      FanPtr f = load_fan(o.fan_path);
      result = json_of(index_one_cover(f, load_divisor(o.divisor_path, f)));
    } else if (sub == semistable) {
      std::vector<Int> m = parse_int_list(o.m_list);
      result = json_of(semistable_analyze(m, parse_int(o.n_value)));
    } else {
      fail("MalformedInput", "unknown command");
    }
    report["result"] = std::move(result);
  } catch (const domain_error& e) {
    report["error"] = {{"name", e.name()}, {"detail", e.what()}};
    int code = e.name() == "MalformedInput" ? 2 : 1;
    emit(report, o.output_path, code == 2 ? err : out);
    return code;
  }

  emit(report, o.output_path, out);
  return 0;
}

}  // namespace cycov
