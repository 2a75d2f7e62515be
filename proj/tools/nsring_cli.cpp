// Command line front end: every subcommand maps 1:1 to a library operation
// and emits one OutputEnvelope on standard output. Exit codes: 0 success,
// 1 usage or input error, 2 failed mathematical cross-check.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nsring/envelope.hpp"
#include "nsring/nsring.hpp"

namespace {

using nsring::CheckResult;
using nsring::Int;
using nsring::OutputEnvelope;
using json = nlohmann::ordered_json;

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string token = text.substr(pos, next - pos);
    if (token.empty()) throw nsring::input_error("empty entry in integer list");
    try {
      std::size_t used = 0;
      const long long value = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      throw nsring::input_error("cannot parse integer '" + token + "'");
    }
    pos = next + 1;
  }
  return out;
}

json semigroup_json(const nsring::NumericalSemigroup& H) {
  json j;
  j["generators"] = H.generators();
  j["gaps"] = H.gaps();
  j["genus"] = H.genus();
  j["frobenius"] = H.frobenius();
  j["conductor"] = H.conductor();
  j["multiplicity"] = H.multiplicity();
  return j;
}

struct Options {
  std::string format = "json";
  Int genus_cap = nsring::kDefaultGenusCap;

  std::string gens;
  std::string ideal;
  std::string b_ideal;
  std::string submodule;
  bool submodule_given = false;
  bool nmax_given = false;
  Int nmax = 0;
  Int k = 1;
  Int a = 1;
  Int b = 0;
  Int e0 = 0;
  Int e1 = 0;
  Int d = 1;
  Int max_genus = 6;
  Int max_gens = 3;
};

nsring::NumericalSemigroup semigroup_of(const Options& opt) {
  return nsring::NumericalSemigroup::from_generators(parse_int_list(opt.gens));
}

nsring::MonomialIdeal ideal_of(const Options& opt,
                               const nsring::NumericalSemigroup& H) {
  return nsring::ideal_from_exponents(H, parse_int_list(opt.ideal));
}

OutputEnvelope run_info(const Options& opt) {
  OutputEnvelope env;
  env.command = "info";
  const auto H = semigroup_of(opt);
  env.inputs["gens"] = parse_int_list(opt.gens);
  env.result = semigroup_json(H);
  env.result["symmetric"] = nsring::is_symmetric(H);
  if (!H.is_whole()) {
    const auto pf = nsring::pseudo_frobenius(H);
    env.result["pseudo_frobenius"] = pf;
    env.result["type"] = static_cast<Int>(pf.size());
  }
  return env;
}

OutputEnvelope run_hilbert(const Options& opt) {
  OutputEnvelope env;
  env.command = "hilbert";
  const auto H = semigroup_of(opt);
  const auto I = ideal_of(opt, H);
  const Int r = nsring::reduction_number(I);
  const Int nmax = opt.nmax_given ? opt.nmax : r + 4;
  const auto table = nsring::hilbert_table(I, nmax);
  env.inputs["gens"] = parse_int_list(opt.gens);
  env.inputs["ideal"] = parse_int_list(opt.ideal);
  env.inputs["nmax"] = nmax;
  env.result["exponents"] = I.exponents();
  env.result["reduction_number"] = r;
  env.result["values"] = table.values;
  env.result["stabilization_index"] = table.stabilization_index;
  return env;
}

OutputEnvelope run_coeffs(const Options& opt) {
  OutputEnvelope env;
  env.command = "coeffs";
  const auto H = semigroup_of(opt);
  const auto I = ideal_of(opt, H);
  const auto report = nsring::coefficient_report(I);
  env.inputs["gens"] = parse_int_list(opt.gens);
  env.inputs["ideal"] = parse_int_list(opt.ideal);
  env.result["exponents"] = I.exponents();
  env.result["e0"] = report.e0;
  env.result["e1"] = report.e1;
  env.result["reduction_number"] = report.r;
  env.result["blowup"] = semigroup_json(report.blowup);
  json methods;
  for (const auto& [name, value] : report.methods) methods[name] = value;
  env.result["e1_methods"] = methods;
  env.result["e0_fit"] = report.e0_fit;
  env.result["e0_parameter"] = report.e0_parameter;
  env.checks.push_back(
      {"three_e1_methods_agree", true,
       "fit = sandwich = blowup = " + std::to_string(report.e1)});
  env.checks.push_back(
      {"e0_fit_matches_parameter", true,
       "fit slope = parameter colength = " + std::to_string(report.e0)});
  return env;
}

OutputEnvelope run_power(const Options& opt) {
  OutputEnvelope env;
  env.command = "power";
  const auto H = semigroup_of(opt);
  const auto I = ideal_of(opt, H);
  if (opt.k < 1) throw nsring::input_error("--k must be >= 1");
  const auto base = nsring::coefficient_report(I);
  const auto powered_ideal = nsring::power(I, opt.k);
  const auto powered = nsring::coefficient_report(powered_ideal);
  const auto predicted =
      nsring::predict_power_coefficients(base.e0, base.e1, 1, opt.k);

  env.inputs["gens"] = parse_int_list(opt.gens);
  env.inputs["ideal"] = parse_int_list(opt.ideal);
  env.inputs["k"] = opt.k;
  env.result["base"] = {{"e0", base.e0}, {"e1", base.e1}, {"r", base.r}};
  env.result["power_exponents"] = powered_ideal.exponents();
  env.result["power"] = {{"e0", powered.e0}, {"e1", powered.e1}, {"r", powered.r}};
  env.result["predicted"] = {{"e0", predicted.first}, {"e1", predicted.second}};

  const bool e0_ok =
      powered.e0 == opt.k * base.e0 && powered.e0 == predicted.first;
  const bool e1_ok = powered.e1 == base.e1 && powered.e1 == predicted.second;
  env.checks.push_back({"e0_scales_by_k", e0_ok,
                        "recomputed " + std::to_string(powered.e0) +
                            ", predicted " + std::to_string(predicted.first)});
  env.checks.push_back({"e1_invariant_under_powers", e1_ok,
                        "recomputed " + std::to_string(powered.e1) +
                            ", predicted " + std::to_string(predicted.second)});
  return env;
}

OutputEnvelope run_delta(const Options& opt) {
  OutputEnvelope env;
  env.command = "delta";
  const auto H = semigroup_of(opt);
  const auto report = nsring::delta_set(H, opt.genus_cap);
  env.inputs["gens"] = parse_int_list(opt.gens);
  env.result["delta"] = report.delta;
  env.result["sup"] = report.sup;
  env.result["inf"] = report.inf;
  auto witnesses = json::array();
  for (const auto& [delta, witness] : report.realizations) {
    json wj;
    wj["delta"] = delta;
    wj["oversemigroup_gaps"] = witness.oversemigroup.gaps();
    wj["oversemigroup_generators"] = witness.oversemigroup.generators();
    wj["ideal_exponents"] = witness.ideal_exponents;
    witnesses.push_back(std::move(wj));
  }
  env.result["witnesses"] = std::move(witnesses);
  env.checks.push_back({"delta_is_full_interval", true,
                        "delta = {0..genus}, sup = genus = " +
                            std::to_string(report.sup)});
  return env;
}

OutputEnvelope run_oversemigroups(const Options& opt) {
  OutputEnvelope env;
  env.command = "oversemigroups";
  const auto H = semigroup_of(opt);
  const auto overs = nsring::oversemigroups(H, opt.genus_cap);
  env.inputs["gens"] = parse_int_list(opt.gens);
  env.result["count"] = static_cast<Int>(overs.size());
  auto items = json::array();
  for (const auto& O : overs) items.push_back(semigroup_json(O));
  env.result["items"] = std::move(items);
  return env;
}

OutputEnvelope run_chain(const Options& opt) {
  OutputEnvelope env;
  env.command = "chain";
  const auto H = semigroup_of(opt);
  const auto chain = nsring::gap_chain_ideals(H);
  env.inputs["gens"] = parse_int_list(opt.gens);
  env.result["gaps"] = H.gaps();
  auto steps = json::array();
  bool all_ok = true;
  for (const auto& step : chain) {
    const auto report = nsring::coefficient_report(step.ideal);
    json sj;
    sj["index"] = step.index;
    sj["oversemigroup_gaps"] = step.oversemigroup.gaps();
    sj["ideal_exponents"] = step.ideal.exponents();
    sj["expected_e1"] = step.expected_e1;
    sj["e1"] = report.e1;
    steps.push_back(std::move(sj));
    all_ok = all_ok && report.e1 == step.expected_e1;
  }
  env.result["steps"] = std::move(steps);
  env.checks.push_back({"chain_realizes_descending_e1", all_ok,
                        std::to_string(chain.size()) +
                            " steps with e1 = q + 1 - i"});
  return env;
}

OutputEnvelope run_idealization(const Options& opt) {
  OutputEnvelope env;
  env.command = "idealization";
  const auto H = semigroup_of(opt);
  const auto ring = nsring::make_idealization(H, parse_int_list(opt.b_ideal));
  const auto I = ideal_of(opt, H);
  std::vector<Int> N = opt.submodule_given ? parse_int_list(opt.submodule)
                                           : nsring::module_action(ring, I);
  const auto J = nsring::idealization_ideal(ring, I.exponents(), N);
  const Int nmax =
      opt.nmax_given ? opt.nmax : nsring::default_idealization_nmax(J);
  const auto report = nsring::idealization_report(J, nmax);
  const auto base = nsring::coefficient_report(I);
  const auto bounds = nsring::idealization_delta_bounds(ring);

  env.inputs["gens"] = parse_int_list(opt.gens);
  env.inputs["b_ideal"] = parse_int_list(opt.b_ideal);
  env.inputs["ideal"] = parse_int_list(opt.ideal);
  env.inputs["submodule"] = J.submodule();
  env.inputs["nmax"] = nmax;
  env.result["basis"] = ring.basis();
  env.result["torsion_length"] = ring.torsion_length();
  env.result["table"] = report.table;
  env.result["e0"] = report.e0;
  env.result["e1"] = report.e1;
  env.result["base_e0"] = base.e0;
  env.result["base_e1"] = base.e1;
  env.result["delta_inf"] = bounds.first;
  env.result["delta_sup"] = bounds.second;
  env.checks.push_back(
      {"e1_drops_by_torsion_length", true,
       "fitted e1 = " + std::to_string(report.e1) + " = e1(I) - w = " +
           std::to_string(base.e1) + " - " +
           std::to_string(ring.torsion_length())});
  return env;
}

OutputEnvelope run_pairideal(const Options& opt) {
  OutputEnvelope env;
  env.command = "pairideal";
  const nsring::PairIdeal P(opt.a, opt.b);
  const Int nmax = opt.nmax_given ? opt.nmax : 4;
  const auto report = nsring::pair_ideal_report(P, nmax);
  env.inputs["a"] = opt.a;
  env.inputs["b"] = opt.b;
  env.inputs["nmax"] = nmax;
  env.result["colength"] = P.colength();
  env.result["table"] = report.table;
  env.result["e0"] = report.e0;
  env.result["e1"] = report.e1;
  env.checks.push_back({"fit_matches_closed_form", true,
                        "e0 = 2a = " + std::to_string(report.e0) +
                            ", e1 = a - b = " + std::to_string(report.e1)});
  return env;
}

OutputEnvelope run_predict(const Options& opt) {
  OutputEnvelope env;
  env.command = "predict";
  const auto predicted =
      nsring::predict_power_coefficients(opt.e0, opt.e1, opt.d, opt.k);
  env.inputs["e0"] = opt.e0;
  env.inputs["e1"] = opt.e1;
  env.inputs["d"] = opt.d;
  env.inputs["k"] = opt.k;
  env.result["e0_power"] = predicted.first;
  env.result["e1_power"] = predicted.second;
  return env;
}

OutputEnvelope run_verify(const Options& opt) {
  OutputEnvelope env;
  env.command = "verify";
  nsring::VerifyOptions vopt;
  vopt.max_genus = opt.max_genus;
  vopt.max_gens = opt.max_gens;
  vopt.genus_cap = opt.genus_cap;
  env.inputs["max_genus"] = opt.max_genus;
  env.inputs["max_gens"] = opt.max_gens;
  env.checks = nsring::run_verification(vopt);
  Int passed = 0;
  for (const auto& c : env.checks) passed += c.passed ? 1 : 0;
  env.result["checks_passed"] = passed;
  env.result["checks_failed"] = static_cast<Int>(env.checks.size()) - passed;
  return env;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hilbert coefficient computations for numerical "
               "semigroup rings and their torsion idealizations"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  app.add_option("--genus-cap", opt.genus_cap,
                 "Cap for the exhaustive enumerations")
      ->capture_default_str();

  auto add_gens = [&](CLI::App* sub) {
    sub->add_option("--gens", opt.gens,
                    "Semigroup generators, comma separated")
        ->required();
  };
  auto add_ideal = [&](CLI::App* sub) {
    sub->add_option("--ideal", opt.ideal,
                    "Ideal exponents, comma separated")
        ->required();
  };

  auto* info = app.add_subcommand("info", "Semigroup invariants");
  add_gens(info);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function table");
  add_gens(hilbert);
  add_ideal(hilbert);
  auto* hilbert_nmax = hilbert->add_option(
      "--nmax", opt.nmax, "Last table index (default r + 4)");

  auto* coeffs =
      app.add_subcommand("coeffs", "e0 and e1 by three independent methods");
  add_gens(coeffs);
  add_ideal(coeffs);

  auto* power = app.add_subcommand(
      "power", "Coefficients of I^k, recomputed and predicted");
  add_gens(power);
  add_ideal(power);
  power->add_option("--k", opt.k, "Power")->required();

  auto* delta =
      app.add_subcommand("delta", "The coefficient set with witnesses");
  add_gens(delta);

  auto* overs = app.add_subcommand("oversemigroups",
                                   "All semigroups between H and N");
  add_gens(overs);

  auto* chain = app.add_subcommand(
      "chain", "Gap chain ideals with descending e1 values");
  add_gens(chain);

  auto* idealization = app.add_subcommand(
      "idealization", "Hilbert data of I x N over B x (B/b)");
  add_gens(idealization);
  add_ideal(idealization);
  idealization
      ->add_option("--b-ideal", opt.b_ideal,
                   "Exponents of the defining ideal b")
      ->required();
  auto* submodule_opt = idealization->add_option(
      "--submodule", opt.submodule,
      "Submodule N as basis elements (default: the minimal valid choice)");
  auto* idealization_nmax =
      idealization->add_option("--nmax", opt.nmax, "Last table index");

  auto* pairideal = app.add_subcommand(
      "pairideal", "Hilbert data of t^a V x t^b V over V x V");
  pairideal->add_option("--a", opt.a, "Valuation of the ring component")
      ->required();
  pairideal->add_option("--b", opt.b, "Valuation of the module component")
      ->required();
  auto* pairideal_nmax =
      pairideal->add_option("--nmax", opt.nmax, "Last table index");

  auto* verify = app.add_subcommand("verify", "Run the cross-check suite");
  verify->add_option("--max-genus", opt.max_genus, "Host genus bound")
      ->capture_default_str();
  verify->add_option("--max-gens", opt.max_gens,
                     "Generator bound for the agreement sweep")
      ->capture_default_str();

  auto* predict = app.add_subcommand(
      "predict", "Power coefficient formula, any dimension");
  predict->add_option("--e0", opt.e0, "e0 of the base ideal")->required();
  predict->add_option("--e1", opt.e1, "e1 of the base ideal")->required();
  predict->add_option("--d", opt.d, "Ring dimension")->capture_default_str();
  predict->add_option("--k", opt.k, "Power")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  opt.submodule_given = submodule_opt->count() > 0;
  opt.nmax_given = hilbert_nmax->count() > 0 ||
                   idealization_nmax->count() > 0 ||
                   pairideal_nmax->count() > 0;

  try {
    OutputEnvelope env;
    if (*info) env = run_info(opt);
    else if (*hilbert) env = run_hilbert(opt);
    else if (*coeffs) env = run_coeffs(opt);
    else if (*power) env = run_power(opt);
    else if (*delta) env = run_delta(opt);
    else if (*overs) env = run_oversemigroups(opt);
    else if (*chain) env = run_chain(opt);
    else if (*idealization) env = run_idealization(opt);
    else if (*pairideal) env = run_pairideal(opt);
    else if (*verify) env = run_verify(opt);
    else env = run_predict(opt);

    nsring::Format format = nsring::Format::json;
    if (opt.format == "csv") format = nsring::Format::csv;
    if (opt.format == "plain") format = nsring::Format::plain;
    std::cout << nsring::render(env, format);
    return env.all_checks_passed() ? 0 : 2;
  } catch (const nsring::check_error& e) {
    std::cerr << "cross-check failure: " << e.what() << "\n";
    return 2;
  } catch (const nsring::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
