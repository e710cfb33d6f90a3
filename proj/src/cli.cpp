#include "projline/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "projline/report.hpp"
#include "projline/theorem.hpp"

namespace projline::cli
{

using nlohmann::json;

namespace
{

std::uint64_t parse_uint(std::string const &s, char const *what)
{
  std::uint64_t v = 0;
  auto const *end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + s + "'");
  return v;
}

std::vector<std::string> split(std::string const &s, char sep)
{
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep))
    out.push_back(item);
  if (!s.empty() && s.back() == sep)
    out.emplace_back();
  return out;
}

json envelope(RunConfig const &config, json results)
{
  return {{"tool_version", kToolVersion},
          {"config", to_json(config)},
          {"results", std::move(results)}};
}

void emit(RunConfig const &config, json const &doc, std::ostream &out)
{
  std::string const text = doc.dump(2) + "\n";
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(config.output, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot open output file " + config.output);
  f << text;
}

std::uint64_t pgl2_order(Field const &F)
{
  std::uint64_t const q = F.q();
  return q * (q + 1) * (q - 1);
}

int cmd_verify(RunConfig const &c, ProjectiveLine const &line, json &results,
               std::ostream &err)
{
  OSet const O = parse_o_spec(line.field(), c.o_spec);
  VerifyOptions opts;
  opts.method = c.method;
  opts.search = {c.node_budget, c.workers};
  auto const rep = verify_theorem(line, O, opts);
  results = {{"field", report::field(line.field())},
             {"o", report::oset(O)},
             {"theorem", report::theorem(line, rep, c.timing)}};

  if (rep.hypotheses_violated)
    for (auto const &v : rep.hypotheses.violations())
      err << "warning: hypothesis violated: " << v << "\n";
  for (auto const &a : rep.arrows)
    err << "  [" << to_string(a.status) << (a.asserted ? "" : ", not asserted")
        << "] " << a.name << (a.detail.empty() ? "" : ": " + a.detail) << "\n";
  if (rep.group_order)
    err << "O-preserving group order " << *rep.group_order << "\n";

  bool const failed = std::any_of(rep.arrows.begin(), rep.arrows.end(), [](Arrow const &a) {
    return a.asserted && a.status == ArrowStatus::fail;
  });
  if (failed)
    return kAssertionFailure;
  return rep.any_asserted_infeasible() ? kInfeasible : kPass;
}

int cmd_orbits(RunConfig const &c, ProjectiveLine const &line, json &results,
               std::ostream &err)
{
  Field const &F = line.field();
  PermGroup const g = c.group == "pgl2" ? pgl2_group(line) : pgammal2_group(line);
  auto const part = quadruple_orbits(line, g);
  unsigned const degree = transitivity_degree(line, g, 4);
  json gal = json::array();
  for (auto const &o : galois_orbits(F))
    gal.push_back(report::elems(F, o));
  results = {{"field", report::field(F)},
             {"group", c.group},
             {"group_order", g.order()},
             {"orbits", report::orbits(line, part)},
             {"galois_orbits", std::move(gal)},
             {"matches_galois_orbits", matches_galois_orbits(F, part)},
             {"transitivity_degree", degree}};
  err << c.group << " order " << g.order() << ": " << part.classes.size()
      << " quadruple orbits, transitivity degree " << degree << "\n";
  if (c.group == "pgammal2" && !matches_galois_orbits(F, part))
    return kAssertionFailure;
  return kPass;
}

int cmd_chains(RunConfig const &c, ProjectiveLine const &line, json &results,
               std::ostream &err)
{
  Field const &F = line.field();
  if (!c.subfield)
    throw std::invalid_argument("chains needs --k");
  Subfield const K = F.subfield(*c.subfield);
  auto const cs = all_chains(line, K);
  auto const semi = all_chains_semilinear(line, K);
  bool same_sweep = cs.size() == semi.size();
  for (std::size_t i = 0; same_sweep && i < cs.size(); ++i)
    same_sweep = cs.chains()[i].points == semi.chains()[i].points;
  auto const cert = chains_through_infinity_equal_affine_lines(line, cs);

  json only_chains = json::array(), only_lines = json::array();
  for (auto const &s : cert.only_chains)
    only_chains.push_back(report::points(line, s));
  for (auto const &s : cert.only_lines)
    only_lines.push_back(report::points(line, s));
  results = {{"field", report::field(F)},
             {"subfield", {{"degree", K.degree}, {"elements", report::elems(F, K.elements)}}},
             {"chain_count", cs.size()},
             {"chains_through_infinity", cert.chains_through_infinity},
             {"affine_line_count", cert.affine_lines},
             {"chains_through_infinity_equal_affine_lines", cert.equal},
             {"only_chains", std::move(only_chains)},
             {"only_lines", std::move(only_lines)},
             {"triples_covered_once", cs.triples_covered_once()},
             {"pgl2_sweep_equals_pgammal2_sweep", same_sweep},
             {"chains", report::chains(line, cs)}};
  err << cs.size() << " chains, " << cert.chains_through_infinity
      << " through infinity, " << cert.affine_lines << " projective affine lines\n";
  bool const ok = cert.equal && same_sweep && cs.triples_covered_once();
  return ok ? kPass : kAssertionFailure;
}

int cmd_search(RunConfig const &c, ProjectiveLine const &line, json &results,
               std::ostream &err)
{
  Field const &F = line.field();
  OSet const O = parse_o_spec(F, c.o_spec);
  auto const frob = frobenius_perms(line);
  results = {{"field", report::field(F)},
             {"o", report::oset(O)},
             {"hypotheses", report::hypotheses(O.hypotheses())}};
  SearchReport rep;
  try {
    rep = o_preserving_stabilizer(line, O, c.method, {c.node_budget, c.workers});
  } catch (BudgetExceeded const &e) {
    results["error"] = e.what();
    results["partial"] = report::search(e.partial(), c.timing);
    err << "search incomplete: " << e.what() << "\n";
    return kInfeasible;
  }
  auto const &stab = rep.stabilizer;
  bool const equals_aut = stab == frob;
  bool const contains_aut = std::includes(stab.begin(), stab.end(), frob.begin(), frob.end());
  results["search"] = report::search(rep, c.timing);
  results["group_order"] = pgl2_order(F) * stab.size();
  results["stabilizer_equals_aut"] = equals_aut;
  results["stabilizer_contains_aut"] = contains_aut;
  err << stab.size() << " survivors fixing 0, 1, inf after " << rep.nodes
      << " nodes; group order " << pgl2_order(F) * stab.size() << "\n";
  if (O.hypotheses().hold() && !equals_aut)
    return kAssertionFailure;
  if (O.aut_invariant() && !contains_aut)
    return kAssertionFailure;
  return kPass;
}

int cmd_classify(RunConfig const &c, ProjectiveLine const &line, json &results,
                 std::ostream &err)
{
  Field const &F = line.field();
  if (c.perm.size() != line.size())
    throw std::invalid_argument("--perm needs " + std::to_string(line.size()) +
                                " entries");
  Perm const f(c.perm);
  auto const cls = classify_automorphism(line, f);
  results = {{"field", report::field(F)},
             {"perm", report::perm(f)},
             {"classification", report::classification(F, cls)}};
  if (cls.automorphism)
    err << "Frobenius power " << *cls.automorphism << "\n";
  else
    err << "not an automorphism: " << cls.violated << "\n";
  return kPass;
}

int cmd_hua_scan(RunConfig const &c, ProjectiveLine const &line, json &results,
                 std::ostream &err)
{
  Field const &F = line.field();
  std::vector<HuaVariant> variants;
  if (c.variant == "A" || c.variant == "both")
    variants.push_back(HuaVariant::A);
  if (c.variant == "B" || c.variant == "both")
    variants.push_back(HuaVariant::B);
  if (variants.empty())
    throw std::invalid_argument("--variant must be A, B or both");
  json scans = json::array();
  for (auto v : variants) {
    auto const s = hua_scan(F, v);
    scans.push_back(report::hua_scan(F, s));
    err << "variant " << to_string(v) << ": " << s.equal << "/" << s.valid
        << " valid pairs equal a^2 b^2\n";
  }
  results = {{"field", report::field(F)}, {"scans", std::move(scans)}};
  return kPass;
}

} // namespace

json to_json(RunConfig const &c)
{
  json j = {{"command", c.command},
            {"field", {c.p, c.k}},
            {"o", c.o_spec},
            {"method", to_string(c.method)},
            {"node_budget", c.node_budget},
            {"seed", c.seed},
            {"output", c.output},
            {"perm", c.perm},
            {"group", c.group},
            {"variant", c.variant},
            {"workers", c.workers},
            {"timing", c.timing}};
  j["k"] = c.subfield ? json(*c.subfield) : json();
  return j;
}

RunConfig config_from_json(json const &j)
{
  try {
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    auto const &f = j.at("field");
    if (!f.is_array() || f.size() != 2)
      throw std::invalid_argument("field must be [p, k]");
    c.p = f[0].get<unsigned>();
    c.k = f[1].get<unsigned>();
    c.o_spec = j.at("o").get<std::string>();
    if (!j.at("k").is_null())
      c.subfield = j.at("k").get<unsigned>();
    c.method = parse_search_method(j.at("method").get<std::string>());
    c.node_budget = j.at("node_budget").get<std::uint64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.output = j.at("output").get<std::string>();
    c.perm = j.at("perm").get<std::vector<std::uint32_t>>();
    c.group = j.at("group").get<std::string>();
    c.variant = j.at("variant").get<std::string>();
    c.workers = j.at("workers").get<unsigned>();
    c.timing = j.at("timing").get<bool>();
    return c;
  } catch (json::exception const &e) {
    throw std::invalid_argument(std::string("bad config: ") + e.what());
  }
}

Elem parse_elem(Field const &F, std::string const &s)
{
  if (s.find(':') == std::string::npos) {
    auto const v = parse_uint(s, "element");
    if (v >= F.q())
      throw std::invalid_argument("element index " + s + " outside the field");
    return Elem{static_cast<std::uint32_t>(v)};
  }
  auto const parts = split(s, ':');
  if (parts.size() > F.k())
    throw std::invalid_argument("too many coefficients in '" + s + "'");
  std::vector<unsigned> coeffs(F.k(), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto const v = parse_uint(parts[i], "coefficient");
    if (v >= F.p())
      throw std::invalid_argument("coefficient " + parts[i] + " not reduced mod p");
    coeffs[i] = static_cast<unsigned>(v);
  }
  return F.from_coeffs(coeffs);
}

OSet parse_o_spec(Field const &F, std::string const &spec)
{
  if (spec == "neg-one")
    return OSet::neg_one(F);
  if (spec.rfind("subfield:", 0) == 0)
    return OSet::subfield_minus_01(
        F, static_cast<unsigned>(parse_uint(spec.substr(9), "subfield degree")));
  if (spec.rfind("galois-orbit-of:", 0) == 0) {
    std::string const arg = spec.substr(16);
    Elem const e = arg == "generator" ? F.primitive_element() : parse_elem(F, arg);
    return OSet::galois_orbit_of(F, e);
  }
  if (spec.empty())
    throw std::invalid_argument("missing --o");
  std::vector<Elem> values;
  for (auto const &item : split(spec, ','))
    values.push_back(parse_elem(F, item));
  return OSet::make(F, std::move(values));
}

int run(RunConfig const &config, std::ostream &out, std::ostream &err)
{
  json results;
  int code = kPass;
  try {
    ProjectiveLine const line(Field::make(config.p, config.k));
    if (config.command == "verify")
      code = cmd_verify(config, line, results, err);
    else if (config.command == "orbits")
      code = cmd_orbits(config, line, results, err);
    else if (config.command == "chains")
      code = cmd_chains(config, line, results, err);
    else if (config.command == "search")
      code = cmd_search(config, line, results, err);
    else if (config.command == "classify")
      code = cmd_classify(config, line, results, err);
    else if (config.command == "hua-scan")
      code = cmd_hua_scan(config, line, results, err);
    else
      throw std::invalid_argument("unknown command '" + config.command + "'");
  } catch (SearchInfeasible const &e) {
    results["error"] = e.what();
    code = kInfeasible;
  } catch (CapExceeded const &e) {
    results["error"] = e.what();
    code = kInfeasible;
  } catch (std::invalid_argument const &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (code == kInfeasible && results.contains("error"))
    err << "infeasible: " << results["error"].get<std::string>() << "\n";
  emit(config, envelope(config, std::move(results)), out);
  return code;
}

int main(int argc, char **argv)
{
  CLI::App app{"Cross-ratio preserving permutations of finite projective lines"};
  app.require_subcommand(1);
  RunConfig c;
  std::string field, method = "backtracking", perm;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--field", field, "p,k for GF(p^k)")->required();
    sub->add_option("--output", c.output, "write JSON here instead of stdout");
    sub->add_option("--seed", c.seed, "recorded in the report");
    sub->add_flag("--timing", c.timing, "include wall-clock fields");
  };
  auto add_search = [&](CLI::App *sub) {
    sub->add_option("--o", c.o_spec,
                    "neg-one | subfield:d | galois-orbit-of:<elem>|generator | e1,e2,...")
        ->required();
    sub->add_option("--method", method, "exhaustive or backtracking");
    sub->add_option("--node-budget", c.node_budget, "search node cap");
    sub->add_option("--workers", c.workers, "search threads")->check(CLI::PositiveNumber);
  };

  auto *verify = app.add_subcommand("verify", "check the classification at this field");
  add_common(verify);
  add_search(verify);
  auto *orbits = app.add_subcommand("orbits", "orbits on ordered quadruples");
  add_common(orbits);
  orbits->add_option("--group", c.group, "pgl2 or pgammal2")
      ->check(CLI::IsMember({"pgl2", "pgammal2"}));
  auto *chains = app.add_subcommand("chains", "K-chains for the subfield of degree k");
  add_common(chains);
  chains->add_option("--k", c.subfield, "degree of K")->required();
  auto *search = app.add_subcommand("search", "O-preserving stabilizer of 0, 1, inf");
  add_common(search);
  add_search(search);
  auto *classify = app.add_subcommand("classify", "test a permutation for automorphism");
  add_common(classify);
  classify->add_option("--perm", perm, "comma-separated image table")->required();
  auto *hua = app.add_subcommand("hua-scan", "exhaustive Hua identity scan");
  add_common(hua);
  hua->add_option("--variant", c.variant, "A, B or both")
      ->check(CLI::IsMember({"A", "B", "both"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    c.command = app.get_subcommands().front()->get_name();
    auto const pk = split(field, ',');
    if (pk.size() != 2)
      throw std::invalid_argument("--field expects p,k");
    c.p = static_cast<unsigned>(parse_uint(pk[0], "p"));
    c.k = static_cast<unsigned>(parse_uint(pk[1], "k"));
    c.method = parse_search_method(method);
    if (!perm.empty())
      for (auto const &s : split(perm, ','))
        c.perm.push_back(static_cast<std::uint32_t>(parse_uint(s, "perm entry")));
  } catch (std::invalid_argument const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return run(c, std::cout, std::cerr);
}

} // namespace projline::cli
