#include "projline/report.hpp"

namespace projline::report
{

json field(Field const &F)
{
  return {{"p", F.p()}, {"k", F.k()}, {"q", F.q()}, {"modulus", F.modulus()}};
}

json elem(Field const &F, Elem e) { return F.coeffs(e); }

json elems(Field const &F, std::vector<Elem> const &es)
{
  json out = json::array();
  for (Elem e : es)
    out.push_back(elem(F, e));
  return out;
}

json point(ProjectiveLine const &line, std::uint32_t idx)
{
  if (idx == line.infinity_index())
    return {{"inf", true}};
  return elem(line.field(), Elem{idx});
}

json points(ProjectiveLine const &line, std::vector<std::uint32_t> const &idx)
{
  json out = json::array();
  for (auto i : idx)
    out.push_back(point(line, i));
  return out;
}

json perm(Perm const &p) { return p.table(); }

json perms(std::vector<Perm> const &ps)
{
  json out = json::array();
  for (auto const &p : ps)
    out.push_back(perm(p));
  return out;
}

json moebius(Field const &F, Moebius const &t)
{
  return json::array({elem(F, t.a), elem(F, t.b), elem(F, t.c), elem(F, t.d)});
}

json semilinear(Field const &F, SemilinearMap const &s)
{
  return {{"t", moebius(F, s.t)}, {"sigma", s.sigma}};
}

json oset(OSet const &O)
{
  Field const &F = O.field();
  return {{"values", elems(F, O.values())},
          {"aut_invariant", O.aut_invariant()},
          {"sqrt_closed", O.sqrt_closed()},
          {"generated_subfield_degree", O.generated().degree},
          {"proper", O.proper()}};
}

json hypotheses(Hypotheses const &h)
{
  return {{"nonempty", h.nonempty},
          {"aut_invariant", h.aut_invariant},
          {"proper_subfield", h.proper_subfield},
          {"char2_conditions", h.char2_conditions},
          {"violations", h.violations()}};
}

json search(SearchReport const &r, bool timing)
{
  json out = {{"method", to_string(r.method)},
              {"survivor_count", r.stabilizer.size()},
              {"survivors", perms(r.stabilizer)},
              {"nodes", r.nodes},
              {"prunes", r.prunes},
              {"leaves", r.leaves},
              {"false_accepts", r.false_accepts}};
  if (timing)
    out["timing"] = {{"wall_seconds", r.wall_seconds}};
  return out;
}

json orbits(ProjectiveLine const &line, OrbitPartition const &part)
{
  json classes = json::array();
  for (auto const &c : part.classes) {
    auto const rep = c.representative();
    classes.push_back({{"label", elems(line.field(), c.cross_ratios)},
                       {"size", c.size()},
                       {"representative",
                        points(line, {rep[0], rep[1], rep[2], rep[3]})}});
  }
  return {{"orbit_count", part.classes.size()},
          {"total", part.total()},
          {"classes", std::move(classes)}};
}

json chains(ProjectiveLine const &line, ChainSystem const &cs)
{
  json list = json::array();
  for (auto const &c : cs.chains())
    list.push_back(points(line, c.points));
  return list;
}

json classification(Field const &F, Classification const &c)
{
  json out = {{"is_automorphism", c.automorphism.has_value()}};
  if (c.automorphism)
    out["automorphism_index"] = *c.automorphism;
  else
    out["violated"] = c.violated;
  out["witness"] = elems(F, c.witness);
  return out;
}

json closure(Field const &F, ClosureReport const &c)
{
  json v = json::array();
  for (auto const &cv : c.violations)
    v.push_back({{"family", cv.family},
                 {"a", elem(F, cv.a)},
                 {"b", elem(F, cv.b)},
                 {"x", elem(F, cv.x)}});
  return {{"checked", c.checked}, {"ok", c.ok()}, {"violations", std::move(v)}};
}

json hua_scan(Field const &F, HuaScan const &s)
{
  json ce = json::array();
  for (auto const &[a, b] : s.counterexamples)
    ce.push_back({{"a", elem(F, a)}, {"b", elem(F, b)}});
  return {{"variant", to_string(s.variant)},
          {"valid_pairs", s.valid},
          {"excluded_pairs", s.excluded},
          {"equal_pairs", s.equal},
          {"identity_holds", s.identity_holds()},
          {"counterexamples", std::move(ce)}};
}

json theorem(ProjectiveLine const &line, TheoremReport const &r, bool timing)
{
  Field const &F = line.field();
  json out = {{"hypotheses", hypotheses(r.hypotheses)},
              {"hypotheses_violated", r.hypotheses_violated},
              {"all_asserted_pass", r.all_asserted_pass()}};
  out["pgammal2_order"] = r.pgammal2_order ? json(*r.pgammal2_order) : json();
  out["group_order"] = r.group_order ? json(*r.group_order) : json();
  out["group_equals_pgammal2"] =
      r.group_equals_pgammal2 ? json(*r.group_equals_pgammal2) : json();
  out["search"] = r.search ? search(*r.search, timing) : json();
  out["chain_count"] = r.chain_count ? json(*r.chain_count) : json();
  out["chain_search"] = r.chain_search ? search(*r.chain_search, timing) : json();

  json surv = json::array();
  for (auto const &s : r.survivors) {
    json restr = {{"is_permutation", s.restriction.is_permutation}};
    if (s.restriction.escaping)
      restr["escaping"] = elem(F, *s.restriction.escaping);
    surv.push_back({{"perm", perm(s.perm)},
                    {"classification", classification(F, s.classification)},
                    {"restriction_to_o", std::move(restr)},
                    {"closure", closure(F, s.closure)},
                    {"image_of_k_is_k", s.image_of_k}});
  }
  out["survivors"] = std::move(surv);

  json arrows = json::array();
  for (auto const &a : r.arrows) {
    json j = {{"name", a.name},
              {"status", to_string(a.status)},
              {"asserted", a.asserted},
              {"detail", a.detail}};
    if (a.witness)
      j["witness"] = perm(*a.witness);
    arrows.push_back(std::move(j));
  }
  out["arrows"] = std::move(arrows);
  return out;
}

} // namespace projline::report
