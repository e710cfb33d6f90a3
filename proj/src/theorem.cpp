#include "projline/theorem.hpp"

#include <algorithm>
#include <functional>

namespace projline
{

std::string to_string(ArrowStatus s)
{
  switch (s) {
  case ArrowStatus::pass: return "pass";
  case ArrowStatus::fail: return "fail";
  case ArrowStatus::skipped: return "skipped";
  case ArrowStatus::infeasible: return "infeasible";
  }
  return "?";
}

bool TheoremReport::all_asserted_pass() const
{
  return std::all_of(arrows.begin(), arrows.end(), [](Arrow const &a) {
    return !a.asserted || a.status == ArrowStatus::pass;
  });
}

bool TheoremReport::any_asserted_infeasible() const
{
  return std::any_of(arrows.begin(), arrows.end(), [](Arrow const &a) {
    return a.asserted && a.status == ArrowStatus::infeasible;
  });
}

namespace
{

using PermTest = std::function<bool(Perm const &)>;

/// Checks `test` on every element of `group` when affordable, otherwise on
/// `gens`. Fills status, detail and witness.
void sweep(Arrow &arrow, std::optional<PermGroup> const &group,
           std::vector<Perm> const &gens, std::uint64_t cost_per_element,
           std::uint64_t budget, PermTest const &test)
{
  bool const full = group && group->order() * cost_per_element <= budget;
  auto const &candidates = full ? group->elements() : gens;
  for (auto const &p : candidates)
    if (!test(p)) {
      arrow.status = ArrowStatus::fail;
      arrow.witness = p;
      arrow.detail = full ? "element violates the property"
                          : "generator violates the property";
      return;
    }
  arrow.status = ArrowStatus::pass;
  arrow.detail = full ? "all " + std::to_string(candidates.size()) + " elements checked"
                      : "all " + std::to_string(candidates.size()) +
                            " generators checked (closed under composition)";
}

std::string stabilizer_summary(std::vector<Perm> const &found,
                               std::vector<Perm> const &frob)
{
  return std::to_string(found.size()) + " survivors, " + std::to_string(frob.size()) +
         " Frobenius maps";
}

bool includes(std::vector<Perm> const &big, std::vector<Perm> const &small)
{
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

template <class Fn>
std::optional<SearchReport> run_search(Fn &&fn, std::string &failure)
{
  try {
    return fn();
  } catch (BudgetExceeded const &e) {
    failure = e.what();
  } catch (SearchInfeasible const &e) {
    failure = e.what();
  } catch (CapExceeded const &e) {
    failure = e.what();
  }
  return std::nullopt;
}

} // namespace

TheoremReport verify_theorem(ProjectiveLine const &line, OSet const &O,
                             VerifyOptions const &opts)
{
  TheoremReport rep;
  rep.hypotheses = O.hypotheses();
  rep.hypotheses_violated = !rep.hypotheses.hold();
  bool const assert_main = rep.hypotheses.hold();
  bool const aut_inv = O.aut_invariant();

  std::optional<PermGroup> pgammal2;
  try {
    pgammal2 = pgammal2_group(line);
    rep.pgammal2_order = pgammal2->order();
  } catch (CapExceeded const &) {
  }
  auto const frob = frobenius_perms(line);
  OPreservationChecker const checker(line, O);

  // (1) => (3)
  {
    Arrow a{"(1)=>(3): every element of PGammaL2 preserves O", ArrowStatus::skipped,
            aut_inv, "", std::nullopt};
    sweep(a, pgammal2, pgammal2_generators(line), checker.o_quad_count(),
          opts.sweep_budget, [&](Perm const &p) { return checker.preserves(p); });
    rep.arrows.push_back(std::move(a));
  }

  // Stabilizer search and the group it generates.
  std::string search_failure;
  rep.search = run_search(
      [&] { return o_preserving_stabilizer(line, O, opts.method, opts.search); },
      search_failure);

  std::optional<PermGroup> group;
  if (rep.search) {
    auto const &stab = rep.search->stabilizer;
    std::uint64_t const pgl_order =
        std::uint64_t(line.field().q()) * (line.field().q() + 1) * (line.field().q() - 1);
    rep.group_order = pgl_order * stab.size();
    if (*rep.group_order * line.size() <= kMaxGroupEntries) {
      try {
        group = group_from_stabilizer(line, stab);
      } catch (CapExceeded const &) {
      }
    }
    for (auto const &s : stab) {
      SurvivorReport sr;
      sr.perm = s;
      sr.classification = classify_automorphism(line, s);
      sr.restriction = restrict_to_o(line, s, O);
      sr.closure = closure_check(line, s, O);
      sr.image_of_k = image_of_k(line, s, O);
      rep.survivors.push_back(std::move(sr));
    }
  }

  {
    Arrow a{"Aut(F) lies in the O-preserving stabilizer", ArrowStatus::infeasible,
            aut_inv, search_failure, std::nullopt};
    if (rep.search) {
      bool const ok = includes(rep.search->stabilizer, frob);
      a.status = ok ? ArrowStatus::pass : ArrowStatus::fail;
      a.detail = stabilizer_summary(rep.search->stabilizer, frob);
      if (!ok)
        for (auto const &f : frob)
          if (!std::binary_search(rep.search->stabilizer.begin(),
                                  rep.search->stabilizer.end(), f)) {
            a.witness = f;
            break;
          }
    }
    rep.arrows.push_back(std::move(a));
  }

  // (3) => (1)
  {
    Arrow a{"(3)=>(1): the O-preserving group is PGammaL2", ArrowStatus::infeasible,
            assert_main, search_failure, std::nullopt};
    if (rep.search) {
      auto const &stab = rep.search->stabilizer;
      bool ok = stab == frob;
      a.detail = stabilizer_summary(stab, frob);
      if (group) {
        auto gens = pgl2_generators(line);
        gens.insert(gens.end(), stab.begin(), stab.end());
        bool const closed = group->is_closed_under(gens);
        if (pgammal2)
          rep.group_equals_pgammal2 = *group == *pgammal2;
        ok = ok && closed && rep.group_equals_pgammal2.value_or(true);
        a.detail += closed ? "; group closed" : "; group NOT closed";
        if (rep.group_equals_pgammal2)
          a.detail += *rep.group_equals_pgammal2 ? "; equals PGammaL2 setwise"
                                                 : "; differs from PGammaL2";
      }
      a.status = ok ? ArrowStatus::pass : ArrowStatus::fail;
      if (!ok)
        for (auto const &s : stab)
          if (!std::binary_search(frob.begin(), frob.end(), s)) {
            a.witness = s;
            break;
          }
    }
    rep.arrows.push_back(std::move(a));
  }

  {
    Arrow a{"normalized survivors are field automorphisms", ArrowStatus::infeasible,
            assert_main, search_failure, std::nullopt};
    if (rep.search) {
      a.status = ArrowStatus::pass;
      a.detail = "classification, restriction to O, closure families, f(K) = K";
      for (auto const &sr : rep.survivors) {
        bool const ok = sr.classification.automorphism.has_value() &&
                        sr.restriction.is_permutation && sr.closure.ok() &&
                        sr.image_of_k;
        if (!ok) {
          a.status = ArrowStatus::fail;
          a.witness = sr.perm;
          a.detail = sr.classification.violated.empty()
                         ? "a reconstruction diagnostic failed"
                         : "violates " + sr.classification.violated;
          break;
        }
      }
    }
    rep.arrows.push_back(std::move(a));
  }

  // Chain arrows need a proper K = k(O).
  Arrow to_chains{"(3)=>(4): O-preserving permutations send K-chains to K-chains",
                  ArrowStatus::skipped, assert_main, "", std::nullopt};
  Arrow from_chains{"(4)=>(1): chain-preserving stabilizer lies in PGammaL2",
                    ArrowStatus::skipped, assert_main, "", std::nullopt};
  if (!O.proper()) {
    to_chains.detail = from_chains.detail = "k(O) = F, no proper chains";
  } else {
    std::optional<ChainSystem> chains;
    try {
      chains = all_chains(line, O.generated());
      rep.chain_count = chains->size();
    } catch (CapExceeded const &e) {
      to_chains.status = from_chains.status = ArrowStatus::infeasible;
      to_chains.detail = from_chains.detail = e.what();
    }
    if (chains) {
      if (rep.search) {
        auto gens = pgl2_generators(line);
        gens.insert(gens.end(), rep.search->stabilizer.begin(),
                    rep.search->stabilizer.end());
        std::uint64_t const cost = chains->size() * (O.generated().size() + 1);
        sweep(to_chains, group, gens, cost, opts.sweep_budget,
              [&](Perm const &p) { return is_chain_preserving(p, *chains); });
      } else {
        to_chains.status = ArrowStatus::infeasible;
        to_chains.detail = search_failure;
      }

      std::string chain_failure;
      rep.chain_search = run_search(
          [&] {
            return chain_preserving_stabilizer(line, *chains, opts.method, opts.search);
          },
          chain_failure);
      if (rep.chain_search) {
        auto const &stab = rep.chain_search->stabilizer;
        bool const ok = includes(frob, stab);
        from_chains.status = ok ? ArrowStatus::pass : ArrowStatus::fail;
        from_chains.detail = stabilizer_summary(stab, frob);
        if (!ok)
          for (auto const &s : stab)
            if (!std::binary_search(frob.begin(), frob.end(), s)) {
              from_chains.witness = s;
              break;
            }
      } else {
        from_chains.status = ArrowStatus::infeasible;
        from_chains.detail = chain_failure;
      }
    }
  }
  rep.arrows.push_back(std::move(to_chains));
  rep.arrows.push_back(std::move(from_chains));
  return rep;
}

} // namespace projline
