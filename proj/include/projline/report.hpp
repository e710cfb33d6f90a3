#ifndef PROJLINE_REPORT_HPP
#define PROJLINE_REPORT_HPP

#include "json.hpp"

#include "projline/theorem.hpp"

namespace projline::report
{

using nlohmann::json;

// Serialization of library values. Elements are coefficient arrays
// (constant term first), points are coefficient arrays or {"inf": true},
// permutations are image tables over the point enumeration.

json field(Field const &F);
json elem(Field const &F, Elem e);
json elems(Field const &F, std::vector<Elem> const &es);
json point(ProjectiveLine const &line, std::uint32_t idx);
json points(ProjectiveLine const &line, std::vector<std::uint32_t> const &idx);
json perm(Perm const &p);
json perms(std::vector<Perm> const &ps);
json moebius(Field const &F, Moebius const &t);
json semilinear(Field const &F, SemilinearMap const &s);
json oset(OSet const &O);
json hypotheses(Hypotheses const &h);

/// `timing` adds wall-clock fields; without it output is byte-stable.
json search(SearchReport const &r, bool timing);
json orbits(ProjectiveLine const &line, OrbitPartition const &part);
json chains(ProjectiveLine const &line, ChainSystem const &chains);
json classification(Field const &F, Classification const &c);
json closure(Field const &F, ClosureReport const &c);
json hua_scan(Field const &F, HuaScan const &s);
json theorem(ProjectiveLine const &line, TheoremReport const &r, bool timing);

} // namespace projline::report

#endif // PROJLINE_REPORT_HPP
