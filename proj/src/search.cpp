#include "projline/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace projline
{

TripleRelation::TripleRelation(std::uint32_t n)
: n_(n), words_((n + 63) / 64),
  bits_(std::size_t(n) * n * n * ((n + 63) / 64), 0)
{}

TripleRelation TripleRelation::from_oset(ProjectiveLine const &line, OSet const &O)
{
  TripleRelation r(line.size());
  for (std::uint32_t a = 0; a < r.n_; ++a)
    for (std::uint32_t b = 0; b < r.n_; ++b)
      for (std::uint32_t c = 0; c < r.n_; ++c) {
        if (a == b || a == c || b == c)
          continue;
        auto *bits = &r.bits_[((std::size_t(a) * r.n_ + b) * r.n_ + c) * r.words_];
        for (Elem x : O.values()) {
          std::uint32_t const d = line.g_x_idx(a, b, c, x);
          bits[d >> 6] |= std::uint64_t(1) << (d & 63);
        }
      }
  return r;
}

TripleRelation TripleRelation::from_chains(ProjectiveLine const &line,
                                           ChainSystem const &chains)
{
  TripleRelation r(line.size());
  for (std::uint32_t a = 0; a < r.n_; ++a)
    for (std::uint32_t b = 0; b < r.n_; ++b)
      for (std::uint32_t c = 0; c < r.n_; ++c) {
        if (a == b || a == c || b == c)
          continue;
        auto *bits = &r.bits_[((std::size_t(a) * r.n_ + b) * r.n_ + c) * r.words_];
        for (auto d : chains.chains()[chains.through(a, b, c)].points)
          if (d != a && d != b && d != c)
            bits[d >> 6] |= std::uint64_t(1) << (d & 63);
      }
  return r;
}

std::string to_string(SearchMethod m)
{
  return m == SearchMethod::exhaustive ? "exhaustive" : "backtracking";
}

SearchMethod parse_search_method(std::string const &s)
{
  if (s == "exhaustive")
    return SearchMethod::exhaustive;
  if (s == "backtracking")
    return SearchMethod::backtracking;
  throw std::invalid_argument("unknown search method '" + s + "'");
}

namespace
{

constexpr std::uint32_t kUnset = 0xffffffffu;

double seconds_since(std::chrono::steady_clock::time_point start)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<std::uint32_t> free_points(ProjectiveLine const &line)
{
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i < line.field().q(); ++i)
    out.push_back(i);
  return out;
}

std::array<std::uint32_t, 3> fixed_points(ProjectiveLine const &line)
{
  return {0u, 1u, line.infinity_index()};
}

// Greedy static order: most related ordered triples among placed points.
std::vector<std::uint32_t> assignment_order(ProjectiveLine const &line,
                                            TripleRelation const &rel)
{
  std::uint32_t const n = line.size();
  std::vector<std::uint32_t> placed;
  for (auto p : fixed_points(line))
    placed.push_back(p);
  std::vector<bool> is_placed(n, false);
  for (auto p : placed)
    is_placed[p] = true;

  std::vector<std::uint64_t> degree(n, 0);
  auto add_triples_with = [&](std::uint32_t v) {
    for (auto x : placed)
      for (auto y : placed) {
        if (x == v || y == v || x == y)
          continue;
        for (std::uint32_t d = 0; d < n; ++d) {
          if (is_placed[d])
            continue;
          degree[d] += rel.holds(v, x, y, d) + rel.holds(x, v, y, d) +
                       rel.holds(x, y, v, d);
        }
      }
  };
  // Seed with the triples inside the fixed points.
  for (auto a : placed)
    for (auto b : placed)
      for (auto c : placed)
        if (a != b && a != c && b != c)
          for (std::uint32_t d = 0; d < n; ++d)
            if (!is_placed[d])
              degree[d] += rel.holds(a, b, c, d);

  std::vector<std::uint32_t> order;
  while (placed.size() < n) {
    std::uint32_t best = kUnset;
    for (std::uint32_t d = 0; d < n; ++d)
      if (!is_placed[d] && (best == kUnset || degree[d] > degree[best]))
        best = d;
    order.push_back(best);
    placed.push_back(best);
    is_placed[best] = true;
    add_triples_with(best);
  }
  return order;
}

struct Shared
{
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t budget = 0;
  std::atomic<bool> over_budget{false};
};

class Backtracker
{
public:
  Backtracker(ProjectiveLine const &line, TripleRelation const &rel,
              std::vector<std::uint32_t> const &order, LeafCheck const &accept,
              Shared &shared)
  : line_(line), rel_(rel), order_(order), accept_(accept), shared_(shared),
    n_(line.size()), W_(rel.words()),
    dom_((order.size() + 1) * std::size_t(n_) * W_, 0), f_(n_, kUnset)
  {
    for (auto p : fixed_points(line))
      f_[p] = p;
  }

  // Runs the whole tree, taking only first-level branches with
  // index % stride == offset.
  void run(unsigned offset, unsigned stride)
  {
    offset_ = offset;
    stride_ = stride;
    if (!init_domains())
      return;
    if (order_.empty()) {
      leaf();
      return;
    }
    descend(0);
  }

  std::vector<Perm> found;
  std::uint64_t prunes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t false_accepts = 0;

private:
  std::uint64_t *domain(std::size_t level, std::uint32_t pt)
  { return &dom_[(level * n_ + pt) * W_]; }

  bool init_domains()
  {
    auto const fixed = fixed_points(line_);
    for (auto u : order_) {
      auto *D = domain(0, u);
      for (auto w : order_)
        D[w >> 6] |= std::uint64_t(1) << (w & 63);
    }
    for (auto a : fixed)
      for (auto b : fixed)
        for (auto c : fixed)
          if (a != b && a != c && b != c && !restrict_all(0, 0, a, b, c))
            return false;
    return true;
  }

  // Applies the triple (a, b, c) to every open point at `level`, where the
  // open points are order_[first_open..].
  bool restrict_all(std::size_t level, std::size_t first_open, std::uint32_t a,
                    std::uint32_t b, std::uint32_t c)
  {
    std::uint64_t const *S = rel_.related(a, b, c);
    std::uint64_t const *T = rel_.related(f_[a], f_[b], f_[c]);
    for (std::size_t i = first_open; i < order_.size(); ++i) {
      std::uint32_t const u = order_[i];
      bool const in = (S[u >> 6] >> (u & 63)) & 1;
      auto *D = domain(level, u);
      std::uint64_t any = 0;
      if (in)
        for (std::uint32_t w = 0; w < W_; ++w)
          any |= (D[w] &= T[w]);
      else
        for (std::uint32_t w = 0; w < W_; ++w)
          any |= (D[w] &= ~T[w]);
      if (!any)
        return false;
    }
    return true;
  }

  bool propagate(std::size_t depth)
  {
    std::size_t const level = depth + 1;
    std::uint32_t const v = order_[depth];
    std::uint32_t const w = f_[v];
    for (std::size_t i = depth + 1; i < order_.size(); ++i) {
      auto *D = domain(level, order_[i]);
      D[w >> 6] &= ~(std::uint64_t(1) << (w & 63));
    }
    assigned_.clear();
    for (auto p : fixed_points(line_))
      assigned_.push_back(p);
    for (std::size_t i = 0; i < depth; ++i)
      assigned_.push_back(order_[i]);
    for (auto x : assigned_)
      for (auto y : assigned_) {
        if (x == y)
          continue;
        if (!restrict_all(level, depth + 1, v, x, y) ||
            !restrict_all(level, depth + 1, x, v, y) ||
            !restrict_all(level, depth + 1, x, y, v))
          return false;
      }
    return true;
  }

  void descend(std::size_t depth)
  {
    std::uint32_t const v = order_[depth];
    std::uint64_t const *D = domain(depth, v);
    unsigned branch = 0;
    for (std::uint32_t wi = 0; wi < W_; ++wi) {
      std::uint64_t bits = D[wi];
      while (bits) {
        std::uint32_t const w = wi * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (depth == 0 && (branch++ % stride_) != offset_)
          continue;
        if (shared_.over_budget.load(std::memory_order_relaxed))
          return;
        if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > shared_.budget) {
          shared_.over_budget = true;
          return;
        }
        std::copy(domain(depth, 0), domain(depth, 0) + std::size_t(n_) * W_,
                  domain(depth + 1, 0));
        f_[v] = w;
        if (!propagate(depth))
          ++prunes;
        else if (depth + 1 == order_.size())
          leaf();
        else
          descend(depth + 1);
        f_[v] = kUnset;
      }
    }
  }

  void leaf()
  {
    ++leaves;
    Perm p(f_);
    if (accept_(p))
      found.push_back(std::move(p));
    else
      ++false_accepts;
  }

  ProjectiveLine const &line_;
  TripleRelation const &rel_;
  std::vector<std::uint32_t> const &order_;
  LeafCheck const &accept_;
  Shared &shared_;
  std::uint32_t n_;
  std::uint32_t W_;
  std::vector<std::uint64_t> dom_;
  std::vector<std::uint32_t> f_;
  std::vector<std::uint32_t> assigned_;
  unsigned offset_ = 0;
  unsigned stride_ = 1;
};

SearchReport backtracking(ProjectiveLine const &line, TripleRelation const &rel,
                          LeafCheck const &accept, SearchOptions const &opts)
{
  if (line.field().q() > kMaxBacktrackingOrder)
    throw SearchInfeasible("backtracking search is limited to fields of order <= " +
                           std::to_string(kMaxBacktrackingOrder));
  auto const order = assignment_order(line, rel);
  Shared shared;
  shared.budget = opts.node_budget;
  unsigned const workers = std::max(1u, opts.workers);

  std::vector<Backtracker> parts;
  parts.reserve(workers);
  for (unsigned i = 0; i < workers; ++i)
    parts.emplace_back(line, rel, order, accept, shared);
  if (workers == 1) {
    parts[0].run(0, 1);
  } else {
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned i = 0; i < workers; ++i)
      threads.emplace_back([&, i] {
        try {
          parts[i].run(i, workers);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error)
            error = std::current_exception();
        }
      });
    for (auto &t : threads)
      t.join();
    if (error)
      std::rethrow_exception(error);
  }

  SearchReport rep;
  rep.method = SearchMethod::backtracking;
  rep.nodes = std::min(shared.nodes.load(), shared.budget);
  for (auto &p : parts) {
    rep.prunes += p.prunes;
    rep.leaves += p.leaves;
    rep.false_accepts += p.false_accepts;
    for (auto &f : p.found)
      rep.stabilizer.push_back(std::move(f));
  }
  std::sort(rep.stabilizer.begin(), rep.stabilizer.end());
  if (shared.over_budget)
    throw BudgetExceeded("node budget of " + std::to_string(opts.node_budget) +
                             " exceeded",
                         std::move(rep));
  return rep;
}

SearchReport exhaustive(ProjectiveLine const &line, LeafCheck const &accept,
                        SearchOptions const &opts)
{
  if (line.size() < 3)
    throw SearchInfeasible("projective line too small");
  auto const pts = free_points(line);
  std::uint64_t candidates = 1;
  for (std::uint64_t i = 2; i <= pts.size(); ++i) {
    candidates *= i;
    if (candidates > kMaxExhaustiveCandidates)
      throw SearchInfeasible("exhaustive search needs more than " +
                             std::to_string(kMaxExhaustiveCandidates) +
                             " candidates");
  }
  SearchReport rep;
  rep.method = SearchMethod::exhaustive;
  std::vector<std::uint32_t> table(line.size());
  for (auto p : fixed_points(line))
    table[p] = p;
  std::vector<std::uint32_t> images = pts;
  do {
    if (rep.nodes == opts.node_budget)
      throw BudgetExceeded("node budget of " + std::to_string(opts.node_budget) +
                               " exceeded",
                           std::move(rep));
    ++rep.nodes;
    ++rep.leaves;
    for (std::size_t i = 0; i < pts.size(); ++i)
      table[pts[i]] = images[i];
    Perm p(table);
    if (accept(p))
      rep.stabilizer.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  std::sort(rep.stabilizer.begin(), rep.stabilizer.end());
  return rep;
}

} // namespace

SearchReport stabilizer_search(ProjectiveLine const &line, TripleRelation const &rel,
                               SearchMethod method, LeafCheck const &accept,
                               SearchOptions const &opts)
{
  if (method == SearchMethod::exhaustive)
    return exhaustive_search(line, accept, opts);
  auto const start = std::chrono::steady_clock::now();
  SearchReport rep = backtracking(line, rel, accept, opts);
  rep.wall_seconds = seconds_since(start);
  return rep;
}

SearchReport exhaustive_search(ProjectiveLine const &line, LeafCheck const &accept,
                               SearchOptions const &opts)
{
  auto const start = std::chrono::steady_clock::now();
  SearchReport rep = exhaustive(line, accept, opts);
  rep.wall_seconds = seconds_since(start);
  return rep;
}

SearchReport o_preserving_stabilizer(ProjectiveLine const &line, OSet const &O,
                                     SearchMethod method, SearchOptions const &opts)
{
  OPreservationChecker const checker(line, O);
  LeafCheck const accept = [&](Perm const &p) { return checker.preserves(p); };
  if (method == SearchMethod::exhaustive)
    return exhaustive_search(line, accept, opts);
  return stabilizer_search(line, TripleRelation::from_oset(line, O), method, accept,
                           opts);
}

SearchReport chain_preserving_stabilizer(ProjectiveLine const &line,
                                         ChainSystem const &chains,
                                         SearchMethod method,
                                         SearchOptions const &opts)
{
  LeafCheck const accept = [&](Perm const &p) {
    return is_chain_preserving(p, chains);
  };
  if (method == SearchMethod::exhaustive)
    return exhaustive_search(line, accept, opts);
  return stabilizer_search(line, TripleRelation::from_chains(line, chains), method,
                           accept, opts);
}

PermGroup group_from_stabilizer(ProjectiveLine const &line,
                                std::vector<Perm> const &stabilizer)
{
  auto const pgl = pgl2_group(line);
  std::vector<Perm> elems;
  elems.reserve(pgl.order() * stabilizer.size());
  for (auto const &t : pgl.elements())
    for (auto const &s : stabilizer)
      elems.push_back(compose(t, s));
  auto gens = pgl.generators();
  gens.insert(gens.end(), stabilizer.begin(), stabilizer.end());
  return PermGroup(line.size(), std::move(elems), std::move(gens));
}

std::vector<Perm> frobenius_perms(ProjectiveLine const &line)
{
  std::vector<Perm> out;
  for (unsigned i = 0; i < line.field().k(); ++i)
    out.push_back(frobenius_perm(line, i));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace projline
