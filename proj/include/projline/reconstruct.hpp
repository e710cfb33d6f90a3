#ifndef PROJLINE_RECONSTRUCT_HPP
#define PROJLINE_RECONSTRUCT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "projline/oset.hpp"

namespace projline
{

// Diagnostics that replay, on a concrete normalized O-preserving permutation
// f (fixing 0, 1, infinity), the algebraic steps showing f is a field
// automorphism.

enum class CorrectionKind { tau, rho, chi, alpha, beta };

std::string to_string(CorrectionKind k);

/// Each kind is a Moebius map M_{a,b} in x with the identity
/// [M(x), a; b, inf] = x (tau) and its analogues. The correction permutation
/// of f is the y solving f(M_{a,b}(x)) = M_{f(a),f(b)}(y).
Moebius correction_moebius(ProjectiveLine const &line, CorrectionKind kind,
                           Elem a, Elem b);

struct CorrectionPerm
{
  CorrectionKind kind = CorrectionKind::tau;
  Elem a, b;
  std::vector<std::pair<Elem, Elem>> table;  // x -> y, sorted by x

  Elem operator()(Elem x) const;
};

/// Raised when a correction equation has no solution inside O.
class NotOPreserving : public std::domain_error
{
public:
  NotOPreserving(std::string const &what, Elem x)
  : std::domain_error(what), x_(x)
  {}
  Elem failing_x() const { return x_; }

private:
  Elem x_;
};

/// Throws std::invalid_argument when a = b, or when a or b is 1 for alpha
/// and beta, or when f does not fix infinity (and 1, for alpha and beta); NotOPreserving when some x in
/// O has no solution in O or two x share one.
CorrectionPerm correction_perm(ProjectiveLine const &line, CorrectionKind kind,
                               Elem a, Elem b, Perm const &f, OSet const &O);

struct Restriction
{
  bool is_permutation = false;
  std::vector<std::pair<Elem, Elem>> map;  // x -> f(x) for x in O
  std::optional<Elem> escaping;            // first x with f(x) outside O
};

Restriction restrict_to_o(ProjectiveLine const &line, Perm const &f, OSet const &O);

struct ClosureViolation
{
  std::string family;
  Elem a, b, x;
};

struct ClosureReport
{
  std::uint64_t checked = 0;
  std::vector<ClosureViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Evaluates, for all a, b in K = k(O) and x in O (a != 0 where needed):
///   f(a) + (1-x) f(b),  x f(a) + f(b),  -f(a)^2 x + f(a) x + f(a),
///   1 + x - x / f(a)
/// and records each that falls outside f(K).
ClosureReport closure_check(ProjectiveLine const &line, Perm const &f, OSet const &O);

/// {f(a) : a in K} == K for K = k(O).
bool image_of_k(ProjectiveLine const &line, Perm const &f, OSet const &O);

enum class HuaVariant { A, B };

std::string to_string(HuaVariant v);

/// Evaluates a - (a^-1 + (b^-2 - a)^-1)^-1 (A) or
/// a - (a^-1 + (b^-2 - a^-1)^-1)^-1 (B). Throws std::domain_error naming the
/// vanishing subexpression.
Elem hua(Field const &field, Elem a, Elem b, HuaVariant variant);

struct HuaScan
{
  HuaVariant variant = HuaVariant::A;
  std::uint64_t valid = 0;     // pairs where every inverse exists
  std::uint64_t excluded = 0;  // pairs with a vanishing subexpression
  std::uint64_t equal = 0;     // valid pairs with value a^2 b^2
  std::vector<std::pair<Elem, Elem>> counterexamples;  // first few
  bool identity_holds() const { return valid > 0 && equal == valid; }
};

HuaScan hua_scan(Field const &field, HuaVariant variant,
                 std::size_t max_counterexamples = 8);

struct Classification
{
  std::optional<unsigned> automorphism;  // Frobenius power
  std::string violated;                  // first failed equation
  std::vector<Elem> witness;
};

/// For f fixing 0, 1, infinity: checks additivity, f(a) f(1/a) = 1,
/// f(a^2) = f(a)^2 and multiplicativity (through squares in characteristic
/// 2), then matches f against the Frobenius powers.
Classification classify_automorphism(ProjectiveLine const &line, Perm const &f);

} // namespace projline

#endif // PROJLINE_RECONSTRUCT_HPP
