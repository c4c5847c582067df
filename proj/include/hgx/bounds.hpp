#pragma once

#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace hgx {

using Rational = boost::multiprecision::cpp_rational;

enum class BoundKind { kUpper, kLower, kExact, kConditional, kConjecture };

const char* to_string(BoundKind k);

/// A closed-form value together with what kind of statement it is and when
/// it applies. Conditional, conjectured and asymptotic values always carry a
/// note.
struct BoundReport {
  std::string name;
  Rational value;
  BoundKind kind;
  std::string validity_note;

  std::string value_string() const;
  double as_double() const;
};

/// (ell-1) n / 2.
BoundReport erdos_gallai(int n, int ell);
/// Exact ex(n, P_ell) for graphs: (ell-1) n / 2 - q (ell-q) / 2 where n = q mod ell.
BoundReport faudree_schelp(int n, int ell);
/// (ell-1)/r * C(n, r-1); a conjecture for r >= 3.
BoundReport kalai_bound(int n, int r, int ell);
/// (ell-1) * C(n, r-1), the bound for tight trees from the shadow argument.
BoundReport greedy_bound(int n, int r, int ell);
/// |Psi^1_{sigma-1}(n,r)| = (sigma-1) C(n-sigma+1, r-1).
BoundReport crosscut_lower(int n, int r, int sigma);
/// |Psi_{tau-1}(n,r)| = C(n,r) - C(n-tau+1, r).
BoundReport psi_lower(int n, int r, int tau);
/// Lower (needs designs) and upper bounds for the tight path.
std::pair<BoundReport, BoundReport> tight_path_bounds(int n, int r, int ell);
/// ex_graph / C(floor(2n/r), 2) * C(n, r) for even r.
BoundReport frankl_half_bound(int n, int r, const Rational& ex_graph_value);
/// (lambda-1)/r * C(n, r-1), realised by an (n,r,r-1,lambda-1) design when one exists.
BoundReport steiner_lower(int n, int r, int lambda);

/// Generalized binomial y(y-1)...(y-k+1)/k! for real y.
double real_binomial(double y, int k);

/// Lovasz form of Kruskal-Katona: the (k-1)-shadow of m k-sets has at least
/// C(y, k-1) members where C(y, k) = m, y >= k. The root is found by bisection.
double kk_shadow_bound(std::uint64_t m, int k);

}  // namespace hgx
