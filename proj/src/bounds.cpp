#include "hgx/bounds.hpp"

#include <cmath>
#include <sstream>

#include "hgx/error.hpp"
#include "hgx/hypergraph.hpp"

namespace hgx {
namespace {

Rational binom(int n, int k) { return Rational(boost::multiprecision::cpp_int(binomial(n, k))); }

Rational frac(long long p, long long q) { return Rational(p, q); }

}  // namespace

const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::kUpper:
      return "upper";
    case BoundKind::kLower:
      return "lower";
    case BoundKind::kExact:
      return "exact";
    case BoundKind::kConditional:
      return "conditional";
    case BoundKind::kConjecture:
      return "conjecture";
  }
  return "?";
}

std::string BoundReport::value_string() const {
  std::ostringstream out;
  if (denominator(value) == 1)
    out << numerator(value);
  else
    out << numerator(value) << "/" << denominator(value);
  return out.str();
}

double BoundReport::as_double() const { return value.convert_to<double>(); }

BoundReport erdos_gallai(int n, int ell) {
  if (ell < 1) throw ParameterError("erdos_gallai needs ell >= 1");
  return {"erdos_gallai", frac(static_cast<long long>(ell - 1) * n, 2), BoundKind::kUpper,
          "graphs; equality iff ell divides n"};
}

BoundReport faudree_schelp(int n, int ell) {
  if (ell < 1) throw ParameterError("faudree_schelp needs ell >= 1");
  const int q = n % ell;
  Rational v = frac(static_cast<long long>(ell - 1) * n, 2) - frac(static_cast<long long>(q) * (ell - q), 2);
  return {"faudree_schelp", v, BoundKind::kExact, "graphs, every n"};
}

BoundReport kalai_bound(int n, int r, int ell) {
  if (r < 1) throw ParameterError("kalai_bound needs r >= 1");
  return {"kalai", frac(ell - 1, r) * binom(n, r - 1), r >= 3 ? BoundKind::kConjecture : BoundKind::kUpper,
          r >= 3 ? "conjectured for tight trees, r >= 3" : "Erdos-Sos form for graph trees"};
}

BoundReport greedy_bound(int n, int r, int ell) {
  if (r < 1) throw ParameterError("greedy_bound needs r >= 1");
  return {"greedy", Rational(ell - 1) * binom(n, r - 1), BoundKind::kUpper, "tight trees with ell edges"};
}

BoundReport crosscut_lower(int n, int r, int sigma) {
  if (sigma < 1) throw ParameterError("crosscut_lower needs sigma >= 1");
  return {"crosscut_lower", Rational(sigma - 1) * binom(n - sigma + 1, r - 1), BoundKind::kLower,
          "size of Psi^1_{sigma-1}(n,r); valid when the pattern has a crosscut"};
}

BoundReport psi_lower(int n, int r, int tau) {
  if (tau < 1) throw ParameterError("psi_lower needs tau >= 1");
  return {"psi_lower", binom(n, r) - binom(n - tau + 1, r), BoundKind::kLower, "size of Psi_{tau-1}(n,r)"};
}

std::pair<BoundReport, BoundReport> tight_path_bounds(int n, int r, int ell) {
  if (r < 1) throw ParameterError("tight_path_bounds needs r >= 1");
  BoundReport lower{"tight_path_lower", frac(ell - 1, r) * binom(n, r - 1), BoundKind::kConditional,
                    "requires design existence"};
  Rational up = r % 2 == 0 ? frac(ell - 1, 2) * binom(n, r - 1)
                           : frac(ell + (ell - 1) / r, 2) * binom(n, r - 1);
  BoundReport upper{"tight_path_upper", up, BoundKind::kUpper, r % 2 == 0 ? "even r" : "odd r"};
  return {lower, upper};
}

BoundReport frankl_half_bound(int n, int r, const Rational& ex_graph_value) {
  if (r < 2 || r % 2 != 0) throw ParameterError("frankl_half_bound needs even r");
  const int parts = 2 * n / r;
  if (parts < 2) throw ParameterError("frankl_half_bound needs floor(2n/r) >= 2");
  return {"frankl_half", ex_graph_value / binom(parts, 2) * binom(n, r), BoundKind::kUpper,
          "asymptotic transfer, a=b=r/2"};
}

BoundReport steiner_lower(int n, int r, int lambda) {
  if (lambda < 2) throw ParameterError("steiner_lower needs lambda >= 2");
  return {"steiner_lower", frac(lambda - 1, r) * binom(n, r - 1), BoundKind::kConditional,
          "holds only for n admitting an (n,r,r-1,lambda-1) design"};
}

double real_binomial(double y, int k) {
  double acc = 1.0;
  for (int i = 0; i < k; ++i) acc *= (y - i) / (i + 1);
  return acc;
}

double kk_shadow_bound(std::uint64_t m, int k) {
  if (k < 1) throw ParameterError("kk_shadow_bound needs k >= 1");
  if (m == 0) return 0.0;
  if (k == 1) return 1.0;
  // Integer points are answered exactly.
  for (int y = k; binomial(y, k) <= m && y <= kMaxVertices * 4; ++y)
    if (binomial(y, k) == m) return static_cast<double>(binomial(y, k - 1));
  const double target = static_cast<double>(m);
  double lo = k, hi = k + 1;
  while (real_binomial(hi, k) < target) hi = 2 * hi;
  // Bisect well past the 1e-9 requirement, until the bracket stops shrinking.
  while (true) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (real_binomial(mid, k) < target)
      lo = mid;
    else
      hi = mid;
  }
  return real_binomial(lo, k - 1);
}

}  // namespace hgx
