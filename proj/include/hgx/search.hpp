#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgx/bounds.hpp"
#include "hgx/constructions.hpp"
#include "hgx/embedding.hpp"
#include "hgx/hypergraph.hpp"

namespace hgx {

enum class SeedConstruction { kAuto, kPsi, kPsi1, kNone };

struct SearchOptions {
  std::uint64_t node_budget = 0;  // 0 = unlimited
  bool all_extremal = false;      // enumerate every maximum family up to isomorphism
  int threads = 1;
  SeedConstruction seed = SeedConstruction::kAuto;
  /// Restrict to labelings with non-increasing final degrees. Every family
  /// has such a labeling, so the maximum is unchanged.
  bool symmetry_pruning = false;
  /// Use exact values for fewer vertices (computed recursively) as extra
  /// upper bounds inside the branch-and-bound.
  bool subproblem_bounds = true;
};

struct SearchResult {
  std::size_t max_edges = 0;
  std::vector<Hypergraph> witnesses;
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

/// Largest r-graph on [n] containing none of the patterns. Branch and bound
/// over the r-sets of [n] in colex order, include branch first; every
/// inclusion is checked for pattern copies through the new edge. When the
/// budget runs out, exhausted is false and max_edges is only a lower bound.
SearchResult max_free(int n, int r, const std::vector<Hypergraph>& forbidden, const SearchOptions& options = {});

/// Reference enumeration over all 2^C(n,r) subfamilies; C(n,r) <= 24 only.
std::size_t max_free_naive(int n, int r, const std::vector<Hypergraph>& forbidden);

struct FreeCheck {
  std::string pattern_name;
  SearchStatus status;
  std::optional<Embedding> witness;
};

struct FreeReport {
  std::vector<FreeCheck> checks;
  bool all_absent() const;
};

/// Run containment for each pattern, using the blowup-aware engine when the
/// pattern carries its block structure.
FreeReport verify_free(const Hypergraph& construction, const std::vector<NamedPattern>& forbidden,
                       SearchLimits limits = {});
FreeReport verify_free(const Hypergraph& construction, const std::vector<Hypergraph>& forbidden,
                       SearchLimits limits = {});

struct GapRow {
  std::string name;
  std::string value;
  std::string kind;
  std::string note;
  bool violated = false;
};

struct GapReport {
  SearchResult search;
  std::vector<GapRow> rows;
  bool ok() const;
};

/// Thrown when a lower bound exceeds an exhaustive search value, or a search
/// value exceeds an unconditional upper bound.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Search value for one pattern next to every bound that applies to it.
/// Throws IntegrityError on any violation.
GapReport extremal_gap_report(int n, int r, const std::optional<NamedPattern>& pattern,
                              const SearchOptions& options = {});

}  // namespace hgx
