#pragma once

#include <optional>
#include <string>
#include <vector>

#include "combsub/interval_set.hpp"
#include "combsub/refine.hpp"
#include "combsub/schemes.hpp"

namespace combsub {

/// a(1) = 2 and a(-1) = 0 as identities in alpha.
bool check_sum_rule(const LaurentSymbol& a);
bool check_sum_rule(const SchemeSpec& spec);

/// c(z) = 2^j a(z) / (1+z)^{j+1}, the symbol of the j-th divided difference scheme.
LaurentSymbol difference_symbol(const LaurentSymbol& a, int j);

/// c(z) c(z^2) ... c(z^{2^{L-1}}).
LaurentSymbol iterated_symbol(const LaurentSymbol& c, int L);

/// Coefficients c_e with e = l (mod modulus), ascending in e.
std::vector<AlphaPoly> residue_class(const LaurentSymbol& c, int modulus, int l);

/// max over residues l of sum_m |c^L_{2^L m + l}| at a numeric alpha.
Rational contractivity_norm(const LaurentSymbol& a, int j, int L, const Rational& alpha);

struct ContinuityRow {
  int order = 0;
  IntervalSet alpha;
  /// Set only when the symbolic range is empty and the order is reached at alpha = -1 alone.
  bool minus_one_only = false;
};

struct ContinuityReport {
  int n = 1;
  int L = 1;
  std::vector<ContinuityRow> rows;
  /// Highest order certified at alpha = -1.
  std::optional<int> alpha_minus_one_order;
};

ContinuityReport continuity_intervals(int n, int L, const Rational& width = default_root_width(),
                                      Execution execution = Execution::parallel);

enum class DegreeKind { generation, reproduction };

struct DegreeReport {
  DegreeKind kind = DegreeKind::generation;
  int degree_all_alpha = -1;
  int degree_special = -1;
  Rational special_alpha;
};

DegreeReport generation_degree(int n);
DegreeReport reproduction_degree(int n);

struct GibbsReport {
  int n = 1;
  int k = 0;
  IntervalSet interval;
  /// The range never leaves alpha < 0.
  bool within_negative_half_line = false;
};

/// Step data +10 (i <= -1), -10 (i >= 0) refined k+1 times; alpha-range without undershoot
/// past either level at the descendants of the two points next to the jump.
GibbsReport gibbs_intervals(int n, int k, const Rational& width = default_root_width());

struct BellReport {
  IntervalSet positivity;
  IntervalSet monotone_rise;
  IntervalSet bell;
};

BellReport bell_intervals(int n);

struct SupportInfo {
  int n = 1;
  long lo = -3;
  long hi = 3;

  /// Nonzero indices after k levels of delta data lie within +-level_extent(k).
  long level_extent(int k) const;
};

SupportInfo support(int n);

struct ShapeReport {
  IntervalSet alpha;
  bool has_square_factor = false;
  std::string verdict;
};

ShapeReport shape_report(int n);

}  // namespace combsub
