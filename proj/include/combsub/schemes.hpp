#pragma once

#include <optional>
#include <vector>

#include "combsub/laurent_symbol.hpp"

namespace combsub {

/// Member of the (2n+2)-point family. An empty alpha keeps the tension parameter symbolic.
struct SchemeSpec {
  int n = 1;
  std::optional<Rational> alpha;

  /// Throws BadIndex when n < 1.
  void validate() const;
  int points() const { return 2 * n + 2; }
};

/// Vertex rule (2n+1 taps) and edge rule (2n+2 taps) of a primal binary scheme.
/// Both rules start at source index i - n: tap t of the vertex rule for P_{2i} reads
/// P_{i+t-n}, tap t of the edge rule for P_{2i+1} reads P_{i+t-n}.
struct MaskPair {
  int n = 1;
  std::vector<AlphaPoly> even_rule;
  std::vector<AlphaPoly> odd_rule;

  int first_source_offset() const { return -n; }
  MaskPair specialised(const Rational& alpha) const;
  friend bool operator==(const MaskPair&, const MaskPair&) = default;
};

/// C(n, k) from Pascal's triangle.
mpz_class binomial(int n, int k);

MaskPair dd_mask(int n);
MaskPair bspline_mask(int n);
/// (1+alpha) * dd - alpha * bspline, tap by tap.
MaskPair combined_mask(int n);

/// Interleaves a mask pair into a(z): z^{2t+1} carries vertex tap t, z^{2t} edge tap t.
LaurentSymbol symbol_of(const MaskPair& mask);

/// a_{2n+2}(z) of degree 4n+2; specialised at spec.alpha when present.
LaurentSymbol scheme_symbol(const SchemeSpec& spec);

/// (1+z)^{4n+2} / 2^{4n+1}.
LaurentSymbol bspline_symbol(int n);

/// A(z) with a(z) = (1+z)^{2n+2} A(z) / 2^{2n+1}.
LaurentSymbol factor_symbol(const SchemeSpec& spec);

}  // namespace combsub
