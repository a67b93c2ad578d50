#pragma once

// Floating-point reference computations built from closed-form weights, independent of the
// exact symbolic pipeline under test.

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace oracle {

using real = long double;

inline real choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  real r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Lagrange weights at x = 1/2 for the nodes t - n, t = 0..2n+1.
inline std::vector<real> dd_edge_weights(int n) {
  std::vector<real> w;
  for (int t = 0; t <= 2 * n + 1; ++t) {
    real v = 1;
    for (int m = 0; m <= 2 * n + 1; ++m) {
      if (m != t) v *= (0.5L - (m - n)) / static_cast<real>(t - m);
    }
    w.push_back(v);
  }
  return w;
}

struct Rules {
  std::vector<real> even;  // 2n+1 taps, tap t reads i + t - n
  std::vector<real> odd;   // 2n+2 taps
};

inline Rules combined_rules(int n, real alpha) {
  const real scale = std::ldexp(1.0L, -(4 * n + 1));
  const auto dd = dd_edge_weights(n);
  Rules r;
  for (int t = 0; t <= 2 * n; ++t) {
    const real r_tap = t == n ? 1.0L : 0.0L;
    const real q_tap = choose(4 * n + 2, 2 * t + 1) * scale;
    r.even.push_back((1 + alpha) * r_tap - alpha * q_tap);
  }
  for (int t = 0; t <= 2 * n + 1; ++t) {
    const real q_tap = choose(4 * n + 2, 2 * t) * scale;
    r.odd.push_back((1 + alpha) * dd[static_cast<std::size_t>(t)] - alpha * q_tap);
  }
  return r;
}

/// a_0..a_{4n+2}: z^{2t} carries edge tap t, z^{2t+1} vertex tap t.
inline std::vector<real> symbol(int n, real alpha) {
  const Rules r = combined_rules(n, alpha);
  std::vector<real> a(static_cast<std::size_t>(4 * n + 3), 0);
  for (std::size_t t = 0; t < r.odd.size(); ++t) a[2 * t] = r.odd[t];
  for (std::size_t t = 0; t < r.even.size(); ++t) a[2 * t + 1] = r.even[t];
  return a;
}

inline std::vector<real> divide_one_plus_z(const std::vector<real>& a) {
  std::vector<real> q(a.size() - 1);
  real carry = 0;
  for (std::size_t e = 0; e + 1 < a.size(); ++e) {
    q[e] = a[e] - carry;
    carry = q[e];
  }
  return q;
}

inline std::vector<real> convolve(const std::vector<real>& a, const std::vector<real>& b) {
  std::vector<real> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

/// max_l sum_m |c^L_{2^L m + l}| with c = 2^j a / (1+z)^{j+1}.
inline real contractivity_norm(const std::vector<real>& a, int j, int L) {
  std::vector<real> c = a;
  for (auto& v : c) v = std::ldexp(v, j);
  for (int k = 0; k <= j; ++k) c = divide_one_plus_z(c);
  std::vector<real> cl = c;
  for (int r = 1; r < L; ++r) {
    const std::size_t step = std::size_t{1} << r;
    std::vector<real> up((c.size() - 1) * step + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) up[i * step] = c[i];
    cl = convolve(cl, up);
  }
  const std::size_t modulus = std::size_t{1} << L;
  std::vector<real> sums(modulus, 0);
  for (std::size_t e = 0; e < cl.size(); ++e) sums[e % modulus] += std::fabs(cl[e]);
  return *std::max_element(sums.begin(), sums.end());
}

inline real contractivity_norm(int n, int j, int L, real alpha) { return contractivity_norm(symbol(n, alpha), j, L); }

/// Step data +10 (i <= -1), -10 (i >= 0), refined k+1 times on the whole line.
/// Returns (10 - P[-2^{k+1}], P[0] + 10); both positive means no undershoot.
inline std::pair<real, real> gibbs_margins(int n, int k, real alpha) {
  const Rules r = combined_rules(n, alpha);
  long lo = -1;
  std::vector<real> v{10, -10};
  const auto at = [&](long i) -> real {
    if (i < lo) return 10;
    if (i >= lo + static_cast<long>(v.size())) return -10;
    return v[static_cast<std::size_t>(i - lo)];
  };
  for (int level = 0; level <= k; ++level) {
    const long hi = lo + static_cast<long>(v.size()) - 1;
    const long new_lo = 2 * lo - 2 * n - 1;
    const long new_hi = 2 * hi + 2 * n + 1;
    std::vector<real> w;
    for (long o = new_lo; o <= new_hi; ++o) {
      const long i = (o >= 0 ? o : o - 1) / 2;
      const bool even = o - 2 * i == 0;
      const auto& taps = even ? r.even : r.odd;
      real s = 0;
      for (std::size_t t = 0; t < taps.size(); ++t) s += taps[t] * at(i + static_cast<long>(t) - n);
      w.push_back(s);
    }
    lo = new_lo;
    v = std::move(w);
  }
  return {10 - at(-(1L << (k + 1))), at(0) + 10};
}

}  // namespace oracle
