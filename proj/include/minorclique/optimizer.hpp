#pragma once
// The shape optimizer. Everything here runs on the two integers that
// determine whether K(a,b) contains a connected minor H: t = |V(H)| and
// x = x(H), the missing-matching size. K(a,b) is H-minor-free iff
//     a >= x :  3a + 2b < 2t - x
//     a <  x :  2a + b  < t
// (strict integer inequalities; 0 <= x <= t/2 always).
//
// Two relaxations of "maximize 3^a 2^b over minor-free shapes" appear:
// the integer program over actual shapes (IP) and its linear relaxation
// over real exponent pairs (LP). For a single constraint the LP optimum
// is max(2^t, 3^((2t-x)/3)) and 3*IP >= LP; for a family the LP optimum
// sits on an extreme point of the lower envelope of the one-bend
// constraint curves and 6*IP >= LP. Both factors are checked here
// whenever an optimum is produced -- they are theorems, so a violation
// throws logic_error.
//
// All comparisons between 3^a 2^b values are exact: integer exponents
// compare as big integers, rational exponents are scaled by the common
// denominator first (see numeric.hpp). Envelope coordinates are exact
// rationals; their denominators only ever land in {1,2,3,6}.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "minorclique/graph.hpp"
#include "minorclique/matching.hpp"
#include "minorclique/numeric.hpp"

namespace minorclique {

struct ForbiddenMinorSpec {
  int t = 0;         // |V(H)|
  int x = 0;         // missing-matching size of H
  bool connected = true;
  std::optional<Graph> graph;  // present when built from a concrete H

  static ForbiddenMinorSpec from_params(int t, int x) {
    check(t, x);
    return {t, x, true, std::nullopt};
  }

  static ForbiddenMinorSpec from_graph(const Graph& h) {
    int t = h.vertex_count();
    if (t < 1)
      throw std::invalid_argument("ForbiddenMinorSpec: H must be nonempty");
    int x = missing_matching_size(h);
    check(t, x);
    return {t, x, is_connected(h), h};
  }

 private:
  static void check(int t, int x) {
    if (t < 1) throw std::invalid_argument("ForbiddenMinorSpec: need t >= 1");
    if (x < 0 || 2 * x > t)
      throw std::invalid_argument(
          "ForbiddenMinorSpec: need 0 <= x <= t/2 (got t=" +
          std::to_string(t) + ", x=" + std::to_string(x) + ")");
  }
};

namespace detail {

inline void check_family(const std::vector<ForbiddenMinorSpec>& family) {
  if (family.empty())
    throw std::invalid_argument("minor family must be nonempty");
  for (const auto& s : family) {
    if (s.t < 1 || s.x < 0 || 2 * s.x > s.t)
      throw std::invalid_argument("minor family member out of range");
    if (!s.connected)
      throw std::invalid_argument(
          "shape analysis requires connected forbidden minors");
  }
}

}  // namespace detail

// The minor-freeness predicate in its exact integer form.
inline bool shape_minor_free(const ForbiddenMinorSpec& spec,
                             const ShapeParams& shape) {
  detail::check_family({spec});
  if (shape.a < 0 || shape.b < 0)
    throw std::invalid_argument("shape_minor_free: negative shape parameter");
  long t = spec.t, x = spec.x, a = shape.a, b = shape.b;
  if (a >= x) return 3 * a + 2 * b < 2 * t - x;
  return 2 * a + b < t;
}

// Largest b with K(a,b) H-free, or -1 if none. Non-increasing in a.
inline long shape_b_cap(const ForbiddenMinorSpec& spec, long a) {
  if (a < 0) throw std::invalid_argument("shape_b_cap: negative a");
  long t = spec.t, x = spec.x;
  if (a < x) return t - 2 * a - 1;  // >= 0 whenever a < x <= t/2
  long q = 2 * t - x - 3 * a - 1;
  return q < 0 ? -1 : q / 2;
}

inline long family_b_cap(const std::vector<ForbiddenMinorSpec>& family,
                         long a) {
  long cap = shape_b_cap(family[0], a);
  for (std::size_t i = 1; i < family.size(); ++i)
    cap = std::min(cap, shape_b_cap(family[i], a));
  return cap;
}

struct ShapeOptimum {
  ShapeParams ip_shape;  // best feasible shape
  BigInt ip_count;       // 3^a 2^b there
  Rational lp_a, lp_b;   // LP maximizer (exponent pair)
  double lp_log2 = 0;    // display value of a*log2(3) + b
};

namespace detail {

inline double log2_value(const Rational& a, const Rational& b) {
  return static_cast<double>(a) * 1.5849625007211562 +
         static_cast<double>(b);
}

// IP by direct scan: caps are non-increasing in a, so the loop runs
// until the cap goes negative. Values 3^a 2^b are pairwise distinct,
// so the argmax is unique.
inline std::pair<ShapeParams, BigInt> ip_scan(
    const std::vector<ForbiddenMinorSpec>& family) {
  ShapeParams best;
  BigInt best_val = -1;
  for (long a = 0;; ++a) {
    long b = family_b_cap(family, a);
    if (b < 0) break;
    BigInt val = shape_count_value(a, b);
    if (val > best_val) {
      best_val = val;
      best = {a, b};
    }
  }
  // the a=0 cap is never negative, so at least one shape was scanned
  return {best, best_val};
}

}  // namespace detail

// Single forbidden minor. The LP optimum is one of the two endpoints
// (0,t) and ((2t-x)/3, 0); the bend is never optimal. Endpoints are
// compared exactly by cubing. Checks the factor-3 guarantee.
inline ShapeOptimum single_minor_optimum(const ForbiddenMinorSpec& spec) {
  detail::check_family({spec});
  ShapeOptimum out;
  auto [shape, count] = detail::ip_scan({spec});
  out.ip_shape = shape;
  out.ip_count = count;
  long t = spec.t, x = spec.x;
  BigInt clique_cubed = pow2(3 * t);    // (2^t)^3
  BigInt triangle_cubed = pow3(2 * t - x);  // (3^((2t-x)/3))^3
  if (clique_cubed > triangle_cubed) {
    out.lp_a = 0;
    out.lp_b = t;
  } else {
    out.lp_a = Rational(2 * t - x, 3);
    out.lp_b = 0;
  }
  out.lp_log2 = detail::log2_value(out.lp_a, out.lp_b);
  BigInt lhs = boost::multiprecision::pow(out.ip_count * 3, 3u);
  if (lhs < clique_cubed || lhs < triangle_cubed)
    throw std::logic_error("single_minor_optimum: factor-3 guarantee failed");
  return out;
}

// ---- lower envelope ----

struct EnvelopePoint {
  Rational a, b;
};

struct LowerEnvelope {
  std::vector<std::pair<int, int>> constraints;  // deduped (t, x)
  std::vector<EnvelopePoint> extremes;           // a strictly increasing
  Rational a_root;                               // where the envelope hits b=0
};

// Pointwise minimum of the one-bend curves
//   f_i(a) = t_i - 2a            for a <= x_i
//          = (2 t_i - x_i - 3a)/2 for a >= x_i
// clipped to the first quadrant. Each curve is convex (slope steps
// from -2 up to -3/2) but their pointwise minimum need not be, so the
// region under the envelope can be non-convex and every breakpoint is
// kept as an extreme point, along with both axis endpoints. Every
// candidate breakpoint is
// either a bend (a = x_i) or an intersection of two of the 2k lines,
// so all of them are enumerated exactly and filtered by slope change.
inline LowerEnvelope envelope_build(
    const std::vector<ForbiddenMinorSpec>& family) {
  detail::check_family(family);
  LowerEnvelope env;
  for (const auto& s : family) {
    std::pair<int, int> c{s.t, s.x};
    if (std::find(env.constraints.begin(), env.constraints.end(), c) ==
        env.constraints.end())
      env.constraints.push_back(c);
  }
  auto value_at = [&](const Rational& a) {
    Rational best;
    bool first = true;
    for (auto [t, x] : env.constraints) {
      Rational f = (a <= x) ? Rational(t) - 2 * a
                            : Rational(2 * t - x) / 2 - Rational(3, 2) * a;
      if (first || f < best) {
        best = f;
        first = false;
      }
    }
    return best;
  };
  env.a_root = Rational(2 * env.constraints[0].first - env.constraints[0].second, 3);
  for (auto [t, x] : env.constraints)
    env.a_root = std::min(env.a_root, Rational(2 * t - x, 3));

  // candidate breakpoints: 0, the root, every bend, every pairwise
  // line intersection inside [0, a_root]
  std::vector<Rational> cand{Rational(0), env.a_root};
  std::vector<std::pair<Rational, Rational>> lines;  // (slope, intercept)
  for (auto [t, x] : env.constraints) {
    cand.emplace_back(x);
    lines.emplace_back(Rational(-2), Rational(t));
    lines.emplace_back(Rational(-3, 2), Rational(2 * t - x) / 2);
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].first == lines[j].first) continue;
      Rational a = (lines[j].second - lines[i].second) /
                   (lines[i].first - lines[j].first);
      cand.push_back(a);
    }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::erase_if(cand, [&](const Rational& a) {
    return a < 0 || a > env.a_root;
  });

  std::vector<Rational> val;
  val.reserve(cand.size());
  for (const Rational& a : cand) val.push_back(value_at(a));
  for (std::size_t k = 0; k < cand.size(); ++k) {
    bool keep = k == 0 || k + 1 == cand.size();
    if (!keep) {
      Rational left = (val[k] - val[k - 1]) / (cand[k] - cand[k - 1]);
      Rational right = (val[k + 1] - val[k]) / (cand[k + 1] - cand[k]);
      keep = left != right;
    }
    if (keep) env.extremes.push_back({cand[k], val[k]});
  }
  return env;
}

// Family versions. The LP optimum is the best envelope extreme point;
// the IP scans shapes against all caps. Checks the factor-6 guarantee.
inline ShapeOptimum family_ip_optimum(
    const std::vector<ForbiddenMinorSpec>& family) {
  detail::check_family(family);
  ShapeOptimum out;
  auto [shape, count] = detail::ip_scan(family);
  out.ip_shape = shape;
  out.ip_count = count;
  LowerEnvelope env = envelope_build(family);
  bool first = true;
  for (const EnvelopePoint& p : env.extremes) {
    if (first || compare_pow23(p.a, p.b, out.lp_a, out.lp_b) > 0) {
      out.lp_a = p.a;
      out.lp_b = p.b;
      first = false;
    }
  }
  out.lp_log2 = detail::log2_value(out.lp_a, out.lp_b);
  if (!covers_pow23(out.ip_count, 6, out.lp_a, out.lp_b))
    throw std::logic_error("family_ip_optimum: factor-6 guarantee failed");
  return out;
}

struct ExtremalExponent {
  LowerEnvelope envelope;
  ShapeOptimum optimum;
};

inline ExtremalExponent extremal_exponent(
    const std::vector<ForbiddenMinorSpec>& family) {
  return {envelope_build(family), family_ip_optimum(family)};
}

// ---- closed-form bounds ----

// c(G) <= 3^(s/3) for graphs with s vertices, kept integer-exact as
// c^3 <= 3^s. K(s/3, 0) attains it when 3 | s.
struct KsBound {
  int s = 0;
  BigInt three_pow_s;
  std::optional<ShapeParams> equality_witness;
  bool admits(const BigInt& count) const {
    return count * count * count <= three_pow_s;
  }
};

inline KsBound k_s_bound(int s) {
  if (s < 0) throw std::invalid_argument("k_s_bound: negative s");
  KsBound out;
  out.s = s;
  out.three_pow_s = pow3(s);
  if (s % 3 == 0) out.equality_witness = ShapeParams{s / 3, 0};
  return out;
}

// Extremal count for K_t-minor-free graphs on n vertices in the range
// t <= n <= (4t-2)/3: the shape K(x, n-2x) with x = 2(n-t)+1, count
// 3^x 2^(n-2x), tracked by the exponent pair (4t-3n, 2(n-t)) through
// the identity 4c = 3 * 2^(4t-3n) * 3^(2(n-t)). Below the range
// (n < t) the host K_n itself is K_t-minor-free and the answer is 2^n.
struct SmallNBound {
  int t = 0, n = 0;
  bool clique_case = false;
  ShapeParams shape;
  BigInt count;
  long pow2_exp = 0, pow3_exp = 0;
};

inline SmallNBound small_n_bound(int t, int n) {
  if (t < 1 || n < 0) throw std::invalid_argument("small_n_bound: bad input");
  SmallNBound out;
  out.t = t;
  out.n = n;
  if (n < t) {
    out.clique_case = true;
    out.shape = {0, n};
    out.count = pow2(n);
    out.pow2_exp = n;
    out.pow3_exp = 0;
    return out;
  }
  if (3 * n > 4 * t - 2)
    throw std::invalid_argument("small_n_bound: need n <= (4t-2)/3");
  long x = 2L * (n - t) + 1;
  out.shape = {x, n - 2 * x};
  out.count = shape_count_value(x, n - 2 * x);
  out.pow2_exp = 4L * t - 3 * n;
  out.pow3_exp = 2L * (n - t);
  if (out.count * 4 != 3 * shape_count_value(out.pow3_exp, out.pow2_exp))
    throw std::logic_error("small_n_bound: exponent identity failed");
  return out;
}

// 2^(t-2) (n - t + 3), valid for t >= 3 and n >= t-2.
inline BigInt wood_bound(int t, int n) {
  if (t < 3) throw std::invalid_argument("wood_bound: need t >= 3");
  if (n < t - 2) throw std::invalid_argument("wood_bound: need n >= t-2");
  return pow2(t - 2) * (n - t + 3);
}

// ---- extremal disjoint unions ----

struct UnionPiece {
  ShapeParams shape;
  long copies = 0;
};

struct UnionConstruction {
  std::vector<UnionPiece> pieces;  // sorted by (size, a)
  BigInt count;                    // census of the union, incl. empty clique
};

// Best disjoint union of minor-free shapes on exactly n vertices:
// maximizes 1 + sum (3^a 2^b - 1) over multisets of feasible shapes.
// DP over total size; per size only the best shape can matter. The
// single-vertex shape K(0,1) is feasible whenever every t_i >= 2, so
// every residue is reachable; a family containing a 1-vertex minor
// admits no nonempty minor-free graph at all and is rejected.
inline UnionConstruction extremal_union_construct(
    const std::vector<ForbiddenMinorSpec>& family, long n) {
  detail::check_family(family);
  if (n < 0) throw std::invalid_argument("extremal_union_construct: n < 0");
  UnionConstruction out;
  if (n == 0) {
    out.count = 1;
    return out;
  }
  // best piece value per size; values are pairwise distinct
  std::map<long, std::pair<ShapeParams, BigInt>> piece;  // size -> (shape, 3^a 2^b - 1)
  for (long a = 0;; ++a) {
    long cap = family_b_cap(family, a);
    if (cap < 0) break;
    for (long b = 0; b <= cap; ++b) {
      long size = 2 * a + b;
      if (size == 0 || size > n) continue;
      BigInt val = shape_count_value(a, b) - 1;
      auto it = piece.find(size);
      if (it == piece.end() || val > it->second.second)
        piece[size] = {ShapeParams{a, b}, val};
    }
  }
  if (piece.empty())
    throw std::invalid_argument(
        "extremal_union_construct: family admits no nonempty minor-free "
        "shape (some member has a single vertex)");
  std::vector<BigInt> dp(n + 1, -1);
  std::vector<long> take(n + 1, -1);
  dp[0] = 0;
  for (long m = 1; m <= n; ++m)
    for (const auto& [size, sv] : piece) {
      if (size > m || dp[m - size] < 0) continue;
      BigInt cand = dp[m - size] + sv.second;
      if (cand > dp[m]) {
        dp[m] = cand;
        take[m] = size;
      }
    }
  if (dp[n] < 0)
    throw std::logic_error("extremal_union_construct: size unreachable");
  out.count = dp[n] + 1;
  std::map<std::pair<long, long>, long> copies;  // (size, a) -> multiplicity
  for (long m = n; m > 0; m -= take[m])
    ++copies[{take[m], piece[take[m]].first.a}];
  for (const auto& [key, cnt] : copies)
    out.pieces.push_back({piece[key.first].first, cnt});
  return out;
}

inline Graph realize(const UnionConstruction& c) {
  std::vector<Graph> parts;
  for (const UnionPiece& p : c.pieces)
    for (long i = 0; i < p.copies; ++i)
      parts.push_back(complement_of_matching(p.shape));
  return Graph::disjoint_union(parts);
}

}  // namespace minorclique
