#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace convexgrid {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact small rational, normalized with positive denominator. Used for the
/// triangle height parameter t and event slopes; never a float.
struct Rat64 {
  long long num = 0;
  long long den = 1;

  Rat64() = default;
  Rat64(long long n) : num(n), den(1) {}
  Rat64(long long n, long long d);

  static Rat64 of(long long n, long long d) { return Rat64(n, d); }
  long long floor() const;
  long long ceil() const;
  bool is_integer() const { return den == 1; }
  double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend bool operator==(const Rat64& a, const Rat64& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rat64& a, const Rat64& b);
  friend bool operator<=(const Rat64& a, const Rat64& b) { return a < b || a == b; }
  friend bool operator>(const Rat64& a, const Rat64& b) { return b < a; }
  friend bool operator>=(const Rat64& a, const Rat64& b) { return b <= a; }
  friend Rat64 operator+(const Rat64& a, const Rat64& b);
  friend Rat64 operator-(const Rat64& a, const Rat64& b);
  friend Rat64 operator*(const Rat64& a, const Rat64& b);
};

/// Primitive lattice vector (u, v), gcd(u, v) = 1.
struct PrimitiveVector {
  long long u = 1;
  long long v = 0;
  /// Exact slope comparison v/u vs o.v/o.u.
  bool slope_less(const PrimitiveVector& o) const;
};

/// The right triangle T = (0,0), (w,0), (w,t).
struct TriangleSpec {
  long long w = 1;
  Rat64 t;
};

struct SieveTables {
  std::vector<int> phi;
  std::vector<int> mu;
  std::vector<int> primes;
  /// Harmonic numbers H_0..H_N as exact rationals.
  std::vector<BigRat> harmonic;
};

SieveTables sieve_up_to(int n);
long long totient(long long i);
int moebius(long long i);

/// All primitive vectors in T, sorted by increasing slope v/u; contains (1,0).
std::vector<PrimitiveVector> primitive_in_triangle(const TriangleSpec& spec);

/// |T cap P| by direct enumeration.
long long count_f(long long w, Rat64 t);

struct Theorem2Report {
  bool pass = true;
  int w_max = 0;
  long long intervals_checked = 0;
  // First failing supremum, if any.
  long long fail_w = -1;
  Rat64 fail_t;
  long long fail_count = -1;
  // Periodic-slope side condition C/w > w/4, reported per w but not binding.
  std::vector<int> avg_slope_failures;
};

/// Sweeps t upward through all event slopes in [2, w+2] for every w in
/// 1..w_max and checks count >= w*t/4 at the supremum of each event interval.
Theorem2Report verify_theorem2_high(int w_max);

/// Row-sum lower bound: 1 + sum_{i<=floor(t)} (w/i - w/floor(t) - 1) phi(i).
BigRat lower_bound_wide(long long w, Rat64 t);

/// Exact count for 2 <= t < 3 from the per-row formula on y = 0, 1, 2;
/// still a valid lower bound for t >= 3.
long long count_rows012(long long w, Rat64 t);

struct Bracket {
  BigRat low;
  BigRat high;
  bool contains(const BigInt& count) const { return low <= BigRat(count) && BigRat(count) <= high; }
};

/// Lemma bracket for an axis-aligned right triangle with legs a', b' and the
/// right angle on a grid point: [area, area + floor(a') + floor(b') + 1].
Bracket lattice_bounds_right_triangle(const BigRat& a, const BigRat& b);
/// Exact |T' cap Z^2| for the triangle (0,0), (a,0), (0,b) (right angle at the
/// origin); brute-force column scan.
long long lattice_count_right_triangle(const BigRat& a, const BigRat& b);

/// Bracket for T* = T cap {y >= 1}, T = (0,0), (a,0), (a,b):
/// [ab/2 - a - b + a/(2b), ab/2 + b - a/(2b)].
Bracket lattice_bounds_Tstar(const BigRat& a, const BigRat& b);
/// Exact |T* cap Z^2| by row scan.
long long lattice_count_Tstar(const BigRat& a, const BigRat& b);

/// Moebius inclusion-exclusion count, S = min(w, floor(t)):
/// 1 + sum_{i=1..S} mu(i) |(T/i)* cap Z^2|. Equals count_f exactly.
long long count_by_moebius(long long w, Rat64 t);

/// Closed-form lower bound for large triangles; returns the applicable case
/// (S = w for w <= t, else S = floor(t)). 6/pi^2 is replaced by the certified
/// rational lower bound 6079/10000 so the inequality direction is preserved.
BigRat lower_bound_medium(long long w, Rat64 t);

/// Factor 3/pi^2 - 1/(2(n-1)) - 2 H_n / n, with H_n bounded above by
/// gamma + ln(n+1) using certified rational constants. Used to check the
/// factor stays above 1/4 for n >= 250.
BigRat medium_factor_minwt_bound(long long n);

/// Case-2 factor 3/pi^2 - 1/(2(t-1)) - H_floor(t) (1/t + 1/w), exact H.
BigRat medium_factor_case2(long long w, Rat64 t);

}  // namespace convexgrid
