#include "convexgrid/lattice_numbers.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace convexgrid {

namespace mp = boost::multiprecision;

Rat64::Rat64(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("Rat64: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

long long Rat64::floor() const {
  long long q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

long long Rat64::ceil() const {
  long long q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

std::string Rat64::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rat64& a, const Rat64& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

Rat64 operator+(const Rat64& a, const Rat64& b) {
  return Rat64(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rat64 operator-(const Rat64& a, const Rat64& b) {
  return Rat64(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rat64 operator*(const Rat64& a, const Rat64& b) { return Rat64(a.num * b.num, a.den * b.den); }

bool PrimitiveVector::slope_less(const PrimitiveVector& o) const {
  return static_cast<__int128>(v) * o.u < static_cast<__int128>(o.v) * u;
}

SieveTables sieve_up_to(int n) {
  SieveTables t;
  t.phi.assign(n + 1, 0);
  t.mu.assign(n + 1, 0);
  if (n >= 1) {
    t.phi[1] = 1;
    t.mu[1] = 1;
  }
  std::vector<int> smallest(n + 1, 0);
  for (int i = 2; i <= n; ++i) {
    if (smallest[i] == 0) {
      smallest[i] = i;
      t.primes.push_back(i);
      t.phi[i] = i - 1;
      t.mu[i] = -1;
    }
    for (int p : t.primes) {
      long long ip = static_cast<long long>(i) * p;
      if (p > smallest[i] || ip > n) break;
      smallest[ip] = p;
      if (i % p == 0) {
        t.phi[ip] = t.phi[i] * p;
        t.mu[ip] = 0;
      } else {
        t.phi[ip] = t.phi[i] * (p - 1);
        t.mu[ip] = -t.mu[i];
      }
    }
  }
  t.harmonic.reserve(n + 1);
  t.harmonic.push_back(BigRat(0));
  for (int i = 1; i <= n; ++i) t.harmonic.push_back(t.harmonic[i - 1] + BigRat(1, i));
  return t;
}

long long totient(long long i) {
  long long result = i, x = i;
  for (long long p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      result -= result / p;
      while (x % p == 0) x /= p;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

int moebius(long long i) {
  int k = 0;
  long long x = i;
  for (long long p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      x /= p;
      if (x % p == 0) return 0;
      ++k;
    }
  }
  if (x > 1) ++k;
  return k % 2 == 0 ? 1 : -1;
}

std::vector<PrimitiveVector> primitive_in_triangle(const TriangleSpec& spec) {
  std::vector<PrimitiveVector> out;
  if (spec.w < 1 || spec.t.num < 0) return out;
  for (long long u = 1; u <= spec.w; ++u) {
    // v <= u*t/w  <=>  v*w*t.den <= u*t.num
    long long vmax = Rat64(u * spec.t.num, spec.w * spec.t.den).floor();
    for (long long v = 0; v <= vmax; ++v)
      if (std::gcd(u, v) == 1) out.push_back({u, v});
  }
  std::sort(out.begin(), out.end(), [](const PrimitiveVector& a, const PrimitiveVector& b) {
    if (a.slope_less(b)) return true;
    if (b.slope_less(a)) return false;
    return a.u < b.u;  // equal slopes cannot happen for distinct primitives
  });
  return out;
}

long long count_f(long long w, Rat64 t) {
  if (w < 1 || t.num < 0) return 0;
  long long count = 0;
  for (long long u = 1; u <= w; ++u) {
    long long vmax = Rat64(u * t.num, w * t.den).floor();
    for (long long v = 0; v <= vmax; ++v)
      if (std::gcd(u, v) == 1) ++count;
  }
  return count;
}

Theorem2Report verify_theorem2_high(int w_max) {
  Theorem2Report rep;
  rep.w_max = w_max;
  SieveTables tables = sieve_up_to(std::max(1, w_max));
  for (int w = 1; w <= w_max && rep.pass; ++w) {
    // Vectors entering while t runs from 2 to w+2 have slope in (2/w, (w+2)/w];
    // everything with slope <= 2/w is present from the start.
    TriangleSpec spec{w, Rat64(w + 2)};
    auto vecs = primitive_in_triangle(spec);
    long long current = 0;
    std::vector<Rat64> events;
    for (const auto& q : vecs) {
      Rat64 tq(q.v * w, q.u);  // vector enters T(w,t) when t = w*v/u
      if (tq <= Rat64(2))
        ++current;
      else if (tq <= Rat64(w + 2))
        events.push_back(tq);
    }
    std::sort(events.begin(), events.end());
    auto check_at = [&](Rat64 t_sup) {
      ++rep.intervals_checked;
      // current >= w*t_sup/4  <=>  4*current*den >= w*num
      __int128 lhs = static_cast<__int128>(4) * current * t_sup.den;
      __int128 rhs = static_cast<__int128>(w) * t_sup.num;
      if (lhs < rhs) {
        rep.pass = false;
        rep.fail_w = w;
        rep.fail_t = t_sup;
        rep.fail_count = current;
      }
    };
    size_t i = 0;
    while (i < events.size() && rep.pass) {
      check_at(events[i]);
      Rat64 s = events[i];
      while (i < events.size() && events[i] == s) {
        ++current;
        ++i;
      }
    }
    if (rep.pass) check_at(Rat64(w + 2));
    // Side condition from the periodic decomposition: C/w > w/4.
    long long c = 0;
    for (int i2 = 1; i2 <= w; ++i2) c += tables.phi[i2];
    if (4 * c <= static_cast<long long>(w) * w) rep.avg_slope_failures.push_back(w);
  }
  return rep;
}

BigRat lower_bound_wide(long long w, Rat64 t) {
  long long ft = t.floor();
  if (ft < 1) return BigRat(0);
  BigRat sum(1);
  for (long long i = 1; i <= ft; ++i) {
    BigRat coeff = BigRat(w, i) - BigRat(w, ft) - 1;
    sum += coeff * totient(i);
  }
  return sum;
}

long long count_rows012(long long w, Rat64 t) {
  if (t.num <= 0) return 1;
  // ceil(w/t) and ceil(w/t - 1/2) as exact rationals
  Rat64 w_over_t(w * t.den, t.num);
  long long c1 = w_over_t.ceil();
  long long c2 = (w_over_t - Rat64(1, 2)).ceil();
  long long ceil_w2 = (w + 1) / 2;
  return 1 + (w + 1 - c1) + (ceil_w2 - c2);
}

namespace {
BigInt rat_floor(const BigRat& x) {
  BigInt q = mp::numerator(x) / mp::denominator(x);
  if (mp::numerator(x) % mp::denominator(x) != 0 && x < 0) --q;
  return q;
}
BigInt rat_ceil(const BigRat& x) {
  BigInt q = mp::numerator(x) / mp::denominator(x);
  if (mp::numerator(x) % mp::denominator(x) != 0 && x > 0) ++q;
  return q;
}
}  // namespace

Bracket lattice_bounds_right_triangle(const BigRat& a, const BigRat& b) {
  BigRat area = a * b / 2;
  return {area, area + BigRat(rat_floor(a)) + BigRat(rat_floor(b)) + 1};
}

long long lattice_count_right_triangle(const BigRat& a, const BigRat& b) {
  // Triangle (0,0), (a,0), (0,b); points with x in [0, floor(a)],
  // 0 <= y <= b*(1 - x/a).
  if (a == 0) return static_cast<long long>(rat_floor(b)) + 1;  // vertical segment
  long long count = 0;
  long long xmax = static_cast<long long>(rat_floor(a));
  for (long long x = 0; x <= xmax; ++x) {
    BigRat ymax = b * (BigRat(1) - BigRat(x) / a);
    if (ymax < 0) break;
    count += static_cast<long long>(rat_floor(ymax)) + 1;
  }
  return count;
}

Bracket lattice_bounds_Tstar(const BigRat& a, const BigRat& b) {
  BigRat half = a * b / 2;
  return {half - a - b + a / (2 * b), half + b - a / (2 * b)};
}

long long lattice_count_Tstar(const BigRat& a, const BigRat& b) {
  // T = (0,0), (a,0), (a,b): y <= (b/a) x, x <= a; restrict to y >= 1.
  long long count = 0;
  long long ymax = static_cast<long long>(rat_floor(b));
  long long xmax = static_cast<long long>(rat_floor(a));
  for (long long y = 1; y <= ymax; ++y) {
    BigInt xmin = rat_ceil(a * BigRat(y) / b);
    long long lo = static_cast<long long>(xmin);
    if (lo <= xmax) count += xmax - lo + 1;
  }
  return count;
}

long long count_by_moebius(long long w, Rat64 t) {
  long long s = std::min(w, t.floor());
  long long total = 1;
  for (long long i = 1; i <= s; ++i) {
    int mu = moebius(i);
    if (mu == 0) continue;
    BigRat a = BigRat(w, i);
    BigRat b = BigRat(t.num, t.den * i);
    total += mu * lattice_count_Tstar(a, b);
  }
  return total;
}

namespace {
// Certified rational bounds: R6 < 6/pi^2, R3 < 3/pi^2, GAMMA_UB > gamma.
const BigRat kSixOverPiSqLower(6079, 10000);
const BigRat kThreeOverPiSqLower(30396355, 100000000);
const BigRat kEulerGammaUpper(57721567, 100000000);

BigRat harmonic_exact(long long n) {
  BigRat h(0);
  for (long long i = 1; i <= n; ++i) h += BigRat(1, i);
  return h;
}

// Rational upper bound on ln(x) via the bound ln(x) <= m*ln(2) + ln(r) with
// x = r*2^m, 1 <= r < 2, ln(2) < 693148/1000000 + eps and
// ln(r) <= r - 1 (valid for r >= 1).
const BigRat kLn2Upper(6931472, 10000000);

BigRat ln_upper(const BigRat& x) {
  if (x <= 1) return BigRat(0);
  BigRat r = x;
  long long m = 0;
  while (r >= 2) {
    r /= 2;
    ++m;
  }
  return BigRat(m) * kLn2Upper + (r - 1);
}
}  // namespace

BigRat lower_bound_medium(long long w, Rat64 t) {
  if (w < 2 || t < Rat64(2)) throw std::invalid_argument("lower_bound_medium: need w, t >= 2");
  BigRat tr(t.num, t.den);
  BigRat wt = BigRat(w) * tr;
  if (Rat64(w) <= t) {
    // Case 1: S = w.
    BigRat hw = harmonic_exact(w);
    return wt * (kThreeOverPiSqLower - BigRat(1, 2 * w) - 2 * hw / w);
  }
  // Case 2: S = floor(t).
  return BigRat(w) * tr * medium_factor_case2(w, t);
}

BigRat medium_factor_minwt_bound(long long n) {
  BigRat hn_ub = kEulerGammaUpper + ln_upper(BigRat(n + 1));
  return kThreeOverPiSqLower - BigRat(1, 2 * (n - 1)) - 2 * hn_ub / n;
}

BigRat medium_factor_case2(long long w, Rat64 t) {
  long long ft = t.floor();
  BigRat tr(t.num, t.den);
  BigRat hft = harmonic_exact(ft);
  return kThreeOverPiSqLower - BigRat(1) / (2 * (tr - 1)) - hft * (BigRat(1) / tr + BigRat(1, w));
}

}  // namespace convexgrid
