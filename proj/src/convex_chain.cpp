#include "convexgrid/convex_chain.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace convexgrid {

namespace {

inline __int128 cross(long long ax, long long ay, long long bx, long long by) {
  return static_cast<__int128>(ax) * by - static_cast<__int128>(ay) * bx;
}

// slope a = an/ad vs slope b = bn/bd, positive denominators
inline bool slope_lt(long long an, long long ad, long long bn, long long bd) {
  return static_cast<__int128>(an) * bd < static_cast<__int128>(bn) * ad;
}
inline bool slope_eq(long long an, long long ad, long long bn, long long bd) {
  return static_cast<__int128>(an) * bd == static_cast<__int128>(bn) * ad;
}

}  // namespace

bool ChainSolution::strictly_convex() const {
  for (size_t i = 1; i < points.size(); ++i)
    if (points[i].x <= points[i - 1].x) return false;
  for (size_t i = 2; i < points.size(); ++i) {
    long long ax = points[i - 1].x - points[i - 2].x, ay = points[i - 1].y - points[i - 2].y;
    long long bx = points[i].x - points[i - 1].x, by = points[i].y - points[i - 1].y;
    if (cross(ax, ay, bx, by) <= 0) return false;
  }
  return true;
}

std::vector<std::pair<long long, long long>> ChainSolution::edge_vectors() const {
  std::vector<std::pair<long long, long long>> e;
  for (size_t i = 1; i < points.size(); ++i)
    e.emplace_back(points[i].x - points[i - 1].x, points[i].y - points[i - 1].y);
  return e;
}

ChainSolution build_chain_primitive(const BoxSequence& boxes, long long k_cap) {
  const long long K = static_cast<long long>(boxes.positions.size());
  if (K > k_cap) throw std::invalid_argument("build_chain_primitive: K exceeds k_cap");
  ChainSolution sol;
  if (K == 0) return sol;
  const long long S = boxes.spacing, w = boxes.width, h = boxes.height;
  if (S <= w) throw std::invalid_argument("build_chain_primitive: spacing must exceed width");
  sol.points.resize(K);
  if (K == 1) {
    sol.points[0] = {boxes.positions[0] * S, 0};
    return sol;
  }

  const long long mid_r = K / 2;  // 0-based index of the second flat point
  const long long mid_l = mid_r - 1;
  sol.points[mid_l] = {boxes.positions[mid_l] * S + w, 0};
  sol.points[mid_r] = {boxes.positions[mid_r] * S, 0};

  const long long need_right = K - 1 - mid_r;
  const long long need_left = mid_l;
  const long long need = std::max(need_right, need_left);

  std::vector<PrimitiveVector> pool;
  if (w == 0) {
    for (long long v = 1; v <= need; ++v) pool.push_back({1, v});
  } else {
    Rat64 t = std::max(Rat64(2), Rat64(2 * K, w));
    auto all = primitive_in_triangle({w, t});
    for (const auto& q : all)
      if (q.v >= 1) pool.push_back(q);
    if (static_cast<long long>(pool.size()) < need)
      throw InsufficientPrimitives("need " + std::to_string(need) + " ascending vectors, have " +
                                   std::to_string(pool.size()));
  }

  auto place = [&](long long from, long long step, long long count) {
    long long x = sol.points[from].x, y = 0;
    for (long long j = 1; j <= count; ++j) {
      const auto& q = pool[j - 1];
      long long idx = from + step * j;
      long long lo = boxes.positions[idx] * S, hi = lo + w;
      long long dist = step > 0 ? lo - x : x - hi;
      long long s = (dist + q.u - 1) / q.u;
      if (s < 1) s = 1;
      x += step * s * q.u;
      if (x < lo || x > hi)
        throw BoxOverflow("x landed outside box " + std::to_string(idx));
      y += s * q.v;
      if (y > h)
        throw BoxOverflow("chain height " + std::to_string(y) + " exceeds box height " +
                          std::to_string(h));
      sol.points[idx] = {x, y};
    }
  };
  place(mid_r, +1, need_right);
  place(mid_l, -1, need_left);
  return sol;
}

long long greedy_chain(long long w, long long h, long long S, long long n_boxes) {
  if (n_boxes <= 1) return std::max<long long>(n_boxes, 0);
  long long cap = (n_boxes - 2) / 2;
  long long x = 0, y = 0, steps = 0;
  long long sn = 0, sd = 1;  // slope of the previous edge (the flat middle)
  while (steps < cap) {
    long long lo = (steps + 1) * S, hi = lo + w;
    long long best_n = 0, best_d = 0;
    for (long long dy = 1; dy + y <= h; ++dy) {
      long long dx_hi = hi - x, dx_lo = lo - x;
      if (sn > 0) {
        // largest dx with dy/dx > sn/sd, i.e. sn*dx < dy*sd
        long long bound = (dy * sd - 1) / sn;
        dx_hi = std::min(dx_hi, bound);
      }
      if (dx_hi < dx_lo) continue;
      if (best_d == 0 || slope_lt(dy, dx_hi, best_n, best_d) ||
          (slope_eq(dy, dx_hi, best_n, best_d) && dx_hi < best_d)) {
        best_n = dy;
        best_d = dx_hi;
      }
    }
    if (best_d == 0) break;
    x += best_d;
    y += best_n;
    sn = best_n;
    sd = best_d;
    ++steps;
  }
  return 2 + 2 * steps;
}

long long optimal_chain_dp(long long w, long long h, long long S, long long n_boxes) {
  if (n_boxes <= 1) return std::max<long long>(n_boxes, 0);
  const long long cap = (n_boxes - 1) / 2;
  const int W = static_cast<int>(w), H = static_cast<int>(h);
  const int P = (W + 1) * (H + 1);
  auto id = [&](int c, int yy) { return yy * (W + 1) + c; };

  // Frontier: minimal last-edge slope of any ascending chain with k edges
  // ending at offset point (c, y). Smaller slope dominates for extensions.
  std::vector<long long> mn(P, 0), md(P, 0), nn(P), nd(P);
  for (int c = 0; c <= W; ++c)
    for (int yy = 1; yy <= H; ++yy) {
      mn[id(c, yy)] = yy;       // first edge from (0, 0) of the flat box:
      md[id(c, yy)] = S + c;    // dx = S + c, the largest reachable
    }
  long long steps = 0;
  bool alive = H >= 1 && cap >= 1;
  if (alive) steps = 1;
  while (alive && steps < cap) {
    std::fill(nd.begin(), nd.end(), 0);
    bool any = false;
    for (int c1 = 0; c1 <= W; ++c1)
      for (int y1 = 1; y1 <= H; ++y1) {
        int o1 = id(c1, y1);
        if (md[o1] == 0) continue;
        for (int y2 = y1 + 1; y2 <= H; ++y2) {
          long long dy = y2 - y1;
          for (int c2 = 0; c2 <= W; ++c2) {
            long long dx = S + c2 - c1;
            if (!slope_lt(mn[o1], md[o1], dy, dx)) continue;
            int o2 = id(c2, y2);
            if (nd[o2] == 0 || slope_lt(dy, dx, nn[o2], nd[o2])) {
              nn[o2] = dy;
              nd[o2] = dx;
              any = true;
            }
          }
        }
      }
    if (!any) break;
    mn.swap(nn);
    md.swap(nd);
    ++steps;
  }
  if (!alive) steps = 0;
  // Two flat middle points plus descending and ascending halves of up to
  // `steps` edges each (any prefix of a maximal ascent is itself valid, so the
  // box budget can be spent asymmetrically). The closing edge of the polygon
  // runs between the two ends and is never collinear with the first or last
  // chain edge, so the n-gon closes strictly convex.
  return std::min(2 + 2 * steps, n_boxes);
}

namespace {

struct DfsEnv {
  long long w, h, S;
  long long n;  // chain length attempted
  std::vector<ChainPoint> pts;
  bool found = false;
};

bool closure_ok(const std::vector<ChainPoint>& p) {
  size_t n = p.size();
  if (n < 3) return true;
  long long ex1 = p[1].x - p[0].x, ey1 = p[1].y - p[0].y;
  long long exl = p[n - 1].x - p[n - 2].x, eyl = p[n - 1].y - p[n - 2].y;
  long long ecx = p[0].x - p[n - 1].x, ecy = p[0].y - p[n - 1].y;
  return cross(exl, eyl, ecx, ecy) != 0 && cross(ecx, ecy, ex1, ey1) != 0;
}

void dfs(DfsEnv& env, long long box) {
  if (env.found) return;
  if (box == env.n) {
    if (closure_ok(env.pts)) env.found = true;
    return;
  }
  long long lo = box * env.S, hi = lo + env.w;
  for (long long yy = 0; yy <= env.h && !env.found; ++yy)
    for (long long xx = lo; xx <= hi && !env.found; ++xx) {
      if (!env.pts.empty() && xx <= env.pts.back().x) continue;
      if (env.pts.size() >= 2) {
        const auto& a = env.pts[env.pts.size() - 2];
        const auto& b = env.pts.back();
        if (cross(b.x - a.x, b.y - a.y, xx - b.x, yy - b.y) <= 0) continue;
      }
      env.pts.push_back({xx, yy});
      dfs(env, box + 1);
      env.pts.pop_back();
    }
}

}  // namespace

long long exhaustive_max_ngon(long long w, long long h, long long S, long long n_boxes) {
  for (long long n = n_boxes; n >= 3; --n) {
    DfsEnv env{w, h, S, n, {}, false};
    dfs(env, 0);
    if (env.found) return n;
  }
  return std::min<long long>(n_boxes, 2);
}

ChainSolution shear_chain(const ChainSolution& chain, LatticeDirection direction, long long w,
                          long long h) {
  if (direction == LatticeDirection::horizontal) return chain;
  if (w <= 0 || h % w != 0)
    throw ShearNotLatticeAligned("shear needs h to be a positive multiple of w");
  long long q = h / w;
  ChainSolution out = chain;
  for (auto& p : out.points) p.y += (direction == LatticeDirection::up_right ? q : -q) * p.x;
  return out;
}

}  // namespace convexgrid
