#include "hypertrop/newton.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <deque>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "hypertrop/canonical.hpp"
#include "hypertrop/errors.hpp"
#include "hypertrop/moduli.hpp"

namespace hypertrop {

namespace {

using Big = boost::multiprecision::cpp_rational;
using Segment = std::array<LatticePoint, 2>;

Segment make_segment(LatticePoint a, LatticePoint b) { return a < b ? Segment{a, b} : Segment{b, a}; }

std::int64_t cross(LatticePoint a, LatticePoint b) { return checked_add(checked_mul(a.x, b.y), -checked_mul(a.y, b.x)); }

LatticePoint minus(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }

std::array<Segment, 3> sides(const LatticeTriangle& t) {
  return {make_segment(t[0], t[1]), make_segment(t[1], t[2]), make_segment(t[0], t[2])};
}

LatticePoint third(const LatticeTriangle& t, const Segment& s) {
  for (const auto& p : t) {
    if (p != s[0] && p != s[1]) return p;
  }
  throw std::logic_error("segment is not a side of the triangle");
}

bool inside(const std::vector<LatticePoint>& poly, LatticePoint p) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (orientation(poly[i], poly[(i + 1) % poly.size()], p) < 0) return false;
  }
  return true;
}

bool on_boundary(const std::vector<LatticePoint>& poly, const Segment& s) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const LatticePoint a = poly[i];
    const LatticePoint b = poly[(i + 1) % poly.size()];
    if (orientation(a, b, s[0]) == 0 && orientation(a, b, s[1]) == 0) return true;
  }
  return false;
}

// Counterclockwise copy.
LatticeTriangle ccw(const LatticeTriangle& t) {
  return orientation(t[0], t[1], t[2]) > 0 ? t : LatticeTriangle{t[0], t[2], t[1]};
}

bool interiors_disjoint(const LatticeTriangle& a, const LatticeTriangle& b) {
  const auto sep = [](const LatticeTriangle& x, const LatticeTriangle& y) {
    for (int i = 0; i < 3; ++i) {
      const LatticePoint u = x[i];
      const LatticePoint v = x[(i + 1) % 3];
      if (std::all_of(y.begin(), y.end(), [&](LatticePoint p) { return orientation(u, v, p) <= 0; })) return true;
    }
    return false;
  };
  const auto ca = ccw(a);
  const auto cb = ccw(b);
  return sep(ca, cb) || sep(cb, ca);
}

std::int64_t doubled_area(const std::vector<LatticePoint>& poly) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) s = checked_add(s, cross(poly[i], poly[(i + 1) % poly.size()]));
  return s;
}

std::map<Segment, std::vector<int>> side_map(const std::vector<LatticeTriangle>& tris) {
  std::map<Segment, std::vector<int>> out;
  for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
    for (const auto& s : sides(tris[i])) out[s].push_back(i);
  }
  return out;
}

// Barycentric integer coefficients of s in the unimodular frame (p, q, r):
// s = p + alpha (q - p) + beta (r - p).
std::pair<std::int64_t, std::int64_t> frame(const LatticeTriangle& t, LatticePoint s) {
  const LatticePoint u = minus(t[1], t[0]);
  const LatticePoint v = minus(t[2], t[0]);
  const LatticePoint w = minus(s, t[0]);
  const std::int64_t det = cross(u, v);
  return {cross(w, v) / det, cross(u, w) / det};
}

void finish(LatticeTriangulation& t) { std::sort(t.triangles.begin(), t.triangles.end()); }

std::vector<std::string> staircases(std::int64_t bottom, std::int64_t top) {
  std::vector<std::string> out;
  std::string cur;
  const auto rec = [&](auto&& self, std::int64_t b, std::int64_t t) -> void {
    if (b == 0 && t == 0) {
      out.push_back(cur);
      return;
    }
    if (b > 0) {
      cur.push_back('B');
      self(self, b - 1, t);
      cur.pop_back();
    }
    if (t > 0) {
      cur.push_back('T');
      self(self, b, t - 1);
      cur.pop_back();
    }
  };
  rec(rec, bottom, top);
  return out;
}

std::vector<LatticeTriangle> staircase_triangles(std::int64_t a, std::int64_t c, const std::string& steps) {
  std::vector<LatticeTriangle> out;
  std::int64_t x = a;
  std::int64_t y = c;
  for (char s : steps) {
    if (s == 'B') {
      out.push_back(make_triangle({x, 0}, {x + 1, 0}, {y, 1}));
      ++x;
    } else {
      out.push_back(make_triangle({x, 0}, {y, 1}, {y + 1, 1}));
      ++y;
    }
  }
  return out;
}

struct CaseFrame {
  bool e1;
  bool e2;
  std::int64_t a, b, c, d;
  std::vector<LatticeTriangle> fixed;
};

CaseFrame case_frame(int g, bool e1, bool e2) {
  const std::int64_t G = g;
  CaseFrame f{e1, e2, 0, 2 * G + 2, 0, G + 1, {}};
  const LatticePoint apex{0, 2};
  if (e1) {
    f.fixed.push_back(make_triangle(apex, {0, 1}, {1, 0}));
    f.fixed.push_back(make_triangle(apex, {1, 0}, {1, 1}));
    f.fixed.push_back(make_triangle({0, 0}, {1, 0}, {0, 1}));
    f.a = 1;
    f.c = 1;
  } else {
    f.fixed.push_back(make_triangle(apex, {0, 1}, {1, 1}));
  }
  for (std::int64_t i = 1; i < G; ++i) f.fixed.push_back(make_triangle(apex, {i, 1}, {i + 1, 1}));
  if (e2) {
    f.fixed.push_back(make_triangle(apex, {G, 1}, {2 * G + 1, 0}));
    f.fixed.push_back(make_triangle(apex, {2 * G + 1, 0}, {G + 1, 1}));
    f.fixed.push_back(make_triangle({G + 1, 1}, {2 * G + 1, 0}, {2 * G + 2, 0}));
    f.b = 2 * G + 1;
    f.d = G;
  } else {
    f.fixed.push_back(make_triangle(apex, {G, 1}, {G + 1, 1}));
  }
  return f;
}

std::int64_t path_count(std::int64_t bottom, std::int64_t top) {
  std::vector<std::int64_t> row(top + 1, 1);
  for (std::int64_t i = 1; i <= bottom; ++i) {
    for (std::int64_t j = 1; j <= top; ++j) row[j] = checked_add(row[j], row[j - 1]);
  }
  return row[top];
}

std::string rat_str(const Rational& r) { return r.str(); }

Json point_json(LatticePoint p) { return Json::array({p.x, p.y}); }

}  // namespace

LatticeTriangle make_triangle(LatticePoint a, LatticePoint b, LatticePoint c) {
  LatticeTriangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

std::int64_t orientation(LatticePoint a, LatticePoint b, LatticePoint c) { return cross(minus(b, a), minus(c, a)); }

bool is_unimodular(const LatticeTriangle& t) { return std::abs(orientation(t[0], t[1], t[2])) == 1; }

std::vector<LatticePoint> lattice_points(const std::vector<LatticePoint>& polygon) {
  if (polygon.empty()) return {};
  auto [xlo, xhi] = std::minmax_element(polygon.begin(), polygon.end(),
                                        [](LatticePoint a, LatticePoint b) { return a.x < b.x; });
  auto [ylo, yhi] = std::minmax_element(polygon.begin(), polygon.end(),
                                        [](LatticePoint a, LatticePoint b) { return a.y < b.y; });
  std::vector<LatticePoint> out;
  for (std::int64_t x = xlo->x; x <= xhi->x; ++x) {
    for (std::int64_t y = ylo->y; y <= yhi->y; ++y) {
      if (inside(polygon, {x, y})) out.push_back({x, y});
    }
  }
  return out;
}

bool is_valid_triangulation(const LatticeTriangulation& t) {
  if (t.polygon.size() < 3 || doubled_area(t.polygon) <= 0) return false;
  if (static_cast<std::int64_t>(t.triangles.size()) != doubled_area(t.polygon)) return false;
  for (const auto& tri : t.triangles) {
    if (!is_unimodular(tri)) return false;
    for (const auto& p : tri) {
      if (!inside(t.polygon, p)) return false;
    }
  }
  for (std::size_t i = 0; i < t.triangles.size(); ++i) {
    for (std::size_t j = i + 1; j < t.triangles.size(); ++j) {
      if (!interiors_disjoint(t.triangles[i], t.triangles[j])) return false;
    }
  }
  for (const auto& [s, owners] : side_map(t.triangles)) {
    if (owners.size() != (on_boundary(t.polygon, s) ? 1U : 2U)) return false;
  }
  return true;
}

std::vector<LatticeTriangulation> trapezoid_triangulations(std::int64_t a, std::int64_t b, std::int64_t c,
                                                           std::int64_t d) {
  if (a >= b || c >= d) throw InvalidInputError("trapezoid: need a < b and c < d");
  std::vector<LatticeTriangulation> out;
  for (const auto& steps : staircases(b - a, d - c)) {
    LatticeTriangulation t;
    t.polygon = {{a, 0}, {b, 0}, {d, 1}, {c, 1}};
    t.triangles = staircase_triangles(a, c, steps);
    t.staircase = steps;
    finish(t);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<LatticePoint> delta_polygon(int g) { return {{0, 0}, {2LL * g + 2, 0}, {0, 2}}; }

std::vector<LatticeTriangulation> bridgeless_core_triangulations(int g) {
  if (g < 3 || g > 5) throw UnsupportedRangeError("census: genus must lie in [3, 5]");
  std::vector<LatticeTriangulation> out;
  for (auto [e1, e2] : {std::pair{false, false}, {true, false}, {false, true}, {true, true}}) {
    const CaseFrame f = case_frame(g, e1, e2);
    for (const auto& steps : staircases(f.b - f.a, f.d - f.c)) {
      LatticeTriangulation t;
      t.polygon = delta_polygon(g);
      t.triangles = f.fixed;
      for (const auto& tri : staircase_triangles(f.a, f.c, steps)) t.triangles.push_back(tri);
      t.staircase = steps;
      t.uses_e1 = e1;
      t.uses_e2 = e2;
      finish(t);
      out.push_back(std::move(t));
    }
  }
  return out;
}

CensusCounts count_bridgeless_core_triangulations(int g) {
  if (g < 3 || g > 20) throw UnsupportedRangeError("census count: genus must lie in [3, 20]");
  CensusCounts c;
  for (auto [e1, e2] : {std::pair{false, false}, {true, false}, {false, true}, {true, true}}) {
    const CaseFrame f = case_frame(g, e1, e2);
    const std::int64_t n = path_count(f.b - f.a, f.d - f.c);
    if (e1 && e2) {
      c.both += n;
    } else if (e1 || e2) {
      c.one += n;
    } else {
      c.neither += n;
    }
  }
  return c;
}

std::vector<LatticeTriangulation> flip_closure(const LatticeTriangulation& start, std::size_t limit) {
  const auto pts = lattice_points(start.polygon);
  if (pts.size() > 250) throw UnsupportedRangeError("flip closure: polygon too large");
  std::map<LatticePoint, unsigned char> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<unsigned char>(i);
  const auto encode = [&](const std::vector<LatticeTriangle>& tris) {
    std::string key;
    key.reserve(tris.size() * 3);
    for (const auto& t : tris) {
      for (const auto& p : t) key.push_back(static_cast<char>(index.at(p)));
    }
    return key;
  };
  const auto decode = [&](const std::string& key) {
    std::vector<LatticeTriangle> tris(key.size() / 3);
    for (std::size_t i = 0; i < tris.size(); ++i) {
      for (int k = 0; k < 3; ++k) tris[i][k] = pts[static_cast<unsigned char>(key[3 * i + k])];
    }
    return tris;
  };

  std::vector<LatticeTriangle> first = start.triangles;
  std::sort(first.begin(), first.end());
  std::unordered_set<std::string> seen{encode(first)};
  std::deque<std::string> queue{encode(first)};
  std::vector<std::string> order{queue.front()};
  while (!queue.empty()) {
    const auto tris = decode(queue.front());
    queue.pop_front();
    for (const auto& [s, owners] : side_map(tris)) {
      if (owners.size() != 2) continue;
      const LatticePoint r = third(tris[owners[0]], s);
      const LatticePoint q = third(tris[owners[1]], s);
      const std::int64_t o1 = orientation(r, q, s[0]);
      const std::int64_t o2 = orientation(r, q, s[1]);
      if (!((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0))) continue;
      std::vector<LatticeTriangle> next;
      next.reserve(tris.size());
      for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
        if (i != owners[0] && i != owners[1]) next.push_back(tris[i]);
      }
      next.push_back(make_triangle(r, q, s[0]));
      next.push_back(make_triangle(r, q, s[1]));
      std::sort(next.begin(), next.end());
      std::string key = encode(next);
      if (seen.insert(key).second) {
        if (seen.size() > limit) throw UnsupportedRangeError("flip closure: more triangulations than the limit");
        queue.push_back(key);
        order.push_back(std::move(key));
      }
    }
  }
  std::sort(order.begin(), order.end());
  std::vector<LatticeTriangulation> out;
  out.reserve(order.size());
  for (const auto& key : order) {
    LatticeTriangulation t;
    t.polygon = start.polygon;
    t.triangles = decode(key);
    out.push_back(std::move(t));
  }
  return out;
}

RegularLift regular_lift(const LatticeTriangulation& t) {
  const auto pts = lattice_points(t.polygon);
  const int n = static_cast<int>(pts.size());
  std::map<LatticePoint, int> index;
  for (int i = 0; i < n; ++i) index[pts[i]] = i;

  // One fold inequality per interior edge: h(s) - affine(s) >= 1.
  std::vector<std::vector<Big>> rows;
  for (const auto& [s, owners] : side_map(t.triangles)) {
    if (owners.size() != 2) continue;
    const LatticeTriangle& tri = t.triangles[owners[0]];
    const LatticePoint other = third(t.triangles[owners[1]], s);
    const auto [alpha, beta] = frame(tri, other);
    std::vector<Big> row(n, 0);
    row[index.at(other)] += 1;
    row[index.at(tri[0])] -= 1 - alpha - beta;
    row[index.at(tri[1])] -= alpha;
    row[index.at(tri[2])] -= beta;
    rows.push_back(std::move(row));
  }
  const int m = static_cast<int>(rows.size());

  // Phase one simplex: columns h (n), surplus (m), artificial (m), rhs.
  const int cols = n + 2 * m;
  std::vector<std::vector<Big>> tab(m + 1, std::vector<Big>(cols + 1, 0));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) tab[i][j] = rows[i][j];
    tab[i][n + i] = -1;
    tab[i][n + m + i] = 1;
    tab[i][cols] = 1;
    basis[i] = n + m + i;
  }
  // Objective row holds reduced costs of minimizing the artificial sum.
  for (int j = 0; j <= cols; ++j) {
    Big s = 0;
    for (int i = 0; i < m; ++i) s += tab[i][j];
    tab[m][j] = (j >= n + m && j < cols) ? Big(0) : Big(-s);
  }
  while (true) {
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (tab[m][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Big best;
    for (int i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      const Big ratio = tab[i][cols] / tab[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded direction; cannot happen for phase one
    const Big piv = tab[leave][enter];
    for (auto& x : tab[leave]) x /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      const Big f = tab[i][enter];
      for (int j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  RegularLift out;
  if (tab[m][cols] != 0) return out;

  std::vector<Big> h(n, 0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) h[basis[i]] = tab[i][cols];
  }
  boost::multiprecision::cpp_int scale = 1;
  for (const auto& x : h) {
    const auto d = boost::multiprecision::denominator(x);
    scale = scale / boost::multiprecision::gcd(scale, d) * d;
  }
  for (int i = 0; i < n; ++i) {
    const Big v = h[i] * Big(scale);
    const boost::multiprecision::cpp_int z = boost::multiprecision::numerator(v);
    if (z > std::numeric_limits<std::int64_t>::max() / 4) throw std::overflow_error("regular lift: heights too large");
    out.heights[pts[i]] = z.convert_to<std::int64_t>();
  }
  out.regular = induces(t, out.heights);
  if (!out.regular) throw std::logic_error("regular lift: feasible heights do not induce the triangulation");
  return out;
}

bool induces(const LatticeTriangulation& t, const std::map<LatticePoint, std::int64_t>& heights) {
  const auto pts = lattice_points(t.polygon);
  for (const auto& p : pts) {
    if (!heights.count(p)) return false;
  }
  for (const auto& tri : t.triangles) {
    const std::int64_t h0 = heights.at(tri[0]);
    const std::int64_t h1 = heights.at(tri[1]);
    const std::int64_t h2 = heights.at(tri[2]);
    for (const auto& s : pts) {
      if (s == tri[0] || s == tri[1] || s == tri[2]) continue;
      const auto [alpha, beta] = frame(tri, s);
      const std::int64_t plane = checked_add(checked_add(h0, checked_mul(alpha, h1 - h0)), checked_mul(beta, h2 - h0));
      if (heights.at(s) <= plane) return false;
    }
  }
  return true;
}

std::pair<LatticePoint, Rational> primitive_direction(const Rational& dx, const Rational& dy) {
  if (dx.sign() == 0 && dy.sign() == 0) throw InvalidInputError("primitive direction of the zero vector");
  const std::int64_t l = lcm_checked(dx.den(), dy.den());
  const std::int64_t ix = (dx * Rational(l)).num();
  const std::int64_t iy = (dy * Rational(l)).num();
  const std::int64_t gd = std::gcd(ix, iy);
  return {{ix / gd, iy / gd}, Rational(gd, l)};
}

EmbeddedCurve dual_curve(const LatticeTriangulation& t, const std::map<LatticePoint, std::int64_t>& heights) {
  EmbeddedCurve c;
  c.triangulation = t;
  for (const auto& tri : t.triangles) {
    const LatticePoint u = minus(tri[1], tri[0]);
    const LatticePoint v = minus(tri[2], tri[0]);
    const Rational r1 = Rational(heights.at(tri[0])) - Rational(heights.at(tri[1]));
    const Rational r2 = Rational(heights.at(tri[0])) - Rational(heights.at(tri[2]));
    const Rational det(cross(u, v));
    c.vertices.push_back({(r1 * Rational(v.y) - r2 * Rational(u.y)) / det, (Rational(u.x) * r2 - Rational(v.x) * r1) / det});
  }
  for (const auto& [s, owners] : side_map(t.triangles)) {
    if (owners.size() == 2) {
      CurveEdge e;
      e.from = owners[0];
      e.to = owners[1];
      e.dual = s;
      const auto [dir, k] = primitive_direction(c.vertices[e.to].x - c.vertices[e.from].x,
                                                c.vertices[e.to].y - c.vertices[e.from].y);
      e.direction = dir;
      e.length = k;
      c.edges.push_back(e);
    } else {
      CurveRay r;
      r.vertex = owners[0];
      r.dual = s;
      const LatticePoint along = minus(s[1], s[0]);
      const LatticePoint toward = minus(third(t.triangles[owners[0]], s), s[0]);
      LatticePoint normal{-along.y, along.x};
      if (normal.x * toward.x + normal.y * toward.y < 0) normal = {along.y, -along.x};
      r.direction = normal;
      c.rays.push_back(r);
    }
  }
  return c;
}

namespace {

Core prune(const std::vector<std::string>& vids, const std::vector<Edge>& edges, const std::vector<Rational>& lengths,
           const std::vector<int>& vorigin, const std::vector<int>& eorigin) {
  const int n = static_cast<int>(vids.size());
  std::vector<char> alive_e(edges.size(), 1);
  std::vector<char> alive_v(n, 1);
  std::vector<int> val(n, 0);
  for (const auto& e : edges) {
    ++val[e.u];
    ++val[e.v];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!alive_v[v] || val[v] > 1) continue;
      if (val[v] == 0) continue;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (alive_e[e] && (edges[e].u == v || edges[e].v == v)) {
          alive_e[e] = 0;
          --val[edges[e].u];
          --val[edges[e].v];
        }
      }
      alive_v[v] = 0;
      changed = true;
    }
  }
  std::vector<int> remap(n, -1);
  Core k;
  std::vector<std::string> ids;
  for (int v = 0; v < n; ++v) {
    if (alive_v[v] && val[v] > 0) {
      remap[v] = static_cast<int>(ids.size());
      ids.push_back(vids[v]);
      k.vertex_origin.push_back(vorigin[v]);
    }
  }
  std::vector<Edge> kept;
  std::vector<Rational> kept_len;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!alive_e[e]) continue;
    kept.push_back({edges[e].id, remap[edges[e].u], remap[edges[e].v]});
    kept_len.push_back(lengths[e]);
    k.edge_origin.push_back(eorigin[e]);
  }
  if (kept.empty()) throw PreconditionError("core: the bounded part is a tree");
  k.model = Model(Graph(std::move(ids), std::move(kept)), std::move(kept_len), std::nullopt, CirclePolicy::kAllow);
  return k;
}

}  // namespace

Core core(const EmbeddedCurve& c) {
  std::vector<std::string> vids;
  std::vector<int> vorigin;
  for (int i = 0; i < static_cast<int>(c.vertices.size()); ++i) {
    vids.push_back("t" + std::to_string(i));
    vorigin.push_back(i);
  }
  std::vector<Edge> edges;
  std::vector<Rational> lengths;
  std::vector<int> eorigin;
  for (int i = 0; i < static_cast<int>(c.edges.size()); ++i) {
    edges.push_back({"c" + std::to_string(i), c.edges[i].from, c.edges[i].to});
    lengths.push_back(c.edges[i].length);
    eorigin.push_back(i);
  }
  return prune(vids, edges, lengths, vorigin, eorigin);
}

Core core(const Model& m) {
  const Graph& g = m.graph();
  std::vector<int> vorigin(g.num_vertices());
  std::vector<int> eorigin(g.num_edges());
  std::iota(vorigin.begin(), vorigin.end(), 0);
  std::iota(eorigin.begin(), eorigin.end(), 0);
  if (betti_number(g) == 0) throw PreconditionError("core: the graph is a tree");
  return prune(g.vertex_ids(), g.edges(), m.lengths(), vorigin, eorigin);
}

LadderCertificate certify_standard_ladder(const EmbeddedCurve& c, const Core& k, int g) {
  LadderCertificate cert;
  const Graph& kg = k.model.graph();
  cert.bridgeless = bridges(kg).empty();
  if (g < 3) return cert;

  const Model suppressed = canonical_loopless_model(k.model);
  const ConstrainedType lad = ladder(Tree{g - 1, [&] {
                                            std::vector<std::pair<int, int>> es;
                                            for (int i = 0; i + 1 < g - 1; ++i) es.emplace_back(i, i + 1);
                                            return es;
                                          }()});
  try {
    const ConstrainedType mine(suppressed.graph(), std::vector<int>(suppressed.graph().num_vertices(), 0));
    cert.is_standard_ladder = canonical_form(mine) == canonical_form(ConstrainedType(lad.graph(), lad.weights()));
  } catch (const InvalidInputError&) {
    cert.is_standard_ladder = false;
  }

  // V_i above and W_i below the segment s_i = {(i,1), (i+1,1)}.
  const auto& tris = c.triangulation.triangles;
  std::vector<int> V(g, -1);
  std::vector<int> W(g, -1);
  for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
    for (int i = 1; i < g; ++i) {
      const LatticePoint a{i, 1};
      const LatticePoint b{i + 1, 1};
      if (std::find(tris[t].begin(), tris[t].end(), a) == tris[t].end()) continue;
      if (std::find(tris[t].begin(), tris[t].end(), b) == tris[t].end()) continue;
      const LatticePoint o = third(tris[t], make_segment(a, b));
      (o.y > 1 ? V : W)[i] = t;
    }
  }
  bool found = true;
  for (int i = 1; i < g; ++i) found = found && V[i] >= 0 && W[i] >= 0;
  if (!found) return cert;
  cert.vertical_rungs = true;
  for (int i = 1; i < g; ++i) cert.vertical_rungs = cert.vertical_rungs && c.vertices[V[i]].x == c.vertices[W[i]].x;
  if (!cert.is_standard_ladder) return cert;

  const Graph& sg = suppressed.graph();
  const auto rail = [&](int s, int t) -> std::optional<Rational> {
    const auto a = sg.find_vertex("t" + std::to_string(s));
    const auto b = sg.find_vertex("t" + std::to_string(t));
    if (!a || !b) return std::nullopt;
    std::optional<Rational> len;
    for (int e : sg.incident(*a)) {
      if (sg.edge(e).other(*a) != *b) continue;
      if (len) return std::nullopt;
      len = suppressed.length(e);
    }
    return len;
  };
  cert.opposite_sides_equal = true;
  for (int i = 1; i + 1 < g; ++i) {
    const auto top = rail(V[i], V[i + 1]);
    const auto bottom = rail(W[i], W[i + 1]);
    const Rational shift = c.vertices[W[i + 1]].x - c.vertices[W[i]].x;
    const Rational dx = shift.sign() < 0 ? -shift : shift;
    cert.opposite_sides_equal = cert.opposite_sides_equal && top && bottom && *top == *bottom && *top == dx;
  }
  return cert;
}

Json to_json(const LatticeTriangulation& t) {
  Json poly = Json::array();
  for (const auto& p : t.polygon) poly.push_back(point_json(p));
  Json tris = Json::array();
  for (const auto& tri : t.triangles) tris.push_back(Json::array({point_json(tri[0]), point_json(tri[1]), point_json(tri[2])}));
  return Json{{"polygon", poly},
              {"triangles", tris},
              {"staircase", t.staircase},
              {"uses_e1", t.uses_e1},
              {"uses_e2", t.uses_e2}};
}

Json to_json(const EmbeddedCurve& c) {
  Json vs = Json::array();
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    vs.push_back({{"triangle", i}, {"x", rat_str(c.vertices[i].x)}, {"y", rat_str(c.vertices[i].y)}});
  }
  Json es = Json::array();
  for (const auto& e : c.edges) {
    es.push_back({{"from", e.from},
                  {"to", e.to},
                  {"dual", Json::array({point_json(e.dual[0]), point_json(e.dual[1])})},
                  {"direction", point_json(e.direction)},
                  {"length", rat_str(e.length)}});
  }
  Json rs = Json::array();
  for (const auto& r : c.rays) {
    rs.push_back({{"vertex", r.vertex},
                  {"dual", Json::array({point_json(r.dual[0]), point_json(r.dual[1])})},
                  {"direction", point_json(r.direction)}});
  }
  return Json{{"vertices", vs}, {"edges", es}, {"rays", rs}};
}

Json to_json(const LadderCertificate& c) {
  return Json{{"is_standard_ladder", c.is_standard_ladder},
              {"vertical_rungs", c.vertical_rungs},
              {"opposite_sides_equal", c.opposite_sides_equal},
              {"bridgeless", c.bridgeless}};
}

std::string to_svg(const EmbeddedCurve& c, const Core& k) {
  const auto val = [](const Rational& r) { return static_cast<double>(r.num()) / static_cast<double>(r.den()); };
  double xlo = 0, xhi = 0, ylo = 0, yhi = 0;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    const double x = val(c.vertices[i].x);
    const double y = val(c.vertices[i].y);
    if (i == 0 || x < xlo) xlo = x;
    if (i == 0 || x > xhi) xhi = x;
    if (i == 0 || y < ylo) ylo = y;
    if (i == 0 || y > yhi) yhi = y;
  }
  const double span = std::max({xhi - xlo, yhi - ylo, 1.0});
  const double ray = 0.25 * span;
  xlo -= ray;
  xhi += ray;
  ylo -= ray;
  yhi += ray;
  const double size = 600.0;
  const double s = size / std::max(xhi - xlo, yhi - ylo);
  const auto px = [&](double x) { return (x - xlo) * s; };
  const auto py = [&](double y) { return (yhi - y) * s; };

  std::set<int> thick(k.edge_origin.begin(), k.edge_origin.end());
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(xhi) << "\" height=\"" << py(ylo) << "\">\n";
  const auto line = [&](double x1, double y1, double x2, double y2, double w, const char* colour) {
    out << "  <line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2) << "\" y2=\"" << py(y2)
        << "\" stroke=\"" << colour << "\" stroke-width=\"" << w << "\"/>\n";
  };
  for (const auto& r : c.rays) {
    const double x = val(c.vertices[r.vertex].x);
    const double y = val(c.vertices[r.vertex].y);
    const double norm = std::hypot(static_cast<double>(r.direction.x), static_cast<double>(r.direction.y));
    line(x, y, x + ray * r.direction.x / norm, y + ray * r.direction.y / norm, 1.0, "gray");
  }
  for (int i = 0; i < static_cast<int>(c.edges.size()); ++i) {
    const auto& e = c.edges[i];
    const bool in_core = thick.count(i) > 0;
    line(val(c.vertices[e.from].x), val(c.vertices[e.from].y), val(c.vertices[e.to].x), val(c.vertices[e.to].y),
         in_core ? 4.0 : 1.0, in_core ? "black" : "gray");
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace hypertrop
