#include "intgeo/mc_verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace intgeo::mc {

// ---------------------------------------------------------------------------
// Random numbers

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t SplitMix64::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix(seed) + (index + 1) * mix(index ^ kGolden));
}

std::uint64_t SplitMix64::next() {
  state_ += kGolden;
  return mix(state_);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 1.0 - uniform();  // (0, 1]
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double th = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(th);
  has_spare_ = true;
  return r * std::cos(th);
}

RigidMotion RigidMotion::identity(int n) { return {Mat::Identity(n, n), Vec::Zero(n)}; }

Mat random_rotation(int n, SplitMix64& rng) {
  if (n < 1) throw DomainError("rotation dimension must be positive");
  Mat g(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) g(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

Vec random_unit_vector(int n, SplitMix64& rng) {
  Vec v(n);
  double norm = 0.0;
  do {
    for (int i = 0; i < n; ++i) v(i) = rng.normal();
    norm = v.norm();
  } while (norm == 0.0);
  return v / norm;
}

// ---------------------------------------------------------------------------
// Bodies

ConvexBody ConvexBody::ball(const Vec& center, double radius) {
  if (!(radius > 0)) throw DomainError("ball radius must be positive");
  ConvexBody b;
  b.kind = Kind::ball;
  b.n = static_cast<int>(center.size());
  b.center = center;
  b.radius = radius;
  b.rotation = Mat::Identity(b.n, b.n);
  b.translation = Vec::Zero(b.n);
  b.exact = TemplateBody::ball(Rational::from_double(radius));
  return b;
}

ConvexBody ConvexBody::box(const Vec& lo, const Vec& hi) {
  if (lo.size() != hi.size() || lo.size() == 0) throw DomainError("box corners must have the same positive dimension");
  std::vector<Rational> sides;
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    if (!(hi(i) > lo(i))) throw DomainError("box must be nondegenerate");
    sides.push_back(Rational::from_double(hi(i)) - Rational::from_double(lo(i)));
  }
  ConvexBody b;
  b.kind = Kind::box;
  b.n = static_cast<int>(lo.size());
  b.lo = lo;
  b.hi = hi;
  b.rotation = Mat::Identity(b.n, b.n);
  b.translation = Vec::Zero(b.n);
  b.exact = TemplateBody::box(sides);
  return b;
}

ConvexBody ConvexBody::polytope(std::vector<Vec> vertices) {
  if (vertices.empty()) throw DomainError("polytope needs at least one vertex");
  ConvexBody b;
  b.kind = Kind::polytope;
  b.n = static_cast<int>(vertices[0].size());
  for (const auto& v : vertices) {
    if (v.size() != b.n || !v.allFinite()) throw DomainError("polytope vertices must be finite and of equal dimension");
  }
  b.vertices = std::move(vertices);
  b.rotation = Mat::Identity(b.n, b.n);
  b.translation = Vec::Zero(b.n);
  if (b.vertices.size() == 1) b.exact = TemplateBody::point();
  return b;
}

ConvexBody ConvexBody::placed(const RigidMotion& g) const {
  ConvexBody b = *this;
  b.rotation = g.rotation * rotation;
  b.translation = g.rotation * translation + g.translation;
  return b;
}

Vec ConvexBody::anchor() const {
  switch (kind) {
    case Kind::ball: return rotation * center + translation;
    case Kind::box: return rotation * ((lo + hi) / 2.0) + translation;
    case Kind::polytope: {
      Vec m = Vec::Zero(n);
      for (const auto& v : vertices) m += v;
      return rotation * (m / static_cast<double>(vertices.size())) + translation;
    }
  }
  return Vec::Zero(n);
}

double ConvexBody::circumradius() const {
  switch (kind) {
    case Kind::ball: return radius;
    case Kind::box: return (hi - lo).norm() / 2.0;
    case Kind::polytope: {
      Vec m = Vec::Zero(n);
      for (const auto& v : vertices) m += v;
      m /= static_cast<double>(vertices.size());
      double r = 0.0;
      for (const auto& v : vertices) r = std::max(r, (v - m).norm());
      return r;
    }
  }
  return 0.0;
}

Vec ConvexBody::support(const Vec& dir) const {
  switch (kind) {
    case Kind::ball: {
      double d = dir.norm();
      Vec c = rotation * center + translation;
      return d == 0.0 ? c : Vec(c + radius * dir / d);
    }
    case Kind::box: {
      Vec local = rotation.transpose() * dir;
      Vec p(n);
      for (int i = 0; i < n; ++i) p(i) = local(i) >= 0 ? hi(i) : lo(i);
      return rotation * p + translation;
    }
    case Kind::polytope: {
      Vec local = rotation.transpose() * dir;
      std::size_t best = 0;
      double bv = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        double v = local.dot(vertices[i]);
        if (v > bv) {
          bv = v;
          best = i;
        }
      }
      return rotation * vertices[best] + translation;
    }
  }
  return Vec::Zero(n);
}

std::vector<Vec> ConvexBody::world_vertices() const {
  std::vector<Vec> out;
  if (kind == Kind::box) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Vec p(n);
      for (int i = 0; i < n; ++i) p(i) = (mask >> i) & 1u ? hi(i) : lo(i);
      out.push_back(rotation * p + translation);
    }
  } else if (kind == Kind::polytope) {
    for (const auto& v : vertices) out.push_back(rotation * v + translation);
  }
  return out;
}

double ConvexBody::distance_to(const Vec& x) const {
  switch (kind) {
    case Kind::ball: return std::max(0.0, (x - (rotation * center + translation)).norm() - radius);
    case Kind::box: {
      Vec local = rotation.transpose() * (x - translation);
      Vec c = local.cwiseMax(lo).cwiseMin(hi);
      return (local - c).norm();
    }
    case Kind::polytope:
      return gjk_distance([this](const Vec& d) { return support(d); }, [&x](const Vec&) { return x; }, n,
                          anchor() - x);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// GJK with a brute-force closest-point search over simplex faces.

namespace {

struct Closest {
  Vec point;
  std::vector<Vec> face;
};

Closest closest_on_simplex(const std::vector<Vec>& w) {
  const std::size_t m = w.size();
  Closest best;
  double best_d = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) pts.push_back(w[i]);
    }
    Vec p;
    if (pts.size() == 1) {
      p = pts[0];
    } else {
      const Eigen::Index k = static_cast<Eigen::Index>(pts.size()) - 1;
      Mat d(pts[0].size(), k);
      for (Eigen::Index j = 0; j < k; ++j) d.col(j) = pts[j + 1] - pts[0];
      Mat g = d.transpose() * d;
      Eigen::FullPivLU<Mat> lu(g);
      if (lu.rank() < k) continue;
      Vec lam = lu.solve(-d.transpose() * pts[0]);
      double l0 = 1.0 - lam.sum();
      if (l0 < -1e-12 || (lam.array() < -1e-12).any()) continue;
      p = pts[0] + d * lam;
    }
    double dist = p.norm();
    if (dist < best_d - 1e-15 || (dist <= best_d + 1e-15 && pts.size() < best.face.size())) {
      best_d = dist;
      best.point = p;
      best.face = pts;
    }
  }
  return best;
}

}  // namespace

double gjk_distance(const std::function<Vec(const Vec&)>& support_a, const std::function<Vec(const Vec&)>& support_b,
                    int n, const Vec& initial_dir) {
  auto s = [&](const Vec& d) -> Vec { return support_a(d) - support_b(-d); };
  Vec d0 = initial_dir.norm() > 0 ? initial_dir : Vec(Vec::Unit(n, 0));
  Vec v = s(d0);
  std::vector<Vec> w{v};
  for (int iter = 0; iter < 200; ++iter) {
    double vn = v.norm();
    if (vn <= 1e-12) return 0.0;
    Vec p = s(-v);
    // Progress test: the support point does not get closer along v.
    if (vn * vn - v.dot(p) <= 1e-12 * std::max(1.0, vn * vn)) return vn;
    w.push_back(p);
    Closest c = closest_on_simplex(w);
    if (c.face.size() == w.size() && c.point.norm() >= vn - 1e-15) return vn;
    v = c.point;
    w = c.face;
    if (static_cast<int>(w.size()) == n + 1) return v.norm() <= 1e-12 ? 0.0 : v.norm();
  }
  return v.norm();
}

namespace {

constexpr double kTouch = 1e-10;

bool box_box_sat(const ConvexBody& a, const ConvexBody& b) {
  const int n = a.n;
  Vec ca = a.anchor(), cb = b.anchor();
  Vec ha = (a.hi - a.lo) / 2.0, hb = (b.hi - b.lo) / 2.0;
  std::vector<Vec> axes;
  for (int i = 0; i < n; ++i) {
    axes.push_back(a.rotation.col(i));
    axes.push_back(b.rotation.col(i));
  }
  if (n == 3) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Eigen::Vector3d x = Eigen::Vector3d(a.rotation.col(i)).cross(Eigen::Vector3d(b.rotation.col(j)));
        if (x.norm() > 1e-9) axes.push_back(Vec(x.normalized()));
      }
    }
  }
  Vec diff = cb - ca;
  for (const Vec& l : axes) {
    double ra = 0.0, rb = 0.0;
    for (int i = 0; i < n; ++i) {
      ra += ha(i) * std::abs(l.dot(a.rotation.col(i)));
      rb += hb(i) * std::abs(l.dot(b.rotation.col(i)));
    }
    if (std::abs(l.dot(diff)) > ra + rb + kTouch) return false;
  }
  return true;
}

}  // namespace

bool intersects(const ConvexBody& a, const ConvexBody& b) {
  if (a.n != b.n) throw DomainError("bodies live in different dimensions");
  using K = ConvexBody::Kind;
  if (a.kind == K::ball && b.kind == K::ball) {
    return (a.anchor() - b.anchor()).norm() <= a.radius + b.radius + kTouch;
  }
  if (a.kind == K::ball && b.kind == K::box) return b.distance_to(a.anchor()) <= a.radius + kTouch;
  if (a.kind == K::box && b.kind == K::ball) return a.distance_to(b.anchor()) <= b.radius + kTouch;
  if (a.kind == K::box && b.kind == K::box && a.n <= 3) return box_box_sat(a, b);
  double d = gjk_distance([&a](const Vec& v) { return a.support(v); }, [&b](const Vec& v) { return b.support(v); }, a.n,
                          b.anchor() - a.anchor());
  return d <= kTouch;
}

// ---------------------------------------------------------------------------
// Volumes of Minkowski sums

namespace {
double cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}
}  // namespace

std::vector<Vec> convex_hull_2d(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    return a(0) < b(0) || (a(0) == b(0) && a(1) < b(1));
  });
  if (pts.size() < 3) return pts;
  std::vector<Vec> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

double polygon_area(const std::vector<Vec>& ccw) {
  double a = 0.0;
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const Vec& p = ccw[i];
    const Vec& q = ccw[(i + 1) % ccw.size()];
    a += p(0) * q(1) - p(1) * q(0);
  }
  return a / 2.0;
}

double minkowski_area_2d(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  auto prep = [](const std::vector<Vec>& pts) {
    std::vector<Vec> h = convex_hull_2d(pts);
    // Start at the lowest (then leftmost) vertex.
    auto it = std::min_element(h.begin(), h.end(), [](const Vec& x, const Vec& y) {
      return x(1) < y(1) || (x(1) == y(1) && x(0) < y(0));
    });
    std::rotate(h.begin(), it, h.end());
    return h;
  };
  std::vector<Vec> p = prep(a), q = prep(b);
  if (p.size() < 3 || q.size() < 3) {
    // Degenerate summand: fall back to the hull of pairwise sums.
    std::vector<Vec> sums;
    for (const auto& x : a) {
      for (const auto& y : b) sums.push_back(x + y);
    }
    return polygon_area(convex_hull_2d(sums));
  }
  std::vector<Vec> out;
  std::size_t i = 0, j = 0;
  const std::size_t np = p.size(), nq = q.size();
  while (i < np || j < nq) {
    out.push_back(p[i % np] + q[j % nq]);
    Vec ep = p[(i + 1) % np] - p[i % np];
    Vec eq = q[(j + 1) % nq] - q[j % nq];
    double c = ep(0) * eq(1) - ep(1) * eq(0);
    if (j >= nq || (i < np && c > 0)) {
      ++i;
    } else if (i >= np || c < 0) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return polygon_area(out);
}

double zonotope_volume_3d(const std::vector<Vec>& g) {
  double v = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      for (std::size_t k = j + 1; k < g.size(); ++k) {
        Eigen::Matrix3d m;
        m << g[i], g[j], g[k];
        v += std::abs(m.determinant());
      }
    }
  }
  return v;
}

double hull_volume_3d(const std::vector<Vec>& pts) {
  const std::size_t m = pts.size();
  if (m < 4) return 0.0;
  auto P = [&](std::size_t i) { return Eigen::Vector3d(pts[i]); };
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  const double eps = 1e-12 * std::max(1.0, scale);
  // Initial tetrahedron.
  std::size_t i0 = 0, i1 = 0, i2 = 0, i3 = 0;
  double best = 0.0;
  for (std::size_t i = 1; i < m; ++i) {
    double d = (P(i) - P(i0)).norm();
    if (d > best) best = d, i1 = i;
  }
  best = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double d = (P(i) - P(i0)).cross(P(i1) - P(i0)).norm();
    if (d > best) best = d, i2 = i;
  }
  best = 0.0;
  Eigen::Vector3d nrm = (P(i1) - P(i0)).cross(P(i2) - P(i0));
  for (std::size_t i = 0; i < m; ++i) {
    double d = std::abs(nrm.dot(P(i) - P(i0)));
    if (d > best) best = d, i3 = i;
  }
  if (best <= eps * std::max(1.0, nrm.norm())) return 0.0;
  using Face = std::array<std::size_t, 3>;
  std::vector<Face> faces{{i0, i1, i2}, {i0, i3, i1}, {i1, i3, i2}, {i0, i2, i3}};
  Eigen::Vector3d centroid = (P(i0) + P(i1) + P(i2) + P(i3)) / 4.0;
  auto normal = [&](const Face& f) { return Eigen::Vector3d((P(f[1]) - P(f[0])).cross(P(f[2]) - P(f[0]))); };
  for (auto& f : faces) {
    if (normal(f).dot(centroid - P(f[0])) > 0) std::swap(f[1], f[2]);
  }
  for (std::size_t idx = 0; idx < m; ++idx) {
    if (idx == i0 || idx == i1 || idx == i2 || idx == i3) continue;
    std::vector<bool> visible(faces.size());
    bool any = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      Eigen::Vector3d nf = normal(faces[f]);
      visible[f] = nf.dot(P(idx) - P(faces[f][0])) > eps * std::max(1.0, nf.norm());
      any = any || visible[f];
    }
    if (!any) continue;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      for (int e = 0; e < 3; ++e) edges.insert({faces[f][e], faces[f][(e + 1) % 3]});
    }
    std::vector<Face> next;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) next.push_back(faces[f]);
    }
    for (const auto& [u, v] : edges) {
      if (!edges.count({v, u})) next.push_back({u, v, idx});
    }
    faces = std::move(next);
  }
  double vol = 0.0;
  for (const auto& f : faces) vol += P(f[0]).dot(P(f[1]).cross(P(f[2])));
  return vol / 6.0;
}

// ---------------------------------------------------------------------------
// Sampling driver

Moments run_chunks(std::uint64_t samples, std::uint64_t seed, const std::function<double(SplitMix64&)>& draw, Exec exec,
                   int jobs) {
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<Moments> part(chunks);
  auto work = [&](std::uint64_t c) {
    SplitMix64 rng = SplitMix64::stream(seed, c);
    const std::uint64_t count = std::min(kChunk, samples - c * kChunk);
    Moments m;
    for (std::uint64_t i = 0; i < count; ++i) {
      double y = draw(rng);
      m.sum += y;
      m.sum_sq += y * y;
      m.min = std::min(m.min, y);
      m.max = std::max(m.max, y);
    }
    m.count = count;
    part[c] = m;
  };
  if (exec == Exec::serial) {
    for (std::uint64_t c = 0; c < chunks; ++c) work(c);
  } else {
#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long c = 0; c < static_cast<long long>(chunks); ++c) work(static_cast<std::uint64_t>(c));
#else
    (void)jobs;
    for (std::uint64_t c = 0; c < chunks; ++c) work(c);
#endif
  }
  Moments total;
  for (const auto& m : part) {
    total.sum += m.sum;
    total.sum_sq += m.sum_sq;
    total.count += m.count;
    total.min = std::min(total.min, m.min);
    total.max = std::max(total.max, m.max);
  }
  return total;
}

void MCEstimate::set_prediction(const Scalar& p) {
  prediction = p;
  prediction_value = p.to_double();
  double diff = mean - prediction_value;
  if (stderr_ > 0) {
    z = diff / stderr_;
  } else {
    z = std::abs(diff) <= 1e-9 * std::max(1.0, std::abs(prediction_value))
            ? 0.0
            : std::copysign(std::numeric_limits<double>::infinity(), diff);
  }
}

MCEstimate finish(const std::string& test, const Moments& m, std::uint64_t seed, double scale) {
  if (m.count < 2) throw DomainError("Monte Carlo run needs at least two samples");
  MCEstimate e;
  e.test = test;
  e.samples = m.count;
  e.seed = seed;
  const double n = static_cast<double>(m.count);
  const double mean = m.sum / n;
  double var = (m.sum_sq - n * mean * mean) / (n - 1.0);
  // Constant integrands: rounding noise is not variance.
  if (m.min == m.max || var < 0.0) var = 0.0;
  e.mean = scale * mean;
  e.stderr_ = scale * std::sqrt(var / n);
  return e;
}

Scalar evaluate_tensor(const EuclideanAlgebra& a, const Tensor& t, const TemplateBody& x, const TemplateBody& y) {
  const int n = a.n();
  Scalar total;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      Scalar c = t.coefficient(i, j, 0, 0);
      if (c.is_zero()) continue;
      Scalar ti = intrinsic_volume(x, n, i) / a.scale(SOBasis::mu, i);
      Scalar tj = intrinsic_volume(y, n, j) / a.scale(SOBasis::mu, j);
      total += c * ti * tj;
    }
  }
  return total;
}

namespace {

double ball_volume(int n, double r) { return omega(n).to_double() * std::pow(r, n); }

Vec uniform_in_ball(int k, SplitMix64& rng) {
  Vec d = random_unit_vector(k, rng);
  return d * std::pow(rng.uniform(), 1.0 / k);
}

std::string window_note(const char* what, double half) {
  std::ostringstream os;
  os.precision(17);
  os << what << "=" << half;
  return os.str();
}

}  // namespace

MCEstimate estimate_principal_kinematic(const ConvexBody& a, const ConvexBody& b, const RunOptions& opt) {
  if (a.n != b.n) throw DomainError("bodies live in different dimensions");
  const int n = a.n;
  const Vec ca = a.anchor(), cb = b.anchor();
  const double half = a.circumradius() + b.circumradius();
  std::atomic<bool> outside{false};
  auto draw = [&](SplitMix64& rng) {
    Mat r = random_rotation(n, rng);
    Vec x(n);
    for (int i = 0; i < n; ++i) x(i) = ca(i) + rng.uniform(-half, half);
    ConvexBody moved = b.placed({r, x - r * cb});
    bool hit = intersects(a, moved);
    if (hit && (x - ca).norm() > half * (1 + 1e-12) + 1e-12) outside = true;
    return hit ? 1.0 : 0.0;
  };
  Moments m = run_chunks(opt.samples, opt.seed, draw, opt.exec, opt.jobs);
  if (outside) throw ConsistencyError("intersection found outside the circumradius window");
  MCEstimate e = finish("kinematic", m, opt.seed, std::pow(2.0 * half, n));
  e.note = window_note("window_half_width", half);
  if (a.exact && b.exact) {
    EuclideanAlgebra alg(n);
    e.set_prediction(evaluate_tensor(alg, alg.kinematic(alg.chi()), *a.exact, *b.exact));
  }
  return e;
}

MCEstimate estimate_crofton(const ConvexBody& a, int k, const RunOptions& opt) {
  const int n = a.n;
  if (k < 0 || k > n) throw DomainError("Crofton degree out of range");
  const Vec ca = a.anchor();
  const double rad = a.circumradius();
  const std::vector<Vec> verts = a.world_vertices();
  auto draw = [&](SplitMix64& rng) -> double {
    if (k == 0) return 1.0;
    Mat r = random_rotation(n, rng);
    Mat u = r.rightCols(k);  // basis of the fiber E^perp
    Vec y = u.transpose() * ca + rad * uniform_in_ball(k, rng);
    if (a.kind == ConvexBody::Kind::ball) return (u.transpose() * ca - y).norm() <= a.radius ? 1.0 : 0.0;
    std::vector<Vec> proj;
    proj.reserve(verts.size());
    for (const auto& v : verts) proj.push_back(u.transpose() * v);
    auto sup = [&proj](const Vec& d) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < proj.size(); ++i) {
        if (d.dot(proj[i]) > d.dot(proj[best])) best = i;
      }
      return proj[best];
    };
    double dist = gjk_distance(sup, [&y](const Vec&) { return y; }, k, proj[0] - y);
    return dist <= 1e-10 ? 1.0 : 0.0;
  };
  Moments m = run_chunks(opt.samples, opt.seed, draw, opt.exec, opt.jobs);
  double scale = crofton_constant(n, k).to_double() * ball_volume(k, rad);
  MCEstimate e = finish("crofton", m, opt.seed, scale);
  e.note = window_note("fiber_radius", rad);
  if (a.exact) e.set_prediction(intrinsic_volume(*a.exact, n, k));
  return e;
}

MCEstimate cauchy_projection_check(const ConvexBody& a, const RunOptions& opt) {
  const int n = a.n;
  if (n < 2) throw DomainError("Cauchy formula needs n >= 2");
  if (a.kind == ConvexBody::Kind::polytope) throw DomainError("Cauchy check supports boxes and balls");
  auto draw = [&](SplitMix64& rng) {
    if (a.kind == ConvexBody::Kind::ball) return ball_volume(n - 1, a.radius);
    Vec v = a.rotation.transpose() * random_unit_vector(n, rng);
    Vec s = a.hi - a.lo;
    double area = 0.0;
    for (int i = 0; i < n; ++i) {
      double prod = 1.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) prod *= s(j);
      }
      area += prod * std::abs(v(i));
    }
    return area;
  };
  Moments m = run_chunks(opt.samples, opt.seed, draw, opt.exec, opt.jobs);
  MCEstimate e = finish("cauchy", m, opt.seed, cauchy_constant(n).to_double());
  if (a.exact) e.set_prediction(intrinsic_volume(*a.exact, n, n - 1));
  return e;
}

MCEstimate steiner_mc(const ConvexBody& a, double r, const RunOptions& opt) {
  if (!(r > 0)) throw DomainError("tube radius must be positive");
  const int n = a.n;
  const Vec ca = a.anchor();
  const double half = a.circumradius() + r;
  auto draw = [&](SplitMix64& rng) {
    Vec x(n);
    for (int i = 0; i < n; ++i) x(i) = ca(i) + rng.uniform(-half, half);
    return a.distance_to(x) <= r ? 1.0 : 0.0;
  };
  Moments m = run_chunks(opt.samples, opt.seed, draw, opt.exec, opt.jobs);
  MCEstimate e = finish("steiner", m, opt.seed, std::pow(2.0 * half, n));
  e.note = window_note("window_half_width", half);
  if (a.exact) {
    std::vector<Scalar> poly = steiner_polynomial(*a.exact, n);
    Rational rr = Rational::from_double(r);
    Scalar total;
    for (std::size_t j = 0; j < poly.size(); ++j) total += poly[j] * Scalar(rr.pow(static_cast<int>(j)));
    e.set_prediction(total);
  }
  return e;
}

namespace {

// Volume of body + ball(r), exact in the rotation.
double tube_volume(const ConvexBody& body, double r) {
  const int n = body.n;
  if (!body.exact) throw DomainError("Minkowski sum with a ball needs a box or ball summand");
  std::vector<Scalar> poly = steiner_polynomial(*body.exact, n);
  double v = 0.0;
  for (std::size_t j = 0; j < poly.size(); ++j) v += poly[j].to_double() * std::pow(r, static_cast<double>(j));
  return v;
}

double sum_volume(const ConvexBody& a, const ConvexBody& b) {
  using K = ConvexBody::Kind;
  const int n = a.n;
  if (a.kind == K::ball && b.kind == K::ball) return ball_volume(n, a.radius + b.radius);
  if (a.kind == K::ball) return tube_volume(b, a.radius);
  if (b.kind == K::ball) return tube_volume(a, b.radius);
  if (n == 2) return minkowski_area_2d(a.world_vertices(), b.world_vertices());
  if (a.kind == K::box && b.kind == K::box) {
    std::vector<Vec> gens;
    for (const ConvexBody* body : {&a, &b}) {
      for (int i = 0; i < 3; ++i) gens.push_back(body->rotation.col(i) * (body->hi(i) - body->lo(i)));
    }
    return zonotope_volume_3d(gens);
  }
  std::vector<Vec> sums;
  for (const auto& x : a.world_vertices()) {
    for (const auto& y : b.world_vertices()) sums.push_back(x + y);
  }
  return hull_volume_3d(sums);
}

}  // namespace

MCEstimate estimate_additive(const ConvexBody& a, const ConvexBody& b, const RunOptions& opt) {
  if (a.n != b.n) throw DomainError("bodies live in different dimensions");
  const int n = a.n;
  if (n != 2 && n != 3) throw DomainError("additive check supports n = 2 and n = 3");
  auto draw = [&](SplitMix64& rng) {
    Mat r = random_rotation(n, rng);
    return sum_volume(a, b.placed({r, Vec::Zero(n)}));
  };
  Moments m = run_chunks(opt.samples, opt.seed, draw, opt.exec, opt.jobs);
  MCEstimate e = finish("additive", m, opt.seed, 1.0);
  if (a.exact && b.exact) {
    EuclideanAlgebra alg(n);
    e.set_prediction(evaluate_tensor(alg, alg.additive(alg.volume()), *a.exact, *b.exact));
  }
  return e;
}

// ---------------------------------------------------------------------------
// Kolmogorov-Smirnov

KsResult ks_test(std::vector<double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw DomainError("KS test needs samples");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    double f = cdf(sample[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  const double sn = std::sqrt(n);
  const double lam = (sn + 0.12 + 0.11 / sn) * d;
  double q = 0.0;
  for (int k = 1; k <= 100; ++k) {
    double term = 2.0 * std::exp(-2.0 * k * k * lam * lam);
    q += k % 2 == 1 ? term : -term;
    if (term < 1e-16) break;
  }
  return {d, std::clamp(q, 0.0, 1.0)};
}

double projection_cdf(int n, double x) {
  if (n < 2) throw DomainError("projection law needs n >= 2");
  if (x <= -1.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = (n - 1) / 2.0;
  return boost::math::ibeta(a, a, (1.0 + x) / 2.0);
}

// ---------------------------------------------------------------------------

std::vector<MCEstimate> default_suite(const RunOptions& opt) {
  auto v = [](std::initializer_list<double> xs) {
    Vec r(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) r(i++) = x;
    return r;
  };
  ConvexBody disk = ConvexBody::ball(v({0, 0}), 1.0);
  ConvexBody square = ConvexBody::box(v({0, 0}), v({1, 1}));
  ConvexBody ball3 = ConvexBody::ball(v({0, 0, 0}), 1.0);
  ConvexBody half_ball3 = ConvexBody::ball(v({2, 0, 0}), 0.5);
  ConvexBody cube = ConvexBody::box(v({0, 0, 0}), v({1, 1, 1}));
  ConvexBody brick = ConvexBody::box(v({0, 0, 0}), v({1, 2, 3}));
  ConvexBody slab = ConvexBody::box(v({0, 0, 0}), v({1, 0.5, 0.25}));

  std::vector<MCEstimate> out;
  std::uint64_t idx = 0;
  auto run = [&](MCEstimate e, const std::string& name) {
    e.test = name;
    out.push_back(std::move(e));
  };
  auto o = [&]() {
    RunOptions r = opt;
    r.seed = opt.seed + 1000 * (++idx);
    return r;
  };
  run(estimate_principal_kinematic(disk, square, o()), "kinematic disk/square R2");
  run(estimate_principal_kinematic(ball3, cube, o()), "kinematic ball/cube R3");
  run(estimate_principal_kinematic(ball3, half_ball3, o()), "kinematic ball/ball R3");
  run(estimate_principal_kinematic(square, square, o()), "kinematic square/square R2");
  run(estimate_crofton(square, 1, o()), "crofton square k=1 R2");
  run(estimate_crofton(cube, 2, o()), "crofton cube k=2 R3");
  run(cauchy_projection_check(square, o()), "cauchy square R2");
  run(cauchy_projection_check(brick, o()), "cauchy box 1x2x3 R3");
  run(steiner_mc(square, 1.0, o()), "steiner square r=1 R2");
  run(steiner_mc(cube, 0.5, o()), "steiner cube r=1/2 R3");
  run(estimate_additive(square, square, o()), "additive square/square R2");
  run(estimate_additive(cube, slab, o()), "additive cube/slab R3");
  return out;
}

}  // namespace intgeo::mc
