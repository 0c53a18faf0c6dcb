#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "intgeo/euclid_so.hpp"

namespace intgeo::mc {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// SplitMix64. Stream k of seed s starts from mix(s) + (k + 1) * mix(k ^ golden),
// so streams are fixed functions of (seed, k) on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);
  static std::uint64_t mix(std::uint64_t z);

  std::uint64_t next();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Box-Muller; the second variate is cached.
  double normal();

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

struct RigidMotion {
  Mat rotation;
  Vec translation;
  static RigidMotion identity(int n);
  Vec apply(const Vec& x) const { return rotation * x + translation; }
};

Mat random_rotation(int n, SplitMix64& rng);
Vec random_unit_vector(int n, SplitMix64& rng);

// A convex body in its own frame, optionally placed by a rigid motion.
struct ConvexBody {
  enum class Kind { ball, box, polytope };
  Kind kind = Kind::ball;
  int n = 0;
  Vec center;                 // ball
  double radius = 0.0;        // ball
  Vec lo, hi;                 // box, in the body frame
  std::vector<Vec> vertices;  // polytope
  Mat rotation;               // pose: x -> rotation * x + translation
  Vec translation;
  // Exact description for predictions (balls and boxes with rational data).
  std::optional<TemplateBody> exact;

  static ConvexBody ball(const Vec& center, double radius);
  static ConvexBody box(const Vec& lo, const Vec& hi);
  static ConvexBody polytope(std::vector<Vec> vertices);
  static ConvexBody point(const Vec& x) { return polytope({x}); }

  ConvexBody placed(const RigidMotion& g) const;
  // Reference point and the radius of a ball around it containing the body.
  Vec anchor() const;
  double circumradius() const;
  Vec support(const Vec& dir) const;
  // Vertices in world coordinates; empty for balls.
  std::vector<Vec> world_vertices() const;
  double distance_to(const Vec& x) const;
};

// Closed bodies: touching counts as intersecting.
bool intersects(const ConvexBody& a, const ConvexBody& b);
// GJK distance between convex sets given by support functions.
double gjk_distance(const std::function<Vec(const Vec&)>& support_a, const std::function<Vec(const Vec&)>& support_b,
                    int n, const Vec& initial_dir);

// Area of the Minkowski sum of two convex polygons: sorted edge merge.
double minkowski_area_2d(const std::vector<Vec>& a, const std::vector<Vec>& b);
std::vector<Vec> convex_hull_2d(std::vector<Vec> pts);
double polygon_area(const std::vector<Vec>& ccw);
// Volume of the convex hull of points in R^3 (incremental hull).
double hull_volume_3d(const std::vector<Vec>& pts);
// Volume of a zonotope sum [0, g_i] in R^3.
double zonotope_volume_3d(const std::vector<Vec>& generators);

enum class Exec { serial, parallel };

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t count = 0;
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
};

// Samples are split into fixed chunks; chunk c draws from stream (seed, c)
// and partial sums are reduced in chunk order, so both modes agree bit for bit.
constexpr std::uint64_t kChunk = 1u << 14;

Moments run_chunks(std::uint64_t samples, std::uint64_t seed, const std::function<double(SplitMix64&)>& draw,
                   Exec exec = Exec::parallel, int jobs = 0);

struct MCEstimate {
  std::string test;
  double mean = 0.0;
  double stderr_ = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<Scalar> prediction;
  double prediction_value = 0.0;
  double z = 0.0;
  std::string note;

  void set_prediction(const Scalar& p);
};

MCEstimate finish(const std::string& test, const Moments& m, std::uint64_t seed, double scale);

struct RunOptions {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
  Exec exec = Exec::parallel;
  int jobs = 0;
};

// Exact value of a Val^{SO(n)} tensor on a pair of template bodies.
Scalar evaluate_tensor(const EuclideanAlgebra& a, const Tensor& t, const TemplateBody& x, const TemplateBody& y);

MCEstimate estimate_principal_kinematic(const ConvexBody& a, const ConvexBody& b, const RunOptions& opt);
MCEstimate estimate_crofton(const ConvexBody& a, int k, const RunOptions& opt);
MCEstimate cauchy_projection_check(const ConvexBody& box_or_ball, const RunOptions& opt);
MCEstimate steiner_mc(const ConvexBody& a, double r, const RunOptions& opt);
MCEstimate estimate_additive(const ConvexBody& a, const ConvexBody& b, const RunOptions& opt);

// One-sample Kolmogorov-Smirnov statistic and asymptotic p-value.
struct KsResult {
  double statistic = 0.0;
  double p_value = 0.0;
};
KsResult ks_test(std::vector<double> sample, const std::function<double(double)>& cdf);
// CDF of <Ru, v> for Haar R in SO(n), unit u, v.
double projection_cdf(int n, double x);

// The twelve default runs in R^2 and R^3.
std::vector<MCEstimate> default_suite(const RunOptions& opt);

}  // namespace intgeo::mc
