#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace regrasp {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }

// Rigid transform in SE(3): p -> rotation * p + translation.
struct Pose {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static Pose identity() { return {}; }

  static Pose from_axis_angle(
      const Eigen::Vector3d& axis, double angle,
      const Eigen::Vector3d& translation = Eigen::Vector3d::Zero()) {
    return {Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix(),
            translation};
  }

  Eigen::Vector3d apply(const Eigen::Vector3d& v) const {
    return rotation * v + translation;
  }
  Eigen::Vector3d rotate(const Eigen::Vector3d& v) const {
    return rotation * v;
  }

  // this ∘ other: apply `other` first, then this.
  Pose compose(const Pose& other) const {
    return {rotation * other.rotation,
            rotation * other.translation + translation};
  }

  Pose inverse() const {
    return {rotation.transpose(), -(rotation.transpose() * translation)};
  }

  bool is_rigid(double tol = 1e-9) const {
    const Eigen::Matrix3d err =
        rotation.transpose() * rotation - Eigen::Matrix3d::Identity();
    return err.cwiseAbs().maxCoeff() <= tol &&
           std::abs(rotation.determinant() - 1.0) <= tol;
  }
};

struct PointCloud {
  std::vector<Eigen::Vector3d> points;
  std::vector<Eigen::Vector3d> normals;  // empty, or one unit vector per point

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  bool has_normals() const { return !normals.empty(); }

  void reserve(std::size_t n) {
    points.reserve(n);
    normals.reserve(n);
  }
};

inline PointCloud transform_cloud(const Pose& pose, const PointCloud& cloud) {
  PointCloud out;
  out.points.resize(cloud.points.size());
  for (std::size_t i = 0; i < cloud.points.size(); ++i)
    out.points[i] = pose.apply(cloud.points[i]);
  out.normals.resize(cloud.normals.size());
  for (std::size_t i = 0; i < cloud.normals.size(); ++i)
    out.normals[i] = pose.rotate(cloud.normals[i]);
  return out;
}

inline Eigen::Vector3d centroid(const PointCloud& cloud) {
  if (cloud.empty()) throw std::invalid_argument("centroid: empty cloud");
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  for (const auto& p : cloud.points) c += p;
  return c / static_cast<double>(cloud.size());
}

// Standard normal CDF.
inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// CDF of the normal distribution with mode mu and scale sigma truncated to
// [a, b]. Used with mode inside [a, b]; see gq_grasp_prob.
inline double truncated_normal_cdf(double x, double mu, double sigma, double a,
                                   double b) {
  if (!(sigma > 0)) throw std::domain_error("truncated_normal_cdf: sigma <= 0");
  if (!(a < b)) throw std::domain_error("truncated_normal_cdf: a >= b");
  if (x < a || x > b)
    throw std::domain_error("truncated_normal_cdf: x outside [a, b]");
  const double fa = normal_cdf((a - mu) / sigma);
  const double fb = normal_cdf((b - mu) / sigma);
  const double fx = normal_cdf((x - mu) / sigma);
  const double den = fb - fa;
  if (den <= 0) {
    // Mass entirely to one side of [a, b] at this precision.
    return mu <= a ? 1.0 : 0.0;
  }
  return std::clamp((fx - fa) / den, 0.0, 1.0);
}

// Inverse error function, |y| < 1. Winitzki initial guess refined by Newton
// on std::erf; absolute error well below 1e-10 over the usable range.
inline double inverse_erf(double y) {
  if (!(std::abs(y) < 1.0))
    throw std::domain_error("inverse_erf: |y| >= 1");
  if (y == 0.0) return 0.0;
  const double w = std::log1p(-y * y);
  const double aa = 0.147;
  const double term = 2.0 / (kPi * aa) + 0.5 * w;
  double x = std::sqrt(std::sqrt(term * term - w / aa) - term);
  if (y < 0) x = -x;
  const double two_over_sqrt_pi = 1.1283791670955126;
  for (int it = 0; it < 8; ++it) {
    const double err = std::erf(x) - y;
    const double deriv = two_over_sqrt_pi * std::exp(-x * x);
    const double step = err / deriv;
    x -= step;
    if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

namespace detail {

inline double cross2(const Eigen::Vector2d& o, const Eigen::Vector2d& a,
                     const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

}  // namespace detail

// Convex hull of 2D points (Andrew monotone chain), counter-clockwise, no
// repeated endpoint. Throws std::domain_error when all points are collinear
// within `collinear_tol` (absolute cross-product tolerance).
inline std::vector<Eigen::Vector2d> convex_hull_2d(
    std::vector<Eigen::Vector2d> pts, double collinear_tol = 1e-9) {
  if (pts.size() < 3)
    throw std::domain_error("convex_hull_2d: fewer than 3 points");
  std::sort(pts.begin(), pts.end(),
            [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
              return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
            });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
                          return a.x() == b.x() && a.y() == b.y();
                        }),
            pts.end());
  const std::size_t n = pts.size();
  std::vector<Eigen::Vector2d> hull(2 * n + 1);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && detail::cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
    while (k >= t && detail::cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k > 0 ? k - 1 : 0);
  if (hull.size() < 3) {
    // Strict turns only: collinear inputs collapse to a segment. Confirm
    // against the tolerance before reporting degeneracy.
    double max_cross = 0;
    for (std::size_t i = 1; i + 1 < n; ++i)
      max_cross = std::max(
          max_cross, std::abs(detail::cross2(pts[0], pts[i], pts[i + 1])));
    if (max_cross <= collinear_tol)
      throw std::domain_error("convex_hull_2d: degenerate (collinear) input");
    // Nearly-collinear but above tolerance: return the segment's endpoints
    // plus the most distant middle point so callers still get a triangle.
    std::size_t best = 1;
    double best_c = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double c = std::abs(detail::cross2(pts.front(), pts[i], pts.back()));
      if (c > best_c) {
        best_c = c;
        best = i;
      }
    }
    return {pts.front(), pts[best], pts.back()};
  }
  return hull;
}

// Signed distance from `p` to the hull boundary: positive inside, negative
// outside. Hull must be CCW.
inline double hull_interior_margin(const Eigen::Vector2d& p,
                                   const std::vector<Eigen::Vector2d>& hull) {
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Eigen::Vector2d& a = hull[i];
    const Eigen::Vector2d& b = hull[(i + 1) % hull.size()];
    const Eigen::Vector2d e = b - a;
    const double len = e.norm();
    if (len < 1e-15) continue;
    // CCW hull: interior is to the left of each edge.
    const double d = (e.x() * (p.y() - a.y()) - e.y() * (p.x() - a.x())) / len;
    margin = std::min(margin, d);
  }
  return margin;
}

// True iff `point` lies inside or on the convex hull of `hull_points`.
// Throws std::domain_error when the inputs are collinear within 1e-9.
inline bool point_in_hull_2d(const Eigen::Vector2d& point,
                             const std::vector<Eigen::Vector2d>& hull_points) {
  const auto hull = convex_hull_2d(hull_points);
  return hull_interior_margin(point, hull) >= -1e-12;
}

// Index of the point nearest to `query`; ties broken by lowest index.
inline std::size_t nearest_neighbor_index(const Eigen::Vector3d& query,
                                          const PointCloud& cloud) {
  if (cloud.empty())
    throw std::invalid_argument("nearest_neighbor_index: empty cloud");
  std::size_t best = 0;
  double best_d2 = (cloud.points[0] - query).squaredNorm();
  for (std::size_t i = 1; i < cloud.size(); ++i) {
    const double d2 = (cloud.points[i] - query).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best = i;
    }
  }
  return best;
}

}  // namespace regrasp
