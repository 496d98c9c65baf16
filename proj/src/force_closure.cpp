#include "graspforge/force_closure.hpp"

#include <cmath>

namespace gf {

namespace {

double dot3(const Wrench& a, const Wrench& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Wrench cross3(const Wrench& a, const Wrench& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm3(const Wrench& a) { return std::sqrt(dot3(a, a)); }

// Orthonormal basis of span{w} by modified Gram-Schmidt.
std::vector<Wrench> span_basis(const std::vector<Wrench>& ws, double tol) {
  std::vector<Wrench> basis;
  for (Wrench w : ws) {
    for (const Wrench& b : basis) {
      const double p = dot3(w, b);
      for (int k = 0; k < 3; ++k) w[k] -= p * b[k];
    }
    const double n = norm3(w);
    if (n > tol) {
      for (int k = 0; k < 3; ++k) w[k] /= n;
      basis.push_back(w);
      if (basis.size() == 3) break;
    }
  }
  return basis;
}

}  // namespace

std::vector<Wrench> contact_wrenches(std::span<const Contact> contacts, const Vec2& centroid,
                                     double mu) {
  std::vector<Wrench> ws;
  ws.reserve(contacts.size() * 2);
  const double half_cone = std::atan(mu);
  for (const Contact& c : contacts) {
    const Vec2 r = c.point - centroid;
    for (double side : {-half_cone, half_cone}) {
      const Vec2 f = c.normal.rotated(side);
      ws.push_back({f.x, f.y, r.cross(f)});
    }
  }
  return ws;
}

bool check_force_closure(std::span<const Contact> contacts, const Vec2& centroid, double mu) {
  if (contacts.size() < 2) return false;
  const std::vector<Wrench> ws = contact_wrenches(contacts, centroid, mu);

  double scale = 0.0;
  for (const Wrench& w : ws) scale = std::max(scale, norm3(w));
  if (scale <= 0.0) return false;
  const double tol = 1e-9 * scale;

  // Project onto the wrench span; closure is judged against disturbances the
  // contact set can express at all (a flat wrench set with the origin in its
  // relative interior still counts).
  const std::vector<Wrench> basis = span_basis(ws, tol);
  const size_t rank = basis.size();
  if (rank == 0) return false;

  std::vector<Wrench> p(ws.size(), Wrench{0.0, 0.0, 0.0});
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t k = 0; k < rank; ++k) p[i][k] = dot3(ws[i], basis[k]);

  // The origin is strictly inside iff no unit direction u in the span has
  // every projected wrench on one side. A separating direction, when one
  // exists, can be taken orthogonal to one (rank 2) or two (rank 3)
  // linearly independent generators, so those normals are the candidates.
  auto separated_by = [&](Wrench u) {
    const double n = norm3(u);
    if (n <= 1e-12) return false;
    for (int k = 0; k < 3; ++k) u[k] /= n;
    for (const Wrench& w : p)
      if (dot3(w, u) > tol) return false;
    return true;
  };

  std::vector<Wrench> candidates;
  if (rank == 1) {
    candidates.push_back({1.0, 0.0, 0.0});
    candidates.push_back({-1.0, 0.0, 0.0});
  } else if (rank == 2) {
    for (const Wrench& w : p) {
      candidates.push_back({-w[1], w[0], 0.0});
      candidates.push_back({w[1], -w[0], 0.0});
    }
  } else {
    for (size_t i = 0; i < ws.size(); ++i) {
      for (size_t j = i + 1; j < ws.size(); ++j) {
        const Wrench n = cross3(p[i], p[j]);
        candidates.push_back(n);
        candidates.push_back({-n[0], -n[1], -n[2]});
      }
    }
  }

  for (const Wrench& u : candidates)
    if (separated_by(u)) return false;
  return true;
}

}  // namespace gf
