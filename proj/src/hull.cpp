#include "hull.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "error.hpp"

namespace plurind {

namespace {

QVec sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

// Primitive-integer canonical form with positive leading entry; makes facet
// hyperplanes comparable across simplicial co-facets.
void canonicalize_hyperplane(QVec& a, Rational& b) {
  BigInt lcm_den = 1;
  for (const auto& q : a) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(q));
  lcm_den = boost::multiprecision::lcm(lcm_den, denominator(b));
  BigInt g = 0;
  for (auto& q : a) {
    q *= lcm_den;
    g = boost::multiprecision::gcd(g, numerator(q));
  }
  b *= lcm_den;
  g = boost::multiprecision::gcd(g, numerator(b));
  if (g == 0) return;
  for (auto& q : a) q /= g;
  b /= g;
}

struct Facet {
  std::vector<int> verts;  // sorted point indices, size d (simplicial)
  QVec normal;             // outward
  Rational offset;         // <normal, x> = offset on the facet
  bool alive = true;
};

// Generalized cross product: the (unnormalized) normal of the hyperplane
// spanned by rows, via cofactor expansion. rows has d-1 vectors of length d.
QVec hyperplane_normal(const std::vector<QVec>& rows, int d) {
  QVec normal(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    std::vector<QVec> minor;
    minor.reserve(rows.size());
    for (const auto& r : rows) {
      QVec m;
      m.reserve(static_cast<size_t>(d) - 1);
      for (int j = 0; j < d; ++j)
        if (j != i) m.push_back(r[static_cast<size_t>(j)]);
      minor.push_back(std::move(m));
    }
    Rational det = rational_det(minor);
    normal[static_cast<size_t>(i)] = (i % 2 == 0) ? det : -det;
  }
  return normal;
}

Facet make_facet(const std::vector<int>& verts, const std::vector<QVec>& pts,
                 const QVec& interior, int d) {
  std::vector<QVec> rows;
  rows.reserve(verts.size() - 1);
  for (size_t k = 1; k < verts.size(); ++k)
    rows.push_back(sub(pts[static_cast<size_t>(verts[k])],
                       pts[static_cast<size_t>(verts[0])]));
  QVec normal = hyperplane_normal(rows, d);
  Rational offset = dot(normal, pts[static_cast<size_t>(verts[0])]);
  Rational side = dot(normal, interior);
  if (side > offset) {
    for (auto& q : normal) q = -q;
    offset = -offset;
  } else if (side == offset) {
    fail(ErrorCode::Numeric, "interior point lies on a facet hyperplane");
  }
  Facet f;
  f.verts = verts;
  std::sort(f.verts.begin(), f.verts.end());
  f.normal = std::move(normal);
  f.offset = std::move(offset);
  return f;
}

// Incremental beneath-beyond for full dimension d in {2,3,4}. `basis` holds
// indices of d+1 affinely independent points. Returns alive simplicial
// facets; the caller extracts vertices and deduplicates hyperplanes.
std::vector<Facet> incremental_hull(const std::vector<QVec>& pts,
                                    const std::vector<int>& basis, int d) {
  QVec interior(static_cast<size_t>(d), Rational(0));
  for (int idx : basis)
    for (int k = 0; k < d; ++k)
      interior[static_cast<size_t>(k)] +=
          pts[static_cast<size_t>(idx)][static_cast<size_t>(k)];
  for (auto& q : interior) q /= Rational(d + 1);

  std::vector<Facet> facets;
  for (size_t skip = 0; skip < basis.size(); ++skip) {
    std::vector<int> verts;
    for (size_t k = 0; k < basis.size(); ++k)
      if (k != skip) verts.push_back(basis[k]);
    facets.push_back(make_facet(verts, pts, interior, d));
  }

  std::set<int> used(basis.begin(), basis.end());
  for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
    if (used.count(p)) continue;
    const QVec& point = pts[static_cast<size_t>(p)];
    std::vector<int> visible;
    for (int f = 0; f < static_cast<int>(facets.size()); ++f) {
      if (!facets[static_cast<size_t>(f)].alive) continue;
      if (dot(facets[static_cast<size_t>(f)].normal, point) >
          facets[static_cast<size_t>(f)].offset)
        visible.push_back(f);
    }
    if (visible.empty()) continue;  // inside or on the current hull

    // Horizon ridges: (d-1)-subsets shared by exactly one visible facet.
    std::map<std::vector<int>, int> ridge_count;
    for (int f : visible) {
      const auto& verts = facets[static_cast<size_t>(f)].verts;
      for (size_t skip = 0; skip < verts.size(); ++skip) {
        std::vector<int> ridge;
        for (size_t k = 0; k < verts.size(); ++k)
          if (k != skip) ridge.push_back(verts[k]);
        ridge_count[ridge] += 1;
      }
    }
    for (int f : visible) facets[static_cast<size_t>(f)].alive = false;
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      std::vector<int> verts = ridge;
      verts.push_back(p);
      facets.push_back(make_facet(verts, pts, interior, d));
    }
  }

  std::vector<Facet> alive;
  for (auto& f : facets)
    if (f.alive) alive.push_back(std::move(f));
  return alive;
}

// Andrew monotone chain with exact cross products; returns counterclockwise
// vertex order, strict turns only (collinear points dropped).
std::vector<int> monotone_chain(const std::vector<QVec>& pts) {
  std::vector<int> order(pts.size());
  for (size_t k = 0; k < pts.size(); ++k) order[k] = static_cast<int>(k);
  // Points are already lex-sorted and unique.
  auto cross = [&](int o, int a, int b) {
    const QVec &po = pts[static_cast<size_t>(o)], &pa = pts[static_cast<size_t>(a)],
               &pb = pts[static_cast<size_t>(b)];
    return (pa[0] - po[0]) * (pb[1] - po[1]) - (pa[1] - po[1]) * (pb[0] - po[0]);
  };
  std::vector<int> h(2 * pts.size());
  size_t k = 0;
  for (int i : order) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], i) <= 0) --k;
    h[k++] = i;
  }
  const size_t lower = k + 1;
  for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
    while (k >= lower && cross(h[k - 2], h[k - 1], *it) <= 0) --k;
    h[k++] = *it;
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

Rational rational_det(std::vector<QVec> mat) {
  const size_t d = mat.size();
  Rational det = 1;
  for (size_t col = 0; col < d; ++col) {
    size_t pivot = col;
    while (pivot < d && mat[pivot][col] == 0) ++pivot;
    if (pivot == d) return Rational(0);
    if (pivot != col) {
      std::swap(mat[pivot], mat[col]);
      det = -det;
    }
    det *= mat[col][col];
    for (size_t row = col + 1; row < d; ++row) {
      if (mat[row][col] == 0) continue;
      Rational factor = mat[row][col] / mat[col][col];
      for (size_t j = col; j < d; ++j) mat[row][j] -= factor * mat[col][j];
    }
  }
  return det;
}

int rational_rank(std::vector<QVec> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows.front().size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows.size(); ++col) {
    size_t pivot = row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[row]);
    for (size_t r = row + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[row][col];
      for (size_t j = col; j < cols; ++j) rows[r][j] -= factor * rows[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

bool RatPolytope::contains(const QVec& point) const {
  if (vertices.empty()) return false;
  if (point.size() != static_cast<size_t>(n))
    fail(ErrorCode::Dimension, "membership test dimension mismatch");
  if (full_dimensional()) {
    for (const auto& f : facets)
      if (dot(f.normal, point) > f.offset) return false;
    return true;
  }
  // Degenerate: check membership within the affine span by re-running the
  // hull with the point added; the point is inside iff nothing changes.
  // Desk-scale polytopes keep this affordable.
  std::vector<QVec> pts = vertices;
  pts.push_back(point);
  RatPolytope grown = hull(std::move(pts));
  return grown.dim == dim && grown.vertices == vertices;
}

RatPolytope hull(std::vector<QVec> points) {
  if (points.empty()) fail(ErrorCode::Invalid, "hull of an empty point set");
  const int n = static_cast<int>(points.front().size());
  if (n < 1 || n > kMaxDimension)
    fail(ErrorCode::Dimension, "hull dimension must be 1..4");
  for (const auto& p : points)
    if (p.size() != static_cast<size_t>(n))
      fail(ErrorCode::Dimension, "hull points have mixed dimensions");

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  RatPolytope out;
  out.n = n;
  out.volume = 0;

  // Greedy affine basis: indices whose differences from points[0] are
  // linearly independent.
  std::vector<int> basis{0};
  std::vector<QVec> dirs;
  for (size_t p = 1; p < points.size() && static_cast<int>(dirs.size()) < n;
       ++p) {
    QVec d = sub(points[p], points[0]);
    std::vector<QVec> trial = dirs;
    trial.push_back(d);
    if (rational_rank(trial) == static_cast<int>(trial.size())) {
      dirs.push_back(std::move(d));
      basis.push_back(static_cast<int>(p));
    }
  }
  const int d = static_cast<int>(dirs.size());
  out.dim = d;

  if (d == 0) {
    out.vertices = {points[0]};
    return out;
  }

  if (d < n) {
    // Lower-dimensional point set: map to exact coordinates in the affine
    // span and recurse, then pull vertex coordinates back. Coordinates are
    // solved from the pivot rows of the direction matrix.
    std::vector<QVec> coords;
    coords.reserve(points.size());
    // The matrix dirs (d x n) has rank d; pick d independent columns.
    std::vector<size_t> piv_cols;
    {
      std::vector<QVec> cols;
      for (size_t col = 0; col < static_cast<size_t>(n); ++col) {
        QVec c;
        for (const auto& r : dirs) c.push_back(r[col]);
        std::vector<QVec> trial;
        for (size_t pc : piv_cols) {
          QVec t;
          for (const auto& r : dirs) t.push_back(r[pc]);
          trial.push_back(std::move(t));
        }
        trial.push_back(c);
        if (rational_rank(trial) == static_cast<int>(trial.size()))
          piv_cols.push_back(col);
        if (static_cast<int>(piv_cols.size()) == d) break;
      }
    }
    // Solve dirs_piv^T * lambda = (p - p0)_piv for every point.
    for (const auto& p : points) {
      QVec rhs_full = sub(p, points[0]);
      // Build the d x d system A lambda = rhs over pivot columns, where
      // A[i][j] = dirs[j][piv_cols[i]].
      std::vector<QVec> aug(static_cast<size_t>(d),
                            QVec(static_cast<size_t>(d) + 1));
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j)
          aug[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              dirs[static_cast<size_t>(j)][piv_cols[static_cast<size_t>(i)]];
        aug[static_cast<size_t>(i)][static_cast<size_t>(d)] =
            rhs_full[piv_cols[static_cast<size_t>(i)]];
      }
      // Gaussian elimination with exact pivoting.
      for (int col = 0; col < d; ++col) {
        int pivot = col;
        while (pivot < d && aug[static_cast<size_t>(pivot)][static_cast<size_t>(col)] == 0)
          ++pivot;
        if (pivot == d) fail(ErrorCode::Numeric, "singular affine system");
        std::swap(aug[static_cast<size_t>(pivot)], aug[static_cast<size_t>(col)]);
        for (int row = 0; row < d; ++row) {
          if (row == col || aug[static_cast<size_t>(row)][static_cast<size_t>(col)] == 0)
            continue;
          Rational f = aug[static_cast<size_t>(row)][static_cast<size_t>(col)] /
                       aug[static_cast<size_t>(col)][static_cast<size_t>(col)];
          for (int j = col; j <= d; ++j)
            aug[static_cast<size_t>(row)][static_cast<size_t>(j)] -=
                f * aug[static_cast<size_t>(col)][static_cast<size_t>(j)];
        }
      }
      QVec lambda(static_cast<size_t>(d));
      for (int i = 0; i < d; ++i)
        lambda[static_cast<size_t>(i)] =
            aug[static_cast<size_t>(i)][static_cast<size_t>(d)] /
            aug[static_cast<size_t>(i)][static_cast<size_t>(i)];
      coords.push_back(std::move(lambda));
    }
    RatPolytope sub_hull = hull(coords);
    // Map sub-hull vertices back to the ambient points they came from.
    std::map<QVec, QVec> back;
    for (size_t k = 0; k < points.size(); ++k) back[coords[k]] = points[k];
    for (const auto& v : sub_hull.vertices) out.vertices.push_back(back.at(v));
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;  // ambient volume 0, no ambient facets
  }

  // Full-dimensional cases.
  if (d == 1) {
    out.vertices = {points.front(), points.back()};
    out.volume = points.back()[0] - points.front()[0];
    out.facets.push_back({QVec{Rational(-1)}, -points.front()[0]});
    out.facets.push_back({QVec{Rational(1)}, points.back()[0]});
    for (auto& f : out.facets) canonicalize_hyperplane(f.normal, f.offset);
    return out;
  }

  if (d == 2) {
    std::vector<int> chain = monotone_chain(points);
    Rational twice_area = 0;
    for (size_t k = 0; k < chain.size(); ++k) {
      const QVec& a = points[static_cast<size_t>(chain[k])];
      const QVec& b = points[static_cast<size_t>(chain[(k + 1) % chain.size()])];
      twice_area += a[0] * b[1] - b[0] * a[1];
      // Outward normal of the CCW edge a -> b.
      QVec normal{b[1] - a[1], a[0] - b[0]};
      Rational offset = dot(normal, a);
      canonicalize_hyperplane(normal, offset);
      out.facets.push_back({std::move(normal), std::move(offset)});
    }
    out.volume = twice_area / 2;
    for (int idx : chain) out.vertices.push_back(points[static_cast<size_t>(idx)]);
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
  }

  // d == 3 or 4.
  std::vector<Facet> facets = incremental_hull(points, basis, d);

  // Deduplicate hyperplanes (co-facets of a simplicial subdivision share the
  // canonical form).
  std::map<std::pair<QVec, Rational>, bool> seen;
  for (auto& f : facets) {
    QVec a = f.normal;
    Rational b = f.offset;
    canonicalize_hyperplane(a, b);
    f.normal = a;
    f.offset = b;
    if (!seen.count({a, b})) {
      seen[{a, b}] = true;
      out.facets.push_back({std::move(a), std::move(b)});
    }
  }

  // Candidate vertices: facet corners. A corner is a true vertex iff its
  // active facet normals span R^d.
  std::set<int> candidates;
  for (const auto& f : facets) candidates.insert(f.verts.begin(), f.verts.end());
  for (int idx : candidates) {
    const QVec& v = points[static_cast<size_t>(idx)];
    std::vector<QVec> active;
    for (const auto& f : out.facets)
      if (dot(f.normal, v) == f.offset) active.push_back(f.normal);
    if (rational_rank(active) == d) out.vertices.push_back(v);
  }
  std::sort(out.vertices.begin(), out.vertices.end());

  // Fan volume from the first point: simplicial facets not containing it
  // contribute |det| / d!.
  Rational vol = 0;
  const QVec& apex = points[0];
  Rational dfact = 1;
  for (int k = 2; k <= d; ++k) dfact *= k;
  for (const auto& f : facets) {
    std::vector<QVec> rows;
    rows.reserve(f.verts.size());
    for (int idx : f.verts) rows.push_back(sub(points[static_cast<size_t>(idx)], apex));
    Rational det = rational_det(rows);
    if (det < 0) det = -det;
    vol += det;
  }
  out.volume = vol / dfact;
  return out;
}

}  // namespace plurind
