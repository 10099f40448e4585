#include "gaugenorm/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "gaugenorm/errors.hpp"

namespace gaugenorm {

namespace {

// Small dynamic bitset; constraint counts here stay in the hundreds.
class Bits {
public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if ((w_[k] & ~o.w_[k]) != 0) return false;
    return true;
  }
  friend Bits operator&(const Bits& a, const Bits& b) {
    Bits r = a;
    for (std::size_t k = 0; k < r.w_.size(); ++k) r.w_[k] &= b.w_[k];
    return r;
  }

private:
  std::vector<std::uint64_t> w_;
};

struct Ray {
  std::vector<double> v;
  Bits tight;
};

void normalize(std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  if (m > 0.0)
    for (double& x : v) x /= m;
}

}  // namespace

std::vector<std::vector<double>> enumerate_vertices_orthant(const std::vector<std::vector<double>>& rows,
                                                           const std::vector<double>& bounds,
                                                           const VertexEnumOptions& options) {
  if (rows.size() != bounds.size()) throw DimensionError("vertex enumeration: one bound per row required");
  const std::size_t d = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != d) throw DimensionError("vertex enumeration: rows must share a length");
  if (d == 0) throw DimensionError("vertex enumeration needs at least one variable");

  // Homogenized space has dimension D = d + 1 (last coordinate is lambda).
  // Constraint ids: [0, D) coordinate nonnegativity, then one per row.
  const std::size_t dim = d + 1;
  const std::size_t total = dim + rows.size();
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < dim; ++i) {
    Ray r{std::vector<double>(dim, 0.0), Bits(total)};
    r.v[i] = 1.0;
    for (std::size_t k = 0; k < dim; ++k)
      if (k != i) r.tight.set(k);
    rays.push_back(std::move(r));
  }

  for (std::size_t h = 0; h < rows.size(); ++h) {
    // constraint: bounds[h] * lambda - rows[h] . z >= 0
    std::vector<double> coef(dim);
    for (std::size_t k = 0; k < d; ++k) coef[k] = -rows[h][k];
    coef[d] = bounds[h];
    const std::size_t id = dim + h;

    std::vector<double> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      double acc = 0.0;
      for (std::size_t k = 0; k < dim; ++k) acc += coef[k] * rays[i].v[k];
      val[i] = acc;
      if (acc > options.tol) {
        pos.push_back(i);
        next.push_back(rays[i]);
      } else if (acc < -options.tol) {
        neg.push_back(i);
      } else {
        Ray r = rays[i];
        r.tight.set(id);
        next.push_back(std::move(r));
      }
    }
    if (neg.empty()) {
      rays = std::move(next);
      continue;
    }

    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        const Bits common = rays[p].tight & rays[q].tight;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.subset_of(rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh{std::vector<double>(dim), common};
        for (std::size_t k = 0; k < dim; ++k) fresh.v[k] = val[p] * rays[q].v[k] - val[q] * rays[p].v[k];
        for (double& x : fresh.v)
          if (std::fabs(x) < 1e-15) x = 0.0;
        normalize(fresh.v);
        fresh.tight.set(id);
        next.push_back(std::move(fresh));
        if (next.size() > options.max_rays) throw NumericalError("vertex enumeration: ray budget exceeded");
      }
    }
    rays = std::move(next);
  }

  std::vector<std::vector<double>> vertices;
  for (const auto& r : rays) {
    const double lambda = r.v[d];
    if (lambda <= options.tol) {
      throw DomainError("vertex enumeration: polytope is unbounded");
    }
    std::vector<double> z(d);
    for (std::size_t k = 0; k < d; ++k) z[k] = std::max(0.0, r.v[k] / lambda);
    vertices.push_back(std::move(z));
  }
  return vertices;
}

}  // namespace gaugenorm
