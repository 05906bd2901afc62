#include "weilbound/domain.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace weilbound {

Genus::Genus(double g) : value_(g) {
  if (!(g > 0.0) || !std::isfinite(g)) throw std::invalid_argument("genus must be positive and finite");
}

IharaLine::IharaLine(double q_, Genus g_, int n_) : q(q_), g(g_), n(n_), alpha(1.0 / std::sqrt(q_)) {
  if (!(q >= 2.0)) throw std::invalid_argument("IharaLine: q must be >= 2");
  if (n < 1) throw std::invalid_argument("IharaLine: order must be >= 1");
}

double IharaLine::offset(int i) const {
  if (g.is_infinite() || i < 2) return 0.0;
  return (std::pow(q, i - 1) - 1.0) / (2.0 * g.value() * std::pow(q, 0.5 * (i - 2)));
}

double min_eigenvalue(const Point& p) {
  Eigen::SelfAdjointEigenSolver<SquareMatrix<double>> solver(gram_matrix(p), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

bool psd_within(const Point& p, double tol) {
  SquareMatrix<double> t = gram_matrix(p);
  t.diagonal().array() += tol;
  Eigen::LLT<SquareMatrix<double>> llt(t);
  return llt.info() == Eigen::Success;
}

DomainVerdict in_open_domain(const Point& p, double tol) {
  DomainVerdict v;
  v.minors = leading_minors(p);
  v.min_eigenvalue = min_eigenvalue(p);
  v.inside_open = (v.minors.array() > tol).all();
  v.inside_closed = v.inside_open || v.min_eigenvalue >= -1e-9;
  return v;
}

DomainVerdict in_closed_domain(const Point& p, double tol) {
  DomainVerdict v;
  v.minors = leading_minors(p);
  v.min_eigenvalue = min_eigenvalue(p);
  v.inside_closed = v.min_eigenvalue >= -tol;
  v.inside_open = v.inside_closed && (v.minors.array() > 1e-12).all();
  return v;
}

bool in_closed_domain_by_minors(const Point& p, double tol) {
  const SquareMatrix<double> t = gram_matrix(p);
  const int size = static_cast<int>(t.rows());
  for (unsigned mask = 1; mask < (1u << size); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < size; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const auto k = static_cast<Eigen::Index>(idx.size());
    SquareMatrix<double> sub(k, k);
    for (Eigen::Index r = 0; r < k; ++r)
      for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = t(idx[r], idx[c]);
    if (det(sub) < -tol) return false;
  }
  return true;
}

Point ihara_point(const IharaLine& line, double x1) {
  Vector<double> x(line.n);
  double scale = 1.0;
  for (int i = 1; i <= line.n; ++i) {
    x(i - 1) = scale * x1 + line.offset(i);
    scale *= line.alpha;
  }
  return Point(std::move(x));
}

std::vector<double> ihara_slacks(const IharaLine& line, const Point& p) {
  if (line.g.is_infinite()) throw std::invalid_argument("ihara_slacks: genus must be finite");
  if (p.order() != line.n) throw std::invalid_argument("ihara_slacks: order mismatch");
  std::vector<double> h;
  h.reserve(static_cast<std::size_t>(line.n > 1 ? line.n - 1 : 0));
  for (int i = 2; i <= line.n; ++i)
    h.push_back(p.x(i) - std::pow(line.alpha, i - 1) * p.x(1) - line.offset(i));
  return h;
}

std::vector<int> ihara_count_violations(const CurveCounts& c) {
  std::vector<int> bad;
  for (std::size_t i = 1; i < c.counts.size(); ++i)
    if (c.counts[i] < c.counts[0]) bad.push_back(static_cast<int>(i + 1));
  return bad;
}

Point point_from_counts(const CurveCounts& c) {
  if (c.g <= 0) throw std::invalid_argument("point_from_counts: genus must be >= 1");
  if (c.counts.empty()) throw std::invalid_argument("point_from_counts: no counts given");
  Vector<double> x(static_cast<Eigen::Index>(c.counts.size()));
  for (std::size_t k = 0; k < c.counts.size(); ++k) {
    const int i = static_cast<int>(k) + 1;
    x(static_cast<Eigen::Index>(k)) = (std::pow(c.q, i) + 1.0 - static_cast<double>(c.counts[k])) /
                                      (2.0 * c.g * std::pow(c.q, 0.5 * i));
  }
  return Point(std::move(x));
}

std::int64_t count_bound_from_mu(double q, double g, double mu) {
  return static_cast<std::int64_t>(std::floor(q + 1.0 - 2.0 * g * std::sqrt(q) * mu + 1e-9));
}

double second_extension_bound(double q, double g, double n1) {
  if (!(g >= 1.0)) throw std::invalid_argument("second_extension_bound: genus must be >= 1");
  const double dev = n1 - (q + 1.0);
  return q * q + 1.0 + 2.0 * g * q - dev * dev / g;
}

}  // namespace weilbound
