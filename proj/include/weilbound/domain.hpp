#pragma once

// Membership in the Weil domain (positive (semi)definite normalized Toeplitz
// matrices), Ihara lines and the conversion between point counts and
// normalized coordinates.

#include "weilbound/gram.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace weilbound {

using Point = GramPoint<double>;

/// Genus of a curve; may be the distinguished infinite value used for
/// asymptotic lines, where the additive Ihara terms vanish exactly.
class Genus {
 public:
  explicit Genus(double g);
  static Genus infinite() { return Genus(); }

  bool is_infinite() const { return infinite_; }
  double value() const { return value_; }  // +inf when infinite

 private:
  Genus() : value_(std::numeric_limits<double>::infinity()), infinite_(true) {}
  double value_;
  bool infinite_ = false;
};

/// The line of points where every Ihara constraint #X(F_{q^i}) >= #X(F_q)
/// is tight, parametrized by x_1.
struct IharaLine {
  IharaLine(double q, Genus g, int n);

  double q;
  Genus g;
  int n;
  double alpha;  // 1 / sqrt(q)

  /// Offset of coordinate i (i >= 2) from alpha^{i-1} x_1; zero on infinite lines.
  double offset(int i) const;
};

struct CurveCounts {
  double q;
  int g;
  std::vector<std::int64_t> counts;  // counts[i - 1] = #X(F_{q^i})
};

struct DomainVerdict {
  bool inside_open = false;
  bool inside_closed = false;
  Vector<double> minors;
  double min_eigenvalue = 0.0;
};

/// Every leading minor G_i exceeds tol.
DomainVerdict in_open_domain(const Point& p, double tol = 1e-12);

/// Smallest eigenvalue of T_{n+1}(1, x) is at least -tol.
DomainVerdict in_closed_domain(const Point& p, double tol = 1e-9);

/// Brute-force closed-domain test over all principal minors (2^{n+1} of them).
bool in_closed_domain_by_minors(const Point& p, double tol = 1e-9);

/// Smallest eigenvalue of T_{n+1}(1, x).
double min_eigenvalue(const Point& p);

/// Cholesky test of T_{n+1}(1, x) + tol * I; agrees with min_eigenvalue(p) > -tol.
bool psd_within(const Point& p, double tol);

Point ihara_point(const IharaLine& line, double x1);

/// h_i(x_1, x_i) for i = 2..n; the point satisfies the Ihara constraints iff all are <= 0.
std::vector<double> ihara_slacks(const IharaLine& line, const Point& p);

/// Point counts that violate #X(F_{q^i}) >= #X(F_q), as 1-based extension degrees.
std::vector<int> ihara_count_violations(const CurveCounts& c);

/// x_i = (q^i + 1 - N_i) / (2 g q^{i/2}).
Point point_from_counts(const CurveCounts& c);

/// floor(q + 1 - 2 g sqrt(q) mu + 1e-9).
std::int64_t count_bound_from_mu(double q, double g, double mu);

/// Upper bound for #X(F_{q^2}) given #X(F_q).
double second_extension_bound(double q, double g, double n1);

}  // namespace weilbound
