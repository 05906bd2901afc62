#pragma once

// Minimization of x_1 over the intersection of the closed Weil domain with the
// Ihara half-spaces. The minimizer is the left end A of the segment cut out of
// the domain by the Ihara line, when A lies on G_n^- = 0 and passes the
// Lagrange-multiplier sign conditions reported in CriteriaReport.

#include "weilbound/domain.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace weilbound {

class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SegmentOptions {
  int grid = 4096;
  double tol = 1e-13;         // bracket width for both endpoints
  double membership = 1e-9;   // closed-domain eigenvalue tolerance
};

struct FeasibleSegment {
  double x1_lo = 0.0;
  double x1_hi = 0.0;
  bool found = false;
};

struct CriteriaReport {
  double g_minus_value = 0.0;
  bool on_g_minus = false;      // |G_n^-| <= 1e-9 at the point
  bool partials_ok = false;     // d_i G_n^- >= -1e-9 for i = 2..n
  bool directional_ok = false;  // sum_i alpha^{i-1} d_i G_n^- > 0
  bool certified = false;
  double directional = 0.0;
  Vector<double> gradient;
};

struct MuResult {
  double mu = 0.0;
  Point point;
  CriteriaReport report;
  FeasibleSegment segment;
};

struct ThresholdResult {
  int n = 0;
  double q = 0.0;
  double g_n = 0.0;
  double g_low = 0.0;
  double g_high = 0.0;
};

/// x_1-interval of the Ihara line inside the closed Weil domain.
///
/// Scans `grid` + 1 equispaced samples of [-1, 1]. The smallest eigenvalue of
/// the Toeplitz matrix is concave along a line, so when no sample is feasible
/// its maximum is located by golden-section search before declaring the
/// segment empty. Endpoints are then bisected to width `tol`.
FeasibleSegment feasible_segment(const IharaLine& line, const SegmentOptions& opts = {});

/// Criteria for P0 on the Ihara line to minimize x_1.
CriteriaReport criteria_report(const IharaLine& line, const Point& p0);

/// mu_n = min x_1 over the closed Weil domain intersected with the Ihara
/// half-spaces. Empty when the line misses the domain. The report is not
/// certified when the left endpoint does not lie on G_n^- = 0 or the criteria
/// fail; the value is then only the end of the segment.
std::optional<MuResult> mu_n(double q, Genus g, int n, const SegmentOptions& opts = {});

/// Left end of the feasible segment on the infinite-genus Ihara line.
double mu_infinity(double q, int n, const SegmentOptions& opts = {});

/// Genus above which the order-n minimizer exists on G_n^- = 0 with x_1 < 0.
/// Bisection on u = 1/g to relative tolerance `tol` in g.
ThresholdResult threshold_genus(double q, int n, double tol = 1e-9);

}  // namespace weilbound
