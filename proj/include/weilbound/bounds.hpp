#pragma once

// Upper bounds for #X(F_q): closed forms of order 1 to 3, numeric bounds of
// any order with best-order selection, asymptotic bounds for Ihara's constant,
// Tsfasman defects of asymptotically exact families and relative bounds for
// coverings.

#include "weilbound/optimizer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weilbound {

struct OrderBound {
  int n = 0;
  double mu = 0.0;
  double real_bound = 0.0;  // q + 1 - 2 g sqrt(q) mu
  std::int64_t int_bound = 0;
  bool applicable = false;
  bool certified = false;
  std::string note;  // why the order does not apply, empty otherwise
};

struct BestBoundReport {
  double q = 0.0;
  double g = 0.0;
  std::vector<OrderBound> per_order;  // n = 1..n_max
  std::int64_t best_int = 0;
  int best_order = 0;
};

/// Limits beta_r = lim B_r / g of an asymptotically exact family, r = 1..R.
struct TowerSpec {
  double q = 0.0;
  std::vector<double> betas;
};

/// Coefficients a(q), b(q), c(q), d(q) exactly as printed for the third order bound.
struct Order3Coefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

struct FiberProductBound {
  double value = 0.0;
  std::optional<std::string> warning;
};

double genus_threshold_order2(double q);  // sqrt(q)(sqrt(q) - 1) / 2
double genus_threshold_order3(double q);  // sqrt(q)(q - 1) / sqrt(2)

OrderBound weil_order1(double q, double g);
OrderBound ihara_order2(double q, double g);

/// Order 3 from the negative root of the quadratic G_3^-(P(x)) = 0 on the Ihara line.
OrderBound order3_closed(double q, double g);

Order3Coefficients order3_coefficients(double q);
/// mu_3 from the printed radical; disagrees with order3_closed (kept for comparison).
double order3_mu_as_printed(double q, double g);
/// Printed third order bound on #X(F_q) - q - 1.
double order3_deviation_as_printed(double q, double g);

OrderBound order_n_bound(double q, double g, int n, const SegmentOptions& opts = {});
BestBoundReport best_bound(double q, double g, int n_max = 12, const SegmentOptions& opts = {});

/// -2 sqrt(q) mu_n^infinity: an upper bound for Ihara's constant A(q).
double asymptotic_order_bound(double q, int n, const SegmentOptions& opts = {});
/// Printed third order asymptotic: (sqrt(5 + 8/sqrt(q) - 1/q^2) - 1 + 1/q) sqrt(q).
double asymptotic_order3_as_printed(double q);
/// Drinfeld-Vladut: A(q) <= sqrt(q) - 1.
double drinfeld_vladut(double q);

/// delta = 1 - sum_r r beta_r / (q^{r/2} - 1).
double tsfasman_defect(const TowerSpec& t);
/// Tsfasman's inequality sum_r r beta_r / (q^{r/2} - 1) <= 1 fails.
bool tsfasman_violated(const TowerSpec& t);
/// 1 - sum_{r s <= m-1} (1 - r s / m) r beta_r / q^{r s / 2}; tends to the defect as m grows.
double tsfasman_partial(const TowerSpec& t, int m);

/// |#X(F_q) - #Y(F_q)| <= 2 (gX - gY) sqrt(q) for a covering X -> Y.
double relative_weil(double q, double g_x, double g_y);
/// Upper bound for #X(F_{q^2}) - #Y(F_{q^2}) given dN1 = #X(F_q) - #Y(F_q).
double relative_order2(double q, double g_x, double g_y, double dn1);
/// 2 (gX - gY1 - gY2 + gZ) sqrt(q) for a cartesian square of curves.
FiberProductBound fiber_product_bound(double q, double g_x, double g_y1, double g_y2, double g_z);

}  // namespace weilbound
