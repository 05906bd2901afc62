#include "weilbound/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace weilbound {

namespace {

constexpr double kIntegerGuard = 1e-9;

OrderBound from_mu(double q, double g, int n, double mu) {
  OrderBound b;
  b.n = n;
  b.mu = mu;
  b.real_bound = q + 1.0 - 2.0 * g * std::sqrt(q) * mu;
  b.int_bound = count_bound_from_mu(q, g, mu);
  b.applicable = true;
  b.certified = true;
  return b;
}

OrderBound not_applicable(int n, std::string why) {
  OrderBound b;
  b.n = n;
  b.mu = std::numeric_limits<double>::quiet_NaN();
  b.real_bound = std::numeric_limits<double>::quiet_NaN();
  b.note = std::move(why);
  return b;
}

// Negative root of a x^2 + b x + c, cancellation-free.
double negative_root(double a, double b, double c) {
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return std::numeric_limits<double>::quiet_NaN();
  const double s = std::sqrt(disc);
  if (b > 0.0) return (-b - s) / (2.0 * a);
  const double other = (-b + s) / (2.0 * a);
  return other != 0.0 ? c / (a * other) : (-b - s) / (2.0 * a);
}

}  // namespace

double genus_threshold_order2(double q) { return std::sqrt(q) * (std::sqrt(q) - 1.0) / 2.0; }

double genus_threshold_order3(double q) { return std::sqrt(q) * (q - 1.0) / std::sqrt(2.0); }

OrderBound weil_order1(double q, double g) {
  if (g < 0.0) throw std::invalid_argument("weil_order1: negative genus");
  return from_mu(q, g, 1, -1.0);
}

OrderBound ihara_order2(double q, double g) {
  if (!(g > 0.0)) throw std::invalid_argument("ihara_order2: genus must be positive");
  if (g < genus_threshold_order2(q)) return not_applicable(2, "genus below g_2");
  OrderBound b;
  b.n = 2;
  b.real_bound = q + 1.0 + (std::sqrt((8.0 * q + 1.0) * g * g + 4.0 * q * (q - 1.0) * g) - g) / 2.0;
  b.mu = (q + 1.0 - b.real_bound) / (2.0 * g * std::sqrt(q));
  b.int_bound = static_cast<std::int64_t>(std::floor(b.real_bound + kIntegerGuard));
  b.applicable = true;
  b.certified = true;
  return b;
}

OrderBound order3_closed(double q, double g) {
  if (!(g > 0.0)) throw std::invalid_argument("order3_closed: genus must be positive");
  // Allow representation error in g_3 itself (e.g. q = 3, g = sqrt(6)).
  if (g < genus_threshold_order3(q) * (1.0 - 1e-12)) return not_applicable(3, "genus below g_3");
  const double alpha = 1.0 / std::sqrt(q);
  const double shift3 = (q * q - 1.0) / (2.0 * g * std::sqrt(q));
  const double a = 1.0 + 2.0 * alpha;
  const double b = (q - 1.0) * (1.0 + alpha) / g - (1.0 + alpha * alpha) - shift3;
  const double c = (q - 1.0) * (q - 1.0) / (4.0 * g * g) - 1.0 - shift3;
  return from_mu(q, g, 3, negative_root(a, b, c));
}

Order3Coefficients order3_coefficients(double q) {
  const double s = std::sqrt(q);
  Order3Coefficients k;
  k.a = 5.0 + 8.0 / s - 1.0 / (q * q);
  k.b = (q - 1.0) / (q * s) * (q * q - 4.0 * q * s + 2.0 * q + 4.0 * s - 1.0);
  k.c = (q - 1.0) / (4.0 * q) * (q * q * q - 5.0 * q * q - 8.0 * q * s - 5.0 * q - 8.0 * s + 1.0);
  k.d = 2.0 * s * (q - 1.0) * (q - 1.0) / q;
  return k;
}

double order3_mu_as_printed(double q, double g) {
  const Order3Coefficients k = order3_coefficients(q);
  const double s = std::sqrt(q);
  const double radical = std::sqrt(k.a + k.b / g + k.c / (g * g));
  return ((q - 1.0) / q - 2.0 * s * (q - 1.0) * (q - 1.0) / (g * q) - radical) / 2.0;
}

double order3_deviation_as_printed(double q, double g) {
  const Order3Coefficients k = order3_coefficients(q);
  const double radical = std::sqrt(k.a + k.b / g + k.c / (g * g));
  return (radical - 1.0 + 1.0 / q + k.d / g) * g * std::sqrt(q);
}

OrderBound order_n_bound(double q, double g, int n, const SegmentOptions& opts) {
  if (n < 1) throw std::invalid_argument("order_n_bound: order must be >= 1");
  if (n == 1) return weil_order1(q, g);
  const auto res = mu_n(q, Genus(g), n, opts);
  if (!res) return not_applicable(n, "Ihara line misses the Weil domain");

  OrderBound b = from_mu(q, g, n, res->mu);
  const CriteriaReport& r = res->report;
  b.certified = r.certified;
  b.applicable = r.certified;
  if (!r.on_g_minus)
    b.note = "segment end not on G_n^- = 0";
  else if (!r.partials_ok)
    b.note = "negative partial derivative of G_n^-";
  else if (!r.directional_ok)
    b.note = "non-positive directional derivative";
  return b;
}

BestBoundReport best_bound(double q, double g, int n_max, const SegmentOptions& opts) {
  if (n_max < 1) throw std::invalid_argument("best_bound: n_max must be >= 1");
  BestBoundReport rep;
  rep.q = q;
  rep.g = g;
  rep.per_order.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) rep.per_order.push_back(order_n_bound(q, g, n, opts));

  double best_real = std::numeric_limits<double>::infinity();
  rep.best_int = std::numeric_limits<std::int64_t>::max();
  for (const auto& b : rep.per_order) {
    if (!b.applicable) continue;
    best_real = std::min(best_real, b.real_bound);
    rep.best_int = std::min(rep.best_int, b.int_bound);
  }
  for (const auto& b : rep.per_order) {
    if (b.applicable && b.real_bound <= best_real + kIntegerGuard) {
      rep.best_order = b.n;
      break;
    }
  }
  return rep;
}

double asymptotic_order_bound(double q, int n, const SegmentOptions& opts) {
  return -2.0 * std::sqrt(q) * mu_infinity(q, n, opts);
}

double asymptotic_order3_as_printed(double q) {
  return (std::sqrt(5.0 + 8.0 / std::sqrt(q) - 1.0 / (q * q)) - 1.0 + 1.0 / q) * std::sqrt(q);
}

double drinfeld_vladut(double q) { return std::sqrt(q) - 1.0; }

double tsfasman_defect(const TowerSpec& t) {
  double sum = 0.0;
  const double s = std::sqrt(t.q);
  for (std::size_t i = 0; i < t.betas.size(); ++i) {
    if (t.betas[i] < 0.0) throw std::invalid_argument("tsfasman_defect: negative beta");
    const int r = static_cast<int>(i) + 1;
    sum += r * t.betas[i] / (std::pow(s, r) - 1.0);
  }
  return 1.0 - sum;
}

bool tsfasman_violated(const TowerSpec& t) { return tsfasman_defect(t) < 0.0; }

double tsfasman_partial(const TowerSpec& t, int m) {
  if (m < 1) throw std::invalid_argument("tsfasman_partial: m must be >= 1");
  const double s = std::sqrt(t.q);
  double total = 0.0;
  const int r_max = std::min<int>(m - 1, static_cast<int>(t.betas.size()));
  for (int r = 1; r <= r_max; ++r) {
    const double beta = t.betas[static_cast<std::size_t>(r - 1)];
    if (beta == 0.0) continue;
    double inner = 0.0;
    for (int k = 1; k <= (m - 1) / r; ++k) {
      const int rs = r * k;
      inner += (1.0 - static_cast<double>(rs) / m) * std::pow(s, -rs);
    }
    total += inner * r * beta;
  }
  return 1.0 - total;
}

double relative_weil(double q, double g_x, double g_y) {
  if (g_y < 0.0 || g_x < g_y) throw std::invalid_argument("relative_weil: need gX >= gY >= 0");
  return 2.0 * (g_x - g_y) * std::sqrt(q);
}

double relative_order2(double q, double g_x, double g_y, double dn1) {
  if (!(g_x > g_y)) throw std::invalid_argument("relative_order2: need gX > gY");
  const double dg = g_x - g_y;
  return 2.0 * dg * q - dn1 * dn1 / dg;
}

FiberProductBound fiber_product_bound(double q, double g_x, double g_y1, double g_y2, double g_z) {
  FiberProductBound out;
  out.value = 2.0 * (g_x - g_y1 - g_y2 + g_z) * std::sqrt(q);
  if (out.value < 0.0)
    out.warning = "negative right-hand side: the smoothness hypothesis on the fiber product cannot hold";
  return out;
}

}  // namespace weilbound
