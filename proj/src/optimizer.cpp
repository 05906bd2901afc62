#include "weilbound/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace weilbound {

namespace {

constexpr double kOnSurface = 1e-9;
constexpr double kRootTarget = 1e-12;
constexpr double kPartialTol = 1e-9;
constexpr int kMaxPolishIterations = 200;

// Shrinks [outside, inside] until its width is <= tol; returns the inside end.
template <typename Pred>
double bisect_boundary(double outside, double inside, double tol, Pred&& member) {
  while (std::abs(inside - outside) > tol) {
    const double mid = 0.5 * (outside + inside);
    if (mid == outside || mid == inside) break;
    (member(mid) ? inside : outside) = mid;
  }
  return inside;
}

// Maximizer of a concave function on [a, b].
template <typename F>
double golden_max(double a, double b, F&& f) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > 1e-15) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

double directional_derivative(const IharaLine& line, const Vector<double>& grad) {
  double sum = 0.0;
  double w = 1.0;
  for (Eigen::Index i = 0; i < grad.size(); ++i) {
    sum += w * grad(i);
    w *= line.alpha;
  }
  return sum;
}

// Root of t -> G_n^-(P(t)) next to the segment end `lo`, if one exists there.
std::optional<double> polish_root(const IharaLine& line, double lo) {
  auto phi = [&](double t) { return G_minus(ihara_point(line, t)); };

  double a = 0.0;
  double b = 0.0;
  double fa = 0.0;
  double fb = 0.0;
  bool bracketed = false;
  for (double w = 1e-12; w <= 1e-6 * 1.0001; w *= 10.0) {
    a = lo - w;
    b = lo + w;
    fa = phi(a);
    fb = phi(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa < 0.0) != (fb < 0.0)) {
      bracketed = true;
      break;
    }
  }
  if (!bracketed) {
    // Tangential contact: no sign change, accept a vanishing endpoint.
    if (std::abs(phi(lo)) <= kOnSurface) return lo;
    return std::nullopt;
  }

  // Safeguarded Newton on the bracket [a, b], keeping fa < 0 < fb orientation.
  if (fa > 0.0) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double t = 0.5 * (a + b);
  for (int it = 0; it < kMaxPolishIterations; ++it) {
    const Point p = ihara_point(line, t);
    const double f = G_minus(p);
    if (std::abs(f) <= kRootTarget) return t;
    (f < 0.0 ? a : b) = t;
    if (std::abs(b - a) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
      if (std::abs(f) <= kOnSurface) return t;
      break;
    }
    const double slope = directional_derivative(line, grad_G_minus(p));
    double next = slope != 0.0 ? t - f / slope : 0.5 * (a + b);
    const double left = std::min(a, b);
    const double right = std::max(a, b);
    if (!(next > left && next < right)) next = 0.5 * (a + b);
    t = next;
  }
  std::ostringstream msg;
  msg.precision(17);
  msg << "root polish of G_" << line.n << "^- did not converge near x1=" << lo << " (q=" << line.q
      << ", g=" << line.g.value() << ", bracket [" << std::min(a, b) << ", " << std::max(a, b) << "])";
  throw NumericalFailure(msg.str());
}

}  // namespace

FeasibleSegment feasible_segment(const IharaLine& line, const SegmentOptions& opts) {
  if (opts.grid < 64) throw std::invalid_argument("feasible_segment: grid must be >= 64");
  auto member = [&](double t) { return psd_within(ihara_point(line, t), opts.membership); };
  auto sample = [&](int i) { return i == opts.grid ? 1.0 : -1.0 + 2.0 * i / opts.grid; };

  int first = -1;
  int last = -1;
  for (int i = 0; i <= opts.grid; ++i) {
    if (member(sample(i))) {
      if (first < 0) first = i;
      last = i;
    }
  }

  FeasibleSegment seg;
  double seed_lo = 0.0;
  double seed_hi = 0.0;
  if (first >= 0) {
    seed_lo = sample(first);
    seed_hi = sample(last);
  } else {
    const double t = golden_max(-1.0, 1.0, [&](double s) { return min_eigenvalue(ihara_point(line, s)); });
    if (min_eigenvalue(ihara_point(line, t)) < -opts.membership) return seg;
    seed_lo = seed_hi = t;
  }

  seg.found = true;
  seg.x1_lo = first == 0 ? -1.0 : bisect_boundary(first > 0 ? sample(first - 1) : -1.0, seed_lo, opts.tol, member);
  seg.x1_hi = last == opts.grid ? 1.0
                                : bisect_boundary(last >= 0 ? sample(last + 1) : 1.0, seed_hi, opts.tol, member);
  return seg;
}

CriteriaReport criteria_report(const IharaLine& line, const Point& p0) {
  CriteriaReport r;
  r.g_minus_value = G_minus(p0);
  r.gradient = grad_G_minus(p0);
  r.on_g_minus = std::abs(r.g_minus_value) <= kOnSurface;
  r.partials_ok = true;
  for (Eigen::Index i = 1; i < r.gradient.size(); ++i)
    if (r.gradient(i) < -kPartialTol) r.partials_ok = false;
  r.directional = directional_derivative(line, r.gradient);
  r.directional_ok = r.directional > 0.0;
  r.certified = r.on_g_minus && r.partials_ok && r.directional_ok;
  return r;
}

std::optional<MuResult> mu_n(double q, Genus g, int n, const SegmentOptions& opts) {
  const IharaLine line(q, g, n);
  if (n == 1) {
    MuResult res;
    res.mu = -1.0;
    res.point = ihara_point(line, -1.0);
    res.report = criteria_report(line, res.point);
    res.segment = {-1.0, 1.0, true};
    return res;
  }

  const FeasibleSegment seg = feasible_segment(line, opts);
  if (!seg.found) return std::nullopt;

  MuResult res;
  res.segment = seg;
  res.mu = seg.x1_lo;
  if (const auto root = polish_root(line, seg.x1_lo)) {
    // A crossing outside the domain is not the segment end.
    if (min_eigenvalue(ihara_point(line, *root)) >= -std::max(10.0 * opts.membership, 1e-8)) res.mu = *root;
  }
  res.point = ihara_point(line, res.mu);
  res.report = criteria_report(line, res.point);
  return res;
}

double mu_infinity(double q, int n, const SegmentOptions& opts) {
  const auto res = mu_n(q, Genus::infinite(), n, opts);
  if (!res) throw NumericalFailure("infinite Ihara line misses the Weil domain");
  return res->mu;
}

ThresholdResult threshold_genus(double q, int n, double tol) {
  if (n < 2) throw std::invalid_argument("threshold_genus: order must be >= 2");
  SegmentOptions opts;
  opts.membership = 0.0;
  opts.tol = 1e-14;
  auto applicable = [&](double g) {
    const auto res = mu_n(q, Genus(g), n, opts);
    return res && res->report.on_g_minus && res->mu < 0.0;
  };

  double g_high = 1.0;
  while (!applicable(g_high)) {
    g_high *= 2.0;
    if (g_high > 1e12) throw NumericalFailure("threshold_genus: no applicable genus below 1e12");
  }
  double g_low = 0.5 * g_high;
  while (applicable(g_low)) {
    g_high = g_low;
    g_low *= 0.5;
    if (g_low < 1e-12) throw NumericalFailure("threshold_genus: applicable down to genus 1e-12");
  }

  // Applicability is monotone in u = 1/g: it holds on [0, 1/g_n).
  double u_feasible = 1.0 / g_high;
  double u_infeasible = 1.0 / g_low;
  while (g_high - g_low > tol * g_high) {
    const double u = 0.5 * (u_feasible + u_infeasible);
    if (u == u_feasible || u == u_infeasible) break;
    if (applicable(1.0 / u)) {
      u_feasible = u;
      g_high = 1.0 / u;
    } else {
      u_infeasible = u;
      g_low = 1.0 / u;
    }
  }
  return {n, q, 0.5 * (g_low + g_high), g_low, g_high};
}

}  // namespace weilbound
