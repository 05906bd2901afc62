#include "commands.hpp"

#include "weilbound/arith.hpp"
#include "weilbound/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace weilbound::cli {

namespace {

Cell opt_double(double v) { return std::isfinite(v) ? Cell(v) : Cell{}; }

// Runs f(i) for i in [0, count) on all hardware threads; results keep index order.
template <typename R, typename F>
std::vector<R> parallel_map(std::size_t count, F&& f) {
  std::vector<R> out(count);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  if (error) std::rethrow_exception(error);
  return out;
}

SegmentOptions segment_options(double tol) {
  SegmentOptions opts;
  opts.tol = tol;
  return opts;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw std::invalid_argument("unknown format: " + s);
}

std::string render(const RecordTable& t, Format f) {
  switch (f) {
    case Format::Csv:
      return to_csv(t);
    case Format::Json:
      return to_json(t);
    case Format::Table:
      break;
  }
  return to_text(t);
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    const long long v = std::stoll(part, &used);
    if (used != part.size()) throw std::invalid_argument("malformed range: " + s);
    return static_cast<std::int64_t>(v);
  };
  try {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
      const auto v = to_int(s);
      return {v, v};
    }
    const auto lo = to_int(s.substr(0, dots));
    const auto hi = to_int(s.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range: " + s);
    return {lo, hi};
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("malformed range: " + s);
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()).find("range") != std::string::npos) throw;
    throw std::invalid_argument("malformed range: " + s);
  }
}

double checked_field_size(std::uint64_t q) {
  if (!prime_power(q)) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return static_cast<double>(q);
}

RecordTable cmd_bound(const BoundArgs& a) {
  const double q = checked_field_size(a.q);
  if (a.g < 1) throw std::invalid_argument("genus must be a positive integer");
  if (a.max_order < 1) throw std::invalid_argument("max-order must be >= 1");
  const BestBoundReport rep = best_bound(q, static_cast<double>(a.g), a.max_order, segment_options(a.tol));

  RecordTable t;
  t.columns = {"q", "g", "n", "mu", "real_bound", "int_bound", "applicable", "certified", "best", "note"};
  t.meta = {{"q", static_cast<std::int64_t>(a.q)},
            {"g", a.g},
            {"best_bound", rep.best_int},
            {"best_order", static_cast<std::int64_t>(rep.best_order)}};
  for (const auto& b : rep.per_order) {
    if (!b.applicable && !a.verbose) continue;
    t.add_row({static_cast<std::int64_t>(a.q), a.g, static_cast<std::int64_t>(b.n), opt_double(b.mu),
               opt_double(b.real_bound), b.applicable ? Cell(b.int_bound) : Cell{}, b.applicable, b.certified,
               b.n == rep.best_order, b.note});
  }
  return t;
}

RecordTable cmd_table(const TableArgs& a) {
  if (a.qs.empty()) throw std::invalid_argument("no field sizes given");
  if (a.g_min < 1) throw std::invalid_argument("genus must be a positive integer");
  std::vector<double> fields;
  for (auto q : a.qs) fields.push_back(checked_field_size(q));

  struct Job {
    std::size_t qi;
    std::int64_t g;
  };
  std::vector<Job> jobs;
  for (std::size_t qi = 0; qi < fields.size(); ++qi)
    for (std::int64_t g = a.g_min; g <= a.g_max; ++g) jobs.push_back({qi, g});

  const auto reports = parallel_map<BestBoundReport>(jobs.size(), [&](std::size_t i) {
    return best_bound(fields[jobs[i].qi], static_cast<double>(jobs[i].g), a.max_order, segment_options(a.tol));
  });

  RecordTable t;
  t.columns = {"q", "g", "best_bound", "best_order"};
  for (int n = 1; n <= a.max_order; ++n) t.columns.push_back("bound_" + std::to_string(n));
  if (a.verbose)
    for (int n = 1; n <= a.max_order; ++n) t.columns.push_back("real_" + std::to_string(n));
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& rep = reports[i];
    std::vector<Cell> row{static_cast<std::int64_t>(a.qs[jobs[i].qi]), jobs[i].g, rep.best_int,
                          static_cast<std::int64_t>(rep.best_order)};
    for (const auto& b : rep.per_order) row.push_back(b.applicable ? Cell(b.int_bound) : Cell{});
    if (a.verbose)
      for (const auto& b : rep.per_order) row.push_back(b.applicable ? Cell(b.real_bound) : Cell{});
    t.add_row(std::move(row));
  }
  return t;
}

std::string render_table_grid(const RecordTable& t) {
  std::vector<std::int64_t> qs;
  std::map<std::int64_t, std::map<std::int64_t, std::string>> by_genus;
  for (const auto& row : t.rows) {
    const auto q = std::get<std::int64_t>(row[0]);
    const auto g = std::get<std::int64_t>(row[1]);
    if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
    by_genus[g][q] = std::to_string(std::get<std::int64_t>(row[2])) + "(" +
                     std::to_string(std::get<std::int64_t>(row[3])) + ")";
  }
  std::ostringstream os;
  os << "   g";
  for (auto q : qs) os << "  " << std::string(q < 10 ? 5 : 4, ' ') << "q=" << q;
  os << '\n';
  for (const auto& [g, cells] : by_genus) {
    os << std::string(g < 10 ? 3 : (g < 100 ? 2 : 1), ' ') << g;
    for (auto q : qs) {
      const auto it = cells.find(q);
      const std::string s = it == cells.end() ? "-" : it->second;
      os << "  " << std::string(s.size() < 8 ? 8 - s.size() : 0, ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

RecordTable cmd_threshold(std::uint64_t q, int n, double tol) {
  const double fq = checked_field_size(q);
  if (n < 2) throw std::invalid_argument("threshold order must be >= 2");
  const ThresholdResult r = threshold_genus(fq, n, tol);
  RecordTable t;
  t.columns = {"q", "n", "g_n", "g_low", "g_high"};
  t.add_row({static_cast<std::int64_t>(q), static_cast<std::int64_t>(n), r.g_n, r.g_low, r.g_high});
  return t;
}

RecordTable cmd_asymptotic(std::uint64_t q, int max_order, double tol) {
  const double fq = checked_field_size(q);
  if (max_order < 1) throw std::invalid_argument("max-order must be >= 1");
  RecordTable t;
  t.columns = {"bound", "n", "value", "as_printed"};
  for (int n = 1; n <= max_order; ++n) {
    t.add_row({std::string("order"), static_cast<std::int64_t>(n),
               asymptotic_order_bound(fq, n, segment_options(tol)),
               n == 3 ? Cell(asymptotic_order3_as_printed(fq)) : Cell{}});
  }
  t.add_row({std::string("drinfeld-vladut"), Cell{}, drinfeld_vladut(fq), Cell{}});
  return t;
}

RecordTable cmd_defect(double q, const std::vector<double>& betas, int m) {
  if (!(q > 1.0)) throw std::invalid_argument("q must be > 1");
  if (betas.empty()) throw std::invalid_argument("at least one beta is required");
  const TowerSpec spec{q, betas};
  const double delta = tsfasman_defect(spec);
  RecordTable t;
  t.columns = {"q", "delta", "tsfasman_sum", "violated", "m", "partial"};
  t.add_row({q, delta, 1.0 - delta, tsfasman_violated(spec), static_cast<std::int64_t>(m),
             tsfasman_partial(spec, m)});
  return t;
}

RecordTable cmd_relative(std::uint64_t q, double g_x, double g_y, std::optional<double> dn1) {
  const double fq = checked_field_size(q);
  RecordTable t;
  t.columns = {"q", "gx", "gy", "relative_weil", "dn1", "relative_order2"};
  Cell second;
  if (dn1 && g_x > g_y) second = relative_order2(fq, g_x, g_y, *dn1);
  t.add_row({static_cast<std::int64_t>(q), g_x, g_y, relative_weil(fq, g_x, g_y), dn1 ? Cell(*dn1) : Cell{},
             second});
  return t;
}

RecordTable cmd_fiber(std::uint64_t q, double g_x, double g_y1, double g_y2, double g_z) {
  const double fq = checked_field_size(q);
  const FiberProductBound b = fiber_product_bound(fq, g_x, g_y1, g_y2, g_z);
  RecordTable t;
  t.columns = {"q", "gx", "gy1", "gy2", "gz", "bound", "warning"};
  t.add_row({static_cast<std::int64_t>(q), g_x, g_y1, g_y2, g_z, b.value, b.warning ? Cell(*b.warning) : Cell{}});
  return t;
}

RecordTable cmd_audit(std::uint64_t q, std::int64_t g, const std::vector<std::int64_t>& counts) {
  const double fq = checked_field_size(q);
  if (g < 1) throw std::invalid_argument("genus must be a positive integer");
  if (counts.empty()) throw std::invalid_argument("no point counts given");
  for (auto c : counts)
    if (c < 1) throw std::invalid_argument("point counts must be positive integers");

  const CurveCounts cc{fq, static_cast<int>(g), counts};
  const Point p = point_from_counts(cc);
  const int n = p.order();
  const DomainVerdict dom = in_closed_domain(p);
  const IharaLine line(fq, Genus(static_cast<double>(g)), n);
  const auto slacks = ihara_slacks(line, p);
  const double max_slack = slacks.empty() ? 0.0 : *std::max_element(slacks.begin(), slacks.end());

  std::string verdict = "consistent";
  std::string reason;
  if (const auto bad = ihara_count_violations(cc); !bad.empty()) {
    verdict = "infeasible";
    reason = "Ihara violation: #X(F_{q^" + std::to_string(bad.front()) + "}) < #X(F_q)";
  } else if (!dom.inside_closed) {
    verdict = "infeasible";
    for (int i = 1; i <= n && reason.empty(); ++i) {
      if (p.x(i) < -1.0) reason = "Weil violation: x_" + std::to_string(i) + " < -1";
      if (p.x(i) > 1.0) reason = "Weil violation: x_" + std::to_string(i) + " > 1";
    }
    if (reason.empty()) reason = "outside the Weil domain (Gram matrix not positive semidefinite)";
  } else if (n >= 2 && static_cast<double>(counts[1]) >
                           second_extension_bound(fq, static_cast<double>(g), static_cast<double>(counts[0])) + 1e-9) {
    verdict = "infeasible";
    reason = "#X(F_{q^2}) exceeds the second extension bound";
  } else if (dom.min_eigenvalue <= 1e-9) {
    reason = "boundary of the Weil domain";
  }

  RecordTable t;
  t.columns = {"q", "g", "n", "verdict", "reason", "inside_closed", "min_eigenvalue", "max_ihara_slack",
               "second_extension_bound"};
  for (int i = 1; i <= n; ++i) t.columns.push_back("x_" + std::to_string(i));
  std::vector<Cell> row{static_cast<std::int64_t>(q),
                        g,
                        static_cast<std::int64_t>(n),
                        verdict,
                        reason,
                        dom.inside_closed,
                        dom.min_eigenvalue,
                        n >= 2 ? Cell(max_slack) : Cell{},
                        n >= 2 ? Cell(second_extension_bound(fq, static_cast<double>(g),
                                                             static_cast<double>(counts[0])))
                               : Cell{}};
  for (int i = 1; i <= n; ++i) row.push_back(p.x(i));
  t.add_row(std::move(row));
  return t;
}

RecordTable cmd_plotdata(std::uint64_t q, std::int64_t g_min, std::int64_t g_max, const std::vector<int>& orders,
                         double tol) {
  const double fq = checked_field_size(q);
  if (g_min < 1) throw std::invalid_argument("genus must be a positive integer");
  if (orders.empty()) throw std::invalid_argument("no orders given");
  for (int n : orders)
    if (n < 1 || n > 12) throw std::invalid_argument("orders must lie in 1..12");

  const auto count = static_cast<std::size_t>(g_max - g_min + 1);
  const auto rows = parallel_map<std::vector<Cell>>(count, [&](std::size_t i) {
    const auto g = g_min + static_cast<std::int64_t>(i);
    std::vector<Cell> row{g};
    for (int n : orders) {
      const OrderBound b = order_n_bound(fq, static_cast<double>(g), n, segment_options(tol));
      row.push_back(b.applicable ? Cell(b.real_bound) : Cell{});
    }
    return row;
  });

  RecordTable t;
  t.columns = {"g"};
  for (int n : orders) t.columns.push_back("order_" + std::to_string(n));
  for (const auto& r : rows) t.add_row(r);
  return t;
}

}  // namespace weilbound::cli
