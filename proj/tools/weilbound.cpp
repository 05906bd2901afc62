// weilbound: order-n Weil bounds for the number of rational points of curves
// over finite fields.
//
// Exit codes: 0 success, 2 usage or validation error, 3 numerical failure.

#include "commands.hpp"

#include "weilbound/optimizer.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

constexpr int kUsage = 2;
constexpr int kNumerical = 3;

double tol_from_env(double fallback) {
  if (const char* env = std::getenv("WEILBOUND_TOL")) {
    try {
      return std::stod(env);
    } catch (...) {
      std::cerr << "warning: ignoring malformed WEILBOUND_TOL=" << env << '\n';
    }
  }
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace weilbound;
  using namespace weilbound::cli;

  CLI::App app{"Generalized Weil bounds for curves over finite fields"};
  app.require_subcommand(1);

  std::string format = "table";
  bool verbose = false;
  double tol = -1.0;
  auto common = [&](CLI::App* sub, bool with_tol) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_flag("--verbose", verbose, "Per-order diagnostics");
    if (with_tol) sub->add_option("--tol", tol, "Numerical tolerance (env WEILBOUND_TOL)");
  };

  std::uint64_t q = 0;
  std::string g_text;
  int max_order = 12;
  int order = 0;

  auto* bound = app.add_subcommand("bound", "Best bound over orders 1..max-order for one (q, g)");
  bound->add_option("--q", q, "Field size (prime power)")->required();
  bound->add_option("--g", g_text, "Genus (positive integer)")->required();
  bound->add_option("--max-order", max_order, "Largest order to evaluate");
  common(bound, true);

  std::vector<std::uint64_t> qs;
  std::string g_range;
  auto* table = app.add_subcommand("table", "Best bounds over a genus range for several q");
  table->add_option("--q", qs, "Field sizes, comma separated")->required()->delimiter(',');
  auto* table_g = table->add_option("--g,--g-range", g_range, "Genus range a..b");
  table_g->required();
  table->add_option("--max-order", max_order, "Largest order to evaluate");
  common(table, true);

  auto* threshold = app.add_subcommand("threshold", "Genus g_n above which the order-n bound applies");
  threshold->add_option("--q", q, "Field size")->required();
  threshold->add_option("--n", order, "Order (>= 2)")->required();
  common(threshold, true);

  int asym_max = 8;
  auto* asymptotic = app.add_subcommand("asymptotic", "Order-n upper bounds for Ihara's constant A(q)");
  asymptotic->add_option("--q", q, "Field size")->required();
  asymptotic->add_option("--max-order", asym_max, "Largest order");
  common(asymptotic, true);

  double q_real = 0.0;
  std::vector<double> betas;
  int partial_m = 4096;
  auto* defect = app.add_subcommand("defect", "Tsfasman defect of an asymptotically exact family");
  defect->add_option("--q", q_real, "Field size")->required();
  defect->add_option("--betas", betas, "beta_1,...,beta_R")->required()->delimiter(',');
  defect->add_option("--m", partial_m, "Truncation for the partial defect")->check(CLI::PositiveNumber);
  common(defect, false);

  double gx = 0.0, gy = 0.0, gy1 = 0.0, gy2 = 0.0, gz = 0.0;
  std::optional<double> dn1;
  auto* relative = app.add_subcommand("relative", "Bounds for a covering X -> Y");
  relative->add_option("--q", q, "Field size")->required();
  relative->add_option("--gx", gx, "Genus of X")->required();
  relative->add_option("--gy", gy, "Genus of Y")->required();
  relative->add_option("--dn1", dn1, "#X(F_q) - #Y(F_q)");
  common(relative, false);

  auto* fiber = app.add_subcommand("fiber", "Bound for a cartesian square X -> Y1, Y2 -> Z");
  fiber->add_option("--q", q, "Field size")->required();
  fiber->add_option("--gx", gx, "Genus of X")->required();
  fiber->add_option("--gy1", gy1, "Genus of Y1")->required();
  fiber->add_option("--gy2", gy2, "Genus of Y2")->required();
  fiber->add_option("--gz", gz, "Genus of Z")->required();
  common(fiber, false);

  std::vector<std::int64_t> counts;
  auto* audit = app.add_subcommand("audit", "Check point counts N_1..N_n against the Weil and Ihara domains");
  audit->add_option("--q", q, "Field size")->required();
  audit->add_option("--g", g_text, "Genus")->required();
  audit->add_option("--counts", counts, "N_1,...,N_n")->required()->delimiter(',');
  common(audit, false);

  std::vector<int> orders{1, 2, 3, 4, 5};
  auto* plotdata = app.add_subcommand("plotdata", "CSV of real-valued bounds per order over a genus range");
  plotdata->add_option("--q", q, "Field size")->required();
  plotdata->add_option("--g,--g-range", g_range, "Genus range a..b")->required();
  plotdata->add_option("--orders", orders, "Orders, comma separated")->delimiter(',');
  common(plotdata, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    const Format fmt = parse_format(format);
    auto resolved_tol = [&](double fallback) { return tol > 0.0 ? tol : tol_from_env(fallback); };
    auto genus = [&] {
      const auto [lo, hi] = parse_range(g_text);
      if (lo != hi) throw std::invalid_argument("--g expects a single genus");
      return lo;
    };

    if (*bound) {
      BoundArgs a{q, genus(), max_order, resolved_tol(1e-13), verbose};
      const RecordTable t = cmd_bound(a);
      if (fmt == Format::Table) {
        std::cout << "best bound " << format_cell(t.meta[2].second) << " (order " << format_cell(t.meta[3].second)
                  << ") for q=" << q << ", g=" << a.g << "\n\n";
        RecordTable body = t;
        body.meta.clear();
        std::cout << to_text(body);
      } else {
        std::cout << render(t, fmt);
      }
    } else if (*table) {
      const auto [lo, hi] = parse_range(g_range);
      const RecordTable t = cmd_table({qs, lo, hi, max_order, resolved_tol(1e-13), verbose});
      std::cout << (fmt == Format::Table && !verbose ? render_table_grid(t) : render(t, fmt));
    } else if (*threshold) {
      std::cout << render(cmd_threshold(q, order, resolved_tol(1e-9)), fmt);
    } else if (*asymptotic) {
      std::cout << render(cmd_asymptotic(q, asym_max, resolved_tol(1e-13)), fmt);
    } else if (*defect) {
      const RecordTable t = cmd_defect(q_real, betas, partial_m);
      if (std::get<bool>(t.rows[0][3])) std::cerr << "warning: Tsfasman bound violated (negative defect)\n";
      std::cout << render(t, fmt);
    } else if (*relative) {
      std::cout << render(cmd_relative(q, gx, gy, dn1), fmt);
    } else if (*fiber) {
      const RecordTable t = cmd_fiber(q, gx, gy1, gy2, gz);
      if (const auto* w = std::get_if<std::string>(&t.rows[0].back())) std::cerr << "warning: " << *w << '\n';
      std::cout << render(t, fmt);
    } else if (*audit) {
      std::cout << render(cmd_audit(q, genus(), counts), fmt);
    } else if (*plotdata) {
      const auto [lo, hi] = parse_range(g_range);
      std::cout << to_csv(cmd_plotdata(q, lo, hi, orders, resolved_tol(1e-13)));
    }
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return 0;
}
