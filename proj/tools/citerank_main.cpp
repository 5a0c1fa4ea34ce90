#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "citerank/dataset_io.hpp"
#include "citerank/errors.hpp"
#include "citerank/perturbation.hpp"
#include "citerank/report.hpp"

namespace {

using namespace citerank;

constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitPerturbation = 4;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  return out;
}

int run_compute(const std::string& dataset, const ReportOptions& options,
                const std::string& out_path) {
  const auto set = read_dataset(dataset);
  const auto table = build_report(set, options);
  render_report(table, std::cout, options);
  if (!out_path.empty()) {
    auto out = open_out(out_path);
    write_report_tsv(table, out, options);
  }
  return 0;
}

int run_perturb(const std::string& dataset, const std::string& spec_path,
                int precision, DegeneratePolicy policy) {
  const auto set = read_dataset(dataset);
  std::ifstream in(spec_path);
  if (!in) throw ParseError("cannot open spec: " + spec_path);
  const auto spec = PerturbationSpec::parse(in, spec_path);
  const auto perturbed = apply(set, spec);
  const auto report = diff(set, perturbed, policy);
  std::cout << "dataset: " << set.label() << '\n'
            << "spec: " << spec_path << " (" << spec.deltas().size()
            << " deltas, net " << spec.net_delta() << ")\n";
  render_diff(report, classify_mechanism(report), std::cout, precision);
  return 0;
}

int run_top(const std::string& dataset, const std::string& fraction_text,
            DegeneratePolicy policy) {
  const auto set = read_dataset(dataset);
  const Rational fraction = rational_from_decimal(fraction_text);
  if (fraction <= Rational(0) || fraction >= Rational(1))
    throw Error("fraction must be strictly between 0 and 1");
  const auto top = top_fraction(set, fraction, policy);
  std::cout << "dataset: " << set.label() << '\n'
            << "papers: " << set.size() << '\n'
            << "fraction: " << fraction_text << '\n'
            << "threshold citations: " << top.threshold_citations << '\n'
            << "members: " << top.member_count << '\n'
            << "threshold rank: " << top.threshold_p100.rank << "/"
            << top.threshold_p100.i_max << '\n'
            << "threshold P100: " << format_fixed(top.threshold_p100.value, 2)
            << '\n';
  return 0;
}

int run_compare(const std::vector<std::string>& datasets,
                const std::string& fraction_text) {
  const Rational fraction = rational_from_decimal(fraction_text);
  if (fraction <= Rational(0) || fraction >= Rational(1))
    throw Error("fraction must be strictly between 0 and 1");
  std::vector<ReferenceSet> sets;
  sets.reserve(datasets.size());
  for (const auto& path : datasets) sets.push_back(read_dataset(path));
  render_comparison(compare_years(sets, fraction), std::cout);
  return 0;
}

int run_plotdata(const std::string& dataset, const std::string& mode_text,
                 std::optional<Citations> max_count, int precision,
                 const std::string& out_path, DegeneratePolicy policy) {
  const auto set = read_dataset(dataset);
  PlotMode mode;
  if (mode_text == "by-citation-count") mode = PlotMode::by_citation_count;
  else if (mode_text == "by-unique-count") mode = PlotMode::by_unique_count;
  else if (mode_text == "by-p100") mode = PlotMode::by_p100;
  else throw Error("unknown plot mode: " + mode_text);
  const auto points = plot_data(set, mode, max_count, policy);
  if (!out_path.empty()) {
    auto out = open_out(out_path);
    write_plot_data(points, out, precision);
  } else {
    write_plot_data(points, std::cout, precision);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Citation-rank percentile statistics over reference sets"};
  app.require_subcommand(1);

  std::string dataset, spec_path, out_path, fraction = "0.10";
  std::string mode = "by-unique-count", policy_text = "error";
  std::vector<std::string> datasets;
  int precision = 1;
  std::int64_t max_count = -1;

  auto add_policy = [&](CLI::App* cmd) {
    cmd->add_option("--degenerate-policy", policy_text,
                    "single-unique-count handling: error | top");
  };

  auto* compute = app.add_subcommand("compute", "unique-count table with P100");
  compute->add_option("dataset", dataset)->required();
  bool show_cumulated = false, show_author_means = false;
  compute->add_flag("--show-cumulated", show_cumulated);
  compute->add_flag("--show-author-means", show_author_means);
  compute->add_option("--precision", precision);
  compute->add_option("--out", out_path, "also write the table as TSV");
  add_policy(compute);

  auto* perturb = app.add_subcommand("perturb", "apply a delta spec and report");
  perturb->add_option("dataset", dataset)->required();
  perturb->add_option("spec", spec_path)->required();
  perturb->add_option("--precision", precision);
  add_policy(perturb);

  auto* top = app.add_subcommand("top", "top-fraction threshold report");
  top->add_option("dataset", dataset)->required();
  top->add_option("--fraction", fraction);
  add_policy(top);

  auto* compare = app.add_subcommand("compare-years", "threshold across datasets");
  compare->add_option("datasets", datasets)->required()->expected(2, -1);
  compare->add_option("--fraction", fraction);

  auto* plot = app.add_subcommand("plotdata", "two-column distribution data");
  plot->add_option("dataset", dataset)->required();
  plot->add_option("--mode", mode,
                   "by-citation-count | by-unique-count | by-p100");
  plot->add_option("--max-count", max_count, "cap for by-citation-count");
  plot->add_option("--precision", precision);
  plot->add_option("--out", out_path);
  add_policy(plot);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto policy = [&] {
      if (policy_text == "top") return citerank::DegeneratePolicy::top;
      if (policy_text == "error") return citerank::DegeneratePolicy::error;
      throw citerank::Error("unknown degenerate policy: " + policy_text);
    }();

    if (compute->parsed()) {
      citerank::ReportOptions options;
      options.show_cumulated = show_cumulated;
      options.show_author_means = show_author_means;
      options.precision = precision;
      options.policy = policy;
      return run_compute(dataset, options, out_path);
    }
    if (perturb->parsed()) return run_perturb(dataset, spec_path, precision, policy);
    if (top->parsed()) return run_top(dataset, fraction, policy);
    if (compare->parsed()) return run_compare(datasets, fraction);
    if (plot->parsed())
      return run_plotdata(dataset, mode,
                          max_count >= 0 ? std::optional<citerank::Citations>(max_count)
                                         : std::nullopt,
                          precision, out_path, policy);
  } catch (const citerank::DegenerateTableError& e) {
    std::cerr << "error: " << e.what() << "\n(use --degenerate-policy=top)\n";
    return kExitDegenerate;
  } catch (const citerank::SelectorUnresolvedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPerturbation;
  } catch (const citerank::SelectorConflictError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPerturbation;
  } catch (const citerank::NegativeResultError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPerturbation;
  } catch (const citerank::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const citerank::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return 0;
}
