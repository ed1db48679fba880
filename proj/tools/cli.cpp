#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "copermanent/engine.hpp"
#include "copermanent/enumerate.hpp"
#include "copermanent/error.hpp"
#include "copermanent/survey.hpp"
#include "json.hpp"

namespace copermanent::cli {

namespace {

constexpr int kMaxCliGenerateOrder = 8;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool locale_is_utf8() {
  for (const char* name : {"LC_ALL", "LC_CTYPE", "LANG"}) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0') continue;
    std::string v(value);
    std::transform(v.begin(), v.end(), v.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return v.find("utf-8") != std::string::npos || v.find("utf8") != std::string::npos;
  }
  return false;
}

VarStyle resolve_style(const std::string& choice) {
  if (choice == "unicode") return VarStyle::Unicode;
  if (choice == "ascii") return VarStyle::Ascii;
  return locale_is_utf8() ? VarStyle::Unicode : VarStyle::Ascii;
}

unsigned default_jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

struct SourceSpec {
  std::optional<int> n;
  std::string input;
  std::optional<int> order;
  unsigned jobs = default_jobs();
};

// Owns whatever backs a GraphSource for survey and mates.
class OpenedSource {
 public:
  explicit OpenedSource(const SourceSpec& spec) {
    if (spec.n.has_value() == !spec.input.empty()) {
      throw UsageError("exactly one of --n or --input is required");
    }
    if (spec.n) {
      order_ = *spec.n;
      if (order_ < 0) throw UsageError("--n must be non-negative");
      if (order_ > kMaxCliGenerateOrder) {
        throw Error(ErrorKind::OrderTooLarge,
                    "in-repo generation stops at n = 8; generate larger universes externally "
                    "(e.g. nauty geng) and pass them with --input FILE --order N");
      }
      graphs_ = generate_all(order_);
      source_ = source_from(graphs_);
      return;
    }
    if (!spec.order) throw UsageError("--input requires --order");
    order_ = *spec.order;
    std::istream* in = &std::cin;
    if (spec.input != "-") {
      file_ = std::make_unique<std::ifstream>(spec.input);
      if (!*file_) throw IoError("cannot open " + spec.input);
      in = file_.get();
    }
    reader_ = std::make_unique<Graph6Reader>(*in);
    source_ = [reader = reader_.get()] { return reader->next(); };
  }

  int order() const { return order_; }
  const GraphSource& source() const { return source_; }

 private:
  int order_ = 0;
  std::vector<Graph> graphs_;
  std::unique_ptr<std::ifstream> file_;
  std::unique_ptr<Graph6Reader> reader_;
  GraphSource source_;
};

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << contents;
  if (!out) throw IoError("failed writing " + path);
}

SurveyReport survey_from(const SourceSpec& spec, const std::string& checkpoint, std::ostream& err) {
  OpenedSource opened(spec);
  SurveyOptions options;
  options.workers = std::max(1U, spec.jobs);
  const auto start = std::chrono::steady_clock::now();
  SurveyReport report =
      checkpoint.empty()
          ? run_survey(opened.source(), opened.order(), options)
          : run_survey_checkpointed(opened.source(), opened.order(), options, checkpoint);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  err << "surveyed " << report.num_graphs << " graphs of order " << report.order << " in "
      << elapsed.count() << " s with " << options.workers << " worker(s)\n";
  return report;
}

int cmd_poly(const std::string& graph6, const std::string& eval, const std::string& format,
             VarStyle style, std::ostream& out) {
  const Graph g = from_graph6(graph6);
  const BiPoly p = bivariate_permanent(g);

  std::optional<Int128> value;
  if (!eval.empty()) {
    const auto comma = eval.find(',');
    if (comma == std::string::npos) throw UsageError("--eval expects X,L");
    std::int64_t x0 = 0;
    std::int64_t l0 = 0;
    try {
      std::size_t used_x = 0;
      std::size_t used_l = 0;
      const std::string xs = eval.substr(0, comma);
      const std::string ls = eval.substr(comma + 1);
      x0 = std::stoll(xs, &used_x);
      l0 = std::stoll(ls, &used_l);
      if (used_x != xs.size() || used_l != ls.size()) throw std::invalid_argument(eval);
    } catch (const std::logic_error&) {
      throw UsageError("--eval expects two integers X,L, got '" + eval + "'");
    }
    value = evaluate(p, x0, l0);
  }

  if (format == "json") {
    nlohmann::ordered_json j;
    j["order"] = p.order();
    j["polynomial"] = format_text(p, VarStyle::Ascii);
    nlohmann::ordered_json coefficients = nlohmann::ordered_json::array();
    for (const auto& t : nonzero_terms(p)) {
      coefficients.push_back({t.x_degree, t.lambda_degree, t.value});
    }
    j["coefficients"] = std::move(coefficients);
    if (value) j["value"] = to_string(*value);
    out << j.dump() << '\n';
  } else {
    out << format_text(p, style) << '\n';
    if (value) out << to_string(*value) << '\n';
  }
  return kSuccess;
}

int cmd_gen(int n, const std::string& output, std::ostream& out, std::ostream& err) {
  if (n < 0) throw UsageError("--n must be non-negative");
  if (n > kMaxCliGenerateOrder) {
    throw Error(ErrorKind::OrderTooLarge,
                "gen supports n <= 8; generate larger universes externally (e.g. nauty geng) "
                "and pass them to survey with --input FILE --order N");
  }
  const auto graphs = generate_all(n);
  std::string text;
  for (const Graph& g : graphs) text += to_graph6(g) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    write_file(output, text);
  }
  err << graphs.size() << " graphs on " << n << " vertices\n";
  return kSuccess;
}

int cmd_survey(const SourceSpec& spec, const std::string& report_path, bool csv,
               const std::string& checkpoint, std::ostream& out, std::ostream& err) {
  const SurveyReport report = survey_from(spec, checkpoint, err);
  if (!report_path.empty()) write_file(report_path, write_report(report, ReportFormat::Json));
  if (csv) {
    err << write_report(report, ReportFormat::TextTable);
    out << write_report(report, ReportFormat::Csv);
  } else {
    out << write_report(report, ReportFormat::TextTable);
  }
  return kSuccess;
}

int cmd_mates(const SourceSpec& spec, const std::string& format, VarStyle style,
              std::ostream& out, std::ostream& err) {
  const SurveyReport report = survey_from(spec, {}, err);
  if (format == "json") {
    out << write_families_json(report.families);
    return kSuccess;
  }
  if (report.families.empty()) {
    out << "no copermanent families\n";
    return kSuccess;
  }
  std::size_t index = 0;
  for (const auto& family : report.families) {
    out << "family " << ++index << " (" << family.members.size() << " members)\n";
    out << "  polynomial: " << format_text(family.polynomial, style) << '\n';
    for (const auto& member : family.members) out << "  " << member << '\n';
  }
  return kSuccess;
}

void add_source_options(CLI::App* cmd, SourceSpec& spec) {
  auto* n = cmd->add_option("--n", spec.n, "Generate every graph on N vertices (N <= 8)");
  auto* input = cmd->add_option("--input", spec.input, "graph6 file, one graph per line ('-' for stdin)");
  auto* order = cmd->add_option("--order", spec.order, "Order of every graph in --input");
  n->excludes(input);
  input->needs(order);
  order->needs(input);
  cmd->add_option("--jobs", spec.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bivariate permanent polynomials of graphs and copermanent mate search",
               "copermanent"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string lambda_choice = "auto";
  app.add_option("--lambda", lambda_choice, "Render λ as unicode or ascii 'y' in text output")
      ->check(CLI::IsMember({"auto", "unicode", "ascii"}));

  std::string poly_graph6;
  std::string poly_eval;
  std::string poly_format = "text";
  auto* poly = app.add_subcommand("poly", "Print P(G; x, λ) for one graph6 record");
  poly->add_option("graph6", poly_graph6, "graph6 string")->required();
  poly->add_option("--eval", poly_eval, "Also evaluate at x = X, λ = L");
  poly->add_option("--format", poly_format)->check(CLI::IsMember({"text", "json"}));

  int gen_n = 0;
  std::string gen_output;
  auto* gen = app.add_subcommand("gen", "Write one graph6 line per isomorphism class");
  gen->add_option("--n", gen_n, "Number of vertices (<= 8)")->required();
  gen->add_option("--output", gen_output, "Output file (default stdout)");

  SourceSpec survey_spec;
  std::string survey_report;
  bool survey_csv = false;
  std::string survey_checkpoint;
  auto* survey = app.add_subcommand("survey", "Group all graphs of one order by polynomial");
  add_source_options(survey, survey_spec);
  survey->add_option("--report", survey_report, "Write the full JSON report here");
  survey->add_flag("--csv", survey_csv, "Print the summary row as CSV");
  survey->add_option("--checkpoint", survey_checkpoint, "Resume from and append to this file");

  SourceSpec mates_spec;
  std::string mates_format = "text";
  auto* mates = app.add_subcommand("mates", "List copermanent families");
  add_source_options(mates, mates_spec);
  mates->add_option("--format", mates_format)->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  const VarStyle style = resolve_style(lambda_choice);
  try {
    if (*poly) return cmd_poly(poly_graph6, poly_eval, poly_format, style, out);
    if (*gen) return cmd_gen(gen_n, gen_output, out, err);
    if (*survey) {
      return cmd_survey(survey_spec, survey_report, survey_csv, survey_checkpoint, out, err);
    }
    if (*mates) return cmd_mates(mates_spec, mates_format, style, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.category() == ErrorCategory::Capacity ? kCapacityError : kDataError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace copermanent::cli
