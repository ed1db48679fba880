#include <array>
#include <sstream>

#include "copermanent/error.hpp"
#include "copermanent/survey.hpp"
#include "json.hpp"

namespace copermanent {

namespace {

using Json = nlohmann::ordered_json;

Json family_json(const CopermanentFamily& family) {
  Json coefficients = Json::array();
  for (const auto& t : nonzero_terms(family.polynomial)) {
    coefficients.push_back({t.x_degree, t.lambda_degree, t.value});
  }
  return Json{
      {"fingerprint", to_hex(family.fingerprint)},
      {"polynomial", format_text(family.polynomial, VarStyle::Ascii)},
      {"coefficients", std::move(coefficients)},
      {"members", family.members},
  };
}

CopermanentFamily family_from_json(const Json& j, int order) {
  CopermanentFamily family;
  family.fingerprint = fingerprint_from_hex(j.at("fingerprint").get<std::string>());
  std::vector<CoefficientTriple> terms;
  for (const auto& t : j.at("coefficients")) {
    terms.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<std::int64_t>()});
  }
  family.polynomial = from_terms(order, terms);
  if (fingerprint(family.polynomial) != family.fingerprint) {
    throw Error(ErrorKind::MalformedRecord, "report: family coefficients disagree with fingerprint");
  }
  family.members = j.at("members").get<std::vector<std::string>>();
  return family;
}

}  // namespace

std::string write_families_json(std::span<const CopermanentFamily> families) {
  Json out = Json::array();
  for (const auto& f : families) out.push_back(family_json(f));
  return out.dump(2) + "\n";
}

std::string write_report(const SurveyReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      Json families = Json::array();
      for (const auto& f : report.families) families.push_back(family_json(f));
      const Json out{
          {"order", report.order},
          {"num_graphs", report.num_graphs},
          {"num_polynomials", report.num_polynomials},
          {"num_with_mate", report.num_with_mate},
          {"fraction_with_mate", report.fraction_with_mate},
          {"max_family", report.max_family},
          {"families", std::move(families)},
      };
      return out.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      std::ostringstream out;
      out << report.order << ',' << report.num_graphs << ',' << report.num_polynomials << ','
          << report.num_with_mate << ',' << report.fraction_with_mate << ',' << report.max_family
          << '\n';
      return out.str();
    }
    case ReportFormat::TextTable: {
      const std::array<std::string, 6> headers{
          "n", "#graphs", "#perm. pols", "# with coperm. mate", "frac. with mate", "max. family"};
      const std::array<std::string, 6> values{
          std::to_string(report.order),         std::to_string(report.num_graphs),
          std::to_string(report.num_polynomials), std::to_string(report.num_with_mate),
          report.fraction_with_mate,            std::to_string(report.max_family)};
      std::string head;
      std::string row;
      for (std::size_t c = 0; c < headers.size(); ++c) {
        const std::size_t width = std::max(headers[c].size(), values[c].size());
        if (c != 0) {
          head += "  ";
          row += "  ";
        }
        head += std::string(width - headers[c].size(), ' ') + headers[c];
        row += std::string(width - values[c].size(), ' ') + values[c];
      }
      return head + "\n" + row + "\n";
    }
  }
  return {};
}

SurveyReport parse_report_json(std::string_view json) {
  try {
    const Json j = Json::parse(json);
    SurveyReport report;
    report.order = j.at("order").get<int>();
    report.num_graphs = j.at("num_graphs").get<std::uint64_t>();
    report.num_polynomials = j.at("num_polynomials").get<std::uint64_t>();
    report.num_with_mate = j.at("num_with_mate").get<std::uint64_t>();
    report.fraction_with_mate = j.at("fraction_with_mate").get<std::string>();
    report.max_family = j.at("max_family").get<std::uint64_t>();
    for (const auto& f : j.at("families")) {
      report.families.push_back(family_from_json(f, report.order));
    }
    return report;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::MalformedRecord, std::string("report: ") + e.what());
  }
}

}  // namespace copermanent
