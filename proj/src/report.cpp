#include "commvar/report.hpp"

#include <stdexcept>

namespace commvar {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Indeterminate: return "indeterminate";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

Json ReportDoc::to_json() const {
  if ((status == Status::Fail || status == Status::Indeterminate) && witness.empty())
    throw std::logic_error("report " + suite + "/" + case_id + ": " + to_string(status) + " without witness");
  Json j;
  j["schema"] = kReportSchema;
  j["suite"] = suite;
  j["case"] = case_id;
  j["status"] = to_string(status);
  j["claim"] = claim;
  j["witness"] = witness;
  if (seconds) j["seconds"] = *seconds;
  return j;
}

ReportDoc make_report(std::string suite, std::string case_id, std::string claim) {
  ReportDoc d;
  d.suite = std::move(suite);
  d.case_id = std::move(case_id);
  d.claim = std::move(claim);
  return d;
}

Status combine(const std::vector<ReportDoc>& docs) {
  auto rank = [](Status s) {
    switch (s) {
      case Status::Skipped: return 0;
      case Status::Pass: return 1;
      case Status::Indeterminate: return 2;
      case Status::Fail: return 3;
    }
    return 3;
  };
  Status worst = Status::Skipped;
  for (const auto& d : docs)
    if (rank(d.status) > rank(worst)) worst = d.status;
  return worst;
}

Json rat_array(const std::vector<Rat>& v) {
  Json arr = Json::array();
  for (const auto& r : v) arr.push_back(to_string(r));
  return arr;
}

Json report_array(const std::vector<ReportDoc>& docs) {
  Json arr = Json::array();
  for (const auto& d : docs) arr.push_back(d.to_json());
  return arr;
}

}  // namespace commvar
