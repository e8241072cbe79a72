#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "commvar/rat.hpp"

namespace commvar {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "commvar-report/1";

enum class Status { Pass, Fail, Indeterminate, Skipped };

std::string to_string(Status s);

/// Outcome of one verification case.
struct ReportDoc {
  std::string suite;
  std::string case_id;
  Status status = Status::Pass;
  /// The mathematical statement under test, in words.
  std::string claim;
  Json witness = Json::object();
  std::optional<double> seconds;

  bool ok() const { return status == Status::Pass || status == Status::Skipped; }
  /// Throws std::logic_error when a fail/indeterminate carries no witness.
  Json to_json() const;
};

ReportDoc make_report(std::string suite, std::string case_id, std::string claim);

/// Worst status wins: fail > indeterminate > pass > skipped.
Status combine(const std::vector<ReportDoc>& docs);

/// Rationals as strings ("-3/2"), so witnesses stay exact.
Json rat_array(const std::vector<Rat>& v);

/// The JSON array written by the CLI.
Json report_array(const std::vector<ReportDoc>& docs);

}  // namespace commvar
