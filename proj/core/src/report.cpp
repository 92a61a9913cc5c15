#include <iomanip>

#include "json.hpp"

#include "jetlie/suite.hpp"

namespace jetlie::suite {

using ordered = nlohmann::ordered_json;

void write_structured(std::ostream& out, const Report& r, bool timings) {
  ordered head;
  head["record"] = "header";
  head["tool"] = "jetlie";
  head["version"] = version();
  head["seed"] = r.seed;
  head["flow_sign"] = flow_convention();
  out << head.dump() << '\n';
  for (const auto& c : r.checks) {
    ordered j;
    j["record"] = "check";
    j["check_id"] = c.id;
    j["group"] = c.group;
    j["ref"] = c.keys;
    j["description"] = c.description;
    j["expected"] = c.expect_holds ? "holds" : "fails";
    j["status"] = status_name(c.status);
    if (c.status == Status::Error) {
      j["error"] = c.error;
    } else {
      j["observed"] = c.outcome.holds ? "holds" : "fails";
      if (!c.outcome.residual.empty()) j["residual"] = c.outcome.residual;
      if (!c.outcome.witness.empty()) j["witness"] = c.outcome.witness;
      if (!c.outcome.detail.empty()) j["detail"] = c.outcome.detail;
    }
    if (timings) j["duration_ms"] = static_cast<long long>(c.seconds * 1000.0 + 0.5);
    out << j.dump() << '\n';
  }
  ordered s;
  s["record"] = "summary";
  s["checks"] = r.checks.size();
  s["pass"] = r.count(Status::Pass);
  s["fail"] = r.count(Status::Fail);
  s["error"] = r.count(Status::Error);
  s["exit_code"] = r.exit_code();
  out << s.dump() << '\n';
}

void write_human(std::ostream& out, const Report& r, bool timings) {
  out << "jetlie " << version() << "  seed " << r.seed << "  (" << flow_convention() << ")\n";
  std::string group;
  for (const auto& c : r.checks) {
    if (c.group != group) {
      group = c.group;
      out << "\n[" << group << "]\n";
    }
    out << "  " << std::left << std::setw(5) << status_name(c.status) << ' ' << c.id;
    if (!c.expect_holds) out << "  (expected to fail)";
    if (timings) out << "  " << std::fixed << std::setprecision(3) << c.seconds << "s";
    out << '\n';
    if (c.status == Status::Error) {
      out << "        error: " << c.error << '\n';
      continue;
    }
    bool show = c.status == Status::Fail || !c.outcome.holds;
    if (show && !c.outcome.residual.empty()) out << "        residual: " << c.outcome.residual << '\n';
    if (show && !c.outcome.witness.empty()) out << "        witness: " << c.outcome.witness << '\n';
  }
  out << "\n" << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, " << r.count(Status::Error)
      << " error\n";
}

}  // namespace jetlie::suite
