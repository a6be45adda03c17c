#ifndef EWB_REPORT_HPP
#define EWB_REPORT_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ewb {

using OrderedJson = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, Vacuous, Skipped };
const char* verdict_name(Verdict v);

struct CheckRecord {
    std::string id;
    std::string anchor; // stable name of the mathematical claim
    Verdict verdict = Verdict::Pass;
    std::string details;
    OrderedJson counterexample; // null unless verdict == Fail
};

CheckRecord pass_record(std::string id, std::string anchor, std::string details = "");
CheckRecord fail_record(std::string id, std::string anchor, std::string details,
                        OrderedJson counterexample);
CheckRecord vacuous_record(std::string id, std::string anchor, std::string details);
CheckRecord skipped_record(std::string id, std::string anchor, std::string details);

struct Report {
    std::string command;
    std::string version;
    std::string seed_hex;
    std::vector<CheckRecord> checks;
    OrderedJson payload; // coefficient tables etc.; omitted when null
    double wall_ms = 0;  // shown in text output only, never in JSON

    int count(Verdict v) const;
};

enum class ReportFormat { Json, Text };

/// JSON output has a fixed key order and no volatile fields, so equal
/// inputs produce byte-identical bytes.
std::string emit_report(const Report& report, ReportFormat format);

/// 0 when no FAIL verdicts, 1 otherwise.
int exit_code_for(const Report& report);

} // namespace ewb

#endif
