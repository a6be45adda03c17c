#include "ewb/report.hpp"

#include <sstream>

namespace ewb {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Vacuous: return "VACUOUS";
        case Verdict::Skipped: return "SKIPPED";
    }
    return "?";
}

CheckRecord pass_record(std::string id, std::string anchor, std::string details) {
    return {std::move(id), std::move(anchor), Verdict::Pass, std::move(details), nullptr};
}

CheckRecord fail_record(std::string id, std::string anchor, std::string details,
                        OrderedJson counterexample) {
    return {std::move(id), std::move(anchor), Verdict::Fail, std::move(details),
            std::move(counterexample)};
}

CheckRecord vacuous_record(std::string id, std::string anchor, std::string details) {
    return {std::move(id), std::move(anchor), Verdict::Vacuous, std::move(details), nullptr};
}

CheckRecord skipped_record(std::string id, std::string anchor, std::string details) {
    return {std::move(id), std::move(anchor), Verdict::Skipped, std::move(details), nullptr};
}

int Report::count(Verdict v) const {
    int n = 0;
    for (const auto& c : checks)
        if (c.verdict == v) ++n;
    return n;
}

std::string emit_report(const Report& report, ReportFormat format) {
    if (format == ReportFormat::Json) {
        OrderedJson j;
        j["tool"] = "ewb";
        j["version"] = report.version;
        j["command"] = report.command;
        j["seed"] = report.seed_hex;
        j["checks"] = OrderedJson::array();
        for (const auto& c : report.checks) {
            OrderedJson rec;
            rec["id"] = c.id;
            rec["anchor"] = c.anchor;
            rec["verdict"] = verdict_name(c.verdict);
            rec["details"] = c.details;
            if (c.verdict == Verdict::Fail) rec["counterexample"] = c.counterexample;
            j["checks"].push_back(std::move(rec));
        }
        if (!report.payload.is_null()) j["payload"] = report.payload;
        OrderedJson summary;
        summary["total"] = report.checks.size();
        summary["pass"] = report.count(Verdict::Pass);
        summary["fail"] = report.count(Verdict::Fail);
        summary["vacuous"] = report.count(Verdict::Vacuous);
        summary["skipped"] = report.count(Verdict::Skipped);
        j["summary"] = std::move(summary);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "ewb " << report.version << " | " << report.command << " | seed " << report.seed_hex
       << "\n";
    for (const auto& c : report.checks) {
        os << "[" << verdict_name(c.verdict) << "] " << c.id << " (" << c.anchor << ")";
        if (!c.details.empty()) os << ": " << c.details;
        os << "\n";
        if (c.verdict == Verdict::Fail && !c.counterexample.is_null())
            os << "        counterexample: " << c.counterexample.dump() << "\n";
    }
    if (!report.payload.is_null()) os << "payload: " << report.payload.dump(2) << "\n";
    os << "checks: " << report.checks.size() << "  pass: " << report.count(Verdict::Pass)
       << "  fail: " << report.count(Verdict::Fail)
       << "  vacuous: " << report.count(Verdict::Vacuous)
       << "  skipped: " << report.count(Verdict::Skipped) << "  (" << report.wall_ms << " ms)\n";
    return os.str();
}

int exit_code_for(const Report& report) {
    return report.count(Verdict::Fail) > 0 ? 1 : 0;
}

} // namespace ewb
