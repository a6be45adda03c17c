#ifndef EWB_RUN_HPP
#define EWB_RUN_HPP

#include "ewb/action.hpp"
#include "ewb/group.hpp"
#include "ewb/report.hpp"

#include <string>
#include <vector>

namespace ewb {

struct RunResult {
    Report report;
    ReportFormat format = ReportFormat::Text;
    int exit_code = 0;
};

/// Dispatches a full command line (without argv[0]). UsageError surfaces as
/// an Error with code UsageError; the CLI maps it to exit 2.
RunResult run_command(const std::vector<std::string>& args);

/// "catalog:NAME" or a path to a spec file.
GroupPtr resolve_group_arg(const std::string& arg);
AutAction resolve_action_arg(const std::string& arg);

/// "#id", a cycle expression (permutation-backed groups), or a word in the
/// group's named generators.
int resolve_element_arg(const GroupPtr& g, const std::string& arg);

} // namespace ewb

#endif
