#ifndef EWB_SUITES_HPP
#define EWB_SUITES_HPP

#include "ewb/action.hpp"
#include "ewb/group.hpp"
#include "ewb/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ewb {

struct SuiteContext {
    uint64_t seed = kDefaultSeed;
    int jobs = 1;
};

/// Independently runnable batch of checks with a stable id; batches
/// execute in a work pool and reassemble in registration order, so output
/// does not depend on scheduling.
struct CheckUnit {
    std::string id;
    std::function<std::vector<CheckRecord>()> run;
};

/// Suites bundled by `verify`: actions, sinks, theorems, coprime-sinks,
/// zassenhaus.
std::vector<std::string> core_suite_names();
/// Added by `verify --all`: model, vandermonde, linearize.
std::vector<std::string> extended_suite_names();

std::vector<CheckUnit> suite_units(const std::string& suite, const SuiteContext& ctx);
std::vector<CheckRecord> run_units(std::vector<CheckUnit> units, int jobs);

// Record builders over realized objects, so ad-hoc groups and actions from
// spec files get the same checks as catalog instances.
std::vector<CheckRecord> action_lemma_records(const AutAction& action,
                                              const std::string& unit_id);
std::vector<CheckRecord> theorem_shadow_records(const AutAction& action,
                                                const std::string& unit_id);
std::vector<CheckRecord> coprime_sink_records(const AutAction& action,
                                              const std::string& unit_id);
std::vector<CheckRecord> sink_records(const GroupPtr& g, const std::string& unit_id);
std::vector<CheckRecord> zassenhaus_records(const GroupPtr& g, int p,
                                            const std::string& unit_id, uint64_t seed);

} // namespace ewb

#endif
