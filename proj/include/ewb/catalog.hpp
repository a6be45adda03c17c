#ifndef EWB_CATALOG_HPP
#define EWB_CATALOG_HPP

#include "ewb/action.hpp"
#include "ewb/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ewb {

struct CatalogEntry {
    std::string name;
    std::string group_text;
    std::vector<std::string> tags; // "p-group:2", "nilpotent", "abelian", ...
    int expect_order = 0;
    std::optional<bool> expect_nilpotent;
    std::optional<bool> expect_soluble;
    std::optional<int> expect_fitting_height; // -1 encodes "no finite height"
    std::optional<int> expect_fitting_order;
    std::optional<int> expect_gamma_inf_order;
    std::optional<int> expect_class;

    bool has_tag(const std::string& t) const;
    /// p for entries tagged p-group:<p>, 0 otherwise.
    int p_group_prime() const;
};

struct CatalogActionEntry {
    std::string name;
    std::string text;
    std::vector<std::string> tags; // "klein", "q2", "sink-pair", ...
    bool has_tag(const std::string& t) const;
};

const std::vector<CatalogEntry>& catalog_entries();
const std::vector<CatalogActionEntry>& catalog_action_entries();

const CatalogEntry* catalog_find(const std::string& name);
const CatalogActionEntry* catalog_find_action(const std::string& name);

/// Loads (and caches) a catalog group / action by name.
GroupPtr catalog_group(const std::string& name);
AutAction catalog_action(const std::string& name);

} // namespace ewb

#endif
