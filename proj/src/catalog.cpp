#include "ewb/catalog.hpp"

#include "ewb/error.hpp"
#include "ewb/spec_text.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ewb {

bool CatalogEntry::has_tag(const std::string& t) const {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
}

int CatalogEntry::p_group_prime() const {
    for (const auto& t : tags)
        if (t.rfind("p-group:", 0) == 0) return std::atoi(t.c_str() + 8);
    return 0;
}

bool CatalogActionEntry::has_tag(const std::string& t) const {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
}

namespace {

std::string cyclic_spec(const std::string& name, int n) {
    std::string cyc = "(";
    for (int i = 1; i <= n; ++i) {
        if (i > 1) cyc += " ";
        cyc += std::to_string(i);
    }
    cyc += ")";
    return "group " + name + "\nkind permutation degree " + std::to_string(n) +
           "\ngen g = " + cyc + "\nend\n";
}

CatalogEntry cyclic_entry(int n) {
    CatalogEntry e;
    e.name = "C" + std::to_string(n);
    e.group_text = cyclic_spec(e.name, n);
    e.tags = {"abelian", "nilpotent", "cyclic"};
    auto primes = primes_dividing(n);
    if (primes.size() == 1) e.tags.push_back("p-group:" + std::to_string(primes[0]));
    e.expect_order = n;
    e.expect_nilpotent = true;
    e.expect_soluble = true;
    e.expect_fitting_height = 1;
    e.expect_fitting_order = n;
    e.expect_gamma_inf_order = 1;
    e.expect_class = 1;
    return e;
}

std::vector<CatalogEntry> build_entries() {
    std::vector<CatalogEntry> out;
    for (int n : {2, 3, 4, 5, 6, 7, 8, 9, 12, 16, 25, 27}) out.push_back(cyclic_entry(n));

    auto add = [&](CatalogEntry e) { out.push_back(std::move(e)); };

    {
        CatalogEntry e;
        e.name = "C4t";
        e.group_text = "group C4t\nkind table order 4\ngen g = 1 2 3 0\nend\n";
        e.tags = {"abelian", "nilpotent", "cyclic", "p-group:2", "table-kind"};
        e.expect_order = 4;
        e.expect_nilpotent = true;
        e.expect_soluble = true;
        e.expect_fitting_height = 1;
        e.expect_class = 1;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "V4";
        e.group_text =
            "group V4\nkind permutation degree 4\ngen u = (1 2)\ngen v = (3 4)\nend\n";
        e.tags = {"abelian", "nilpotent", "p-group:2"};
        e.expect_order = 4;
        e.expect_nilpotent = true;
        e.expect_soluble = true;
        e.expect_fitting_height = 1;
        e.expect_fitting_order = 4;
        e.expect_class = 1;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "C2xC4";
        e.group_text =
            "group C2xC4\nkind permutation degree 6\ngen u = (1 2)\ngen v = (3 4 5 6)\nend\n";
        e.tags = {"abelian", "nilpotent", "p-group:2"};
        e.expect_order = 8;
        e.expect_nilpotent = true;
        e.expect_class = 1;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "C2xC2xC2";
        e.group_text = "group C2xC2xC2\nkind permutation degree 6\ngen u = (1 2)\ngen v = (3 "
                       "4)\ngen w = (5 6)\nend\n";
        e.tags = {"abelian", "nilpotent", "p-group:2"};
        e.expect_order = 8;
        e.expect_nilpotent = true;
        e.expect_class = 1;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "C3xC3";
        e.group_text =
            "group C3xC3\nkind permutation degree 6\ngen u = (1 2 3)\ngen v = (4 5 6)\nend\n";
        e.tags = {"abelian", "nilpotent", "p-group:3"};
        e.expect_order = 9;
        e.expect_nilpotent = true;
        e.expect_soluble = true;
        e.expect_fitting_height = 1;
        e.expect_fitting_order = 9;
        e.expect_class = 1;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "C5xC5";
        e.group_text = "group C5xC5\nkind permutation degree 10\ngen u = (1 2 3 4 5)\ngen v = "
                       "(6 7 8 9 10)\nend\n";
        e.tags = {"abelian", "nilpotent", "p-group:5"};
        e.expect_order = 25;
        e.expect_nilpotent = true;
        e.expect_class = 1;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "C7xC7";
        e.group_text = "group C7xC7\nkind permutation degree 14\ngen u = (1 2 3 4 5 6 7)\ngen "
                       "v = (8 9 10 11 12 13 14)\nend\n";
        e.tags = {"abelian", "nilpotent"};
        e.expect_order = 49;
        e.expect_nilpotent = true;
        e.expect_class = 1;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "S3";
        e.group_text =
            "group S3\nkind permutation degree 3\ngen s = (1 2)\ngen r = (1 2 3)\nend\n";
        e.tags = {"soluble"};
        e.expect_order = 6;
        e.expect_nilpotent = false;
        e.expect_soluble = true;
        e.expect_fitting_height = 2;
        e.expect_fitting_order = 3;
        e.expect_gamma_inf_order = 3;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "S4";
        e.group_text =
            "group S4\nkind permutation degree 4\ngen s = (1 2)\ngen r = (1 2 3 4)\nend\n";
        e.tags = {"soluble"};
        e.expect_order = 24;
        e.expect_nilpotent = false;
        e.expect_soluble = true;
        e.expect_fitting_height = 3;
        e.expect_fitting_order = 4;
        e.expect_gamma_inf_order = 12;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "A4";
        e.group_text =
            "group A4\nkind permutation degree 4\ngen t = (1 2 3)\ngen v = (1 2)(3 4)\nend\n";
        e.tags = {"soluble"};
        e.expect_order = 12;
        e.expect_nilpotent = false;
        e.expect_soluble = true;
        e.expect_fitting_height = 2;
        e.expect_fitting_order = 4;
        e.expect_gamma_inf_order = 4;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "A5";
        e.group_text =
            "group A5\nkind permutation degree 5\ngen r = (1 2 3 4 5)\ngen t = (1 2 3)\nend\n";
        e.tags = {"insoluble"};
        e.expect_order = 60;
        e.expect_nilpotent = false;
        e.expect_soluble = false;
        e.expect_fitting_height = -1;
        e.expect_fitting_order = 1;
        e.expect_gamma_inf_order = 60;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "D8";
        e.group_text =
            "group D8\nkind permutation degree 4\ngen r = (1 2 3 4)\ngen s = (1 3)\nend\n";
        e.tags = {"nilpotent", "p-group:2"};
        e.expect_order = 8;
        e.expect_nilpotent = true;
        e.expect_soluble = true;
        e.expect_fitting_height = 1;
        e.expect_class = 2;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "D14";
        e.group_text = "group D14\nkind permutation degree 7\ngen r = (1 2 3 4 5 6 7)\ngen s "
                       "= (2 7)(3 6)(4 5)\nend\n";
        e.tags = {"soluble"};
        e.expect_order = 14;
        e.expect_nilpotent = false;
        e.expect_soluble = true;
        e.expect_fitting_height = 2;
        e.expect_fitting_order = 7;
        e.expect_gamma_inf_order = 7;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "D16";
        e.group_text = "group D16\nkind permutation degree 8\ngen r = (1 2 3 4 5 6 7 8)\ngen "
                       "s = (2 8)(3 7)(4 6)\nend\n";
        e.tags = {"nilpotent", "p-group:2"};
        e.expect_order = 16;
        e.expect_nilpotent = true;
        e.expect_class = 3;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "Q8";
        e.group_text = "group Q8\nkind permutation degree 8\ngen i = (1 3 2 4)(5 8 6 7)\ngen "
                       "j = (1 5 2 6)(3 7 4 8)\nend\n";
        e.tags = {"nilpotent", "p-group:2"};
        e.expect_order = 8;
        e.expect_nilpotent = true;
        e.expect_class = 2;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "SL23";
        e.group_text = "group SL23\nkind permutation degree 8\ngen a = (1 4 7)(2 8 5)\ngen b "
                       "= (3 4 5)(6 8 7)\nend\n";
        e.tags = {"soluble"};
        e.expect_order = 24;
        e.expect_nilpotent = false;
        e.expect_soluble = true;
        e.expect_fitting_height = 2;
        e.expect_fitting_order = 8;
        e.expect_gamma_inf_order = 8;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "F21";
        e.group_text = "group F21\nkind permutation degree 7\ngen r = (1 2 3 4 5 6 7)\ngen s "
                       "= (2 3 5)(4 7 6)\nend\n";
        e.tags = {"soluble"};
        e.expect_order = 21;
        e.expect_nilpotent = false;
        e.expect_soluble = true;
        e.expect_fitting_height = 2;
        e.expect_fitting_order = 7;
        e.expect_gamma_inf_order = 7;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "F20";
        e.group_text = "group F20\nkind permutation degree 5\ngen r = (1 2 3 4 5)\ngen s = (2 "
                       "3 5 4)\nend\n";
        e.tags = {"soluble"};
        e.expect_order = 20;
        e.expect_nilpotent = false;
        e.expect_soluble = true;
        e.expect_fitting_height = 2;
        e.expect_fitting_order = 5;
        e.expect_gamma_inf_order = 5;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "Heis3";
        e.group_text = "group Heis3\nkind permutation degree 9\ngen x = (4 6 5)(7 8 9)\ngen y "
                       "= (1 4 7)(2 5 8)(3 6 9)\nend\n";
        e.tags = {"nilpotent", "p-group:3", "extraspecial"};
        e.expect_order = 27;
        e.expect_nilpotent = true;
        e.expect_class = 2;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "Heis5";
        e.group_text =
            "group Heis5\nkind permutation degree 25\ngen x = (6 10 9 8 7)(11 14 12 15 13)(16 "
            "18 20 17 19)(21 22 23 24 25)\ngen y = (1 6 11 16 21)(2 7 12 17 22)(3 8 13 18 "
            "23)(4 9 14 19 24)(5 10 15 20 25)\nend\n";
        e.tags = {"nilpotent", "p-group:5"};
        e.expect_order = 125;
        e.expect_nilpotent = true;
        e.expect_class = 2;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "C3wrC3";
        e.group_text = "group C3wrC3\nkind permutation degree 9\ngen b = (1 2 3)\ngen t = (1 "
                       "4 7)(2 5 8)(3 6 9)\nend\n";
        e.tags = {"nilpotent", "p-group:3"};
        e.expect_order = 81;
        e.expect_nilpotent = true;
        e.expect_class = 3;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "UT42";
        e.group_text = "group UT42\nkind permutation degree 15\ngen a = (4 12)(5 13)(6 14)(7 "
                       "15)\ngen b = (2 6)(3 7)(10 14)(11 15)\ngen c = (1 3)(5 7)(9 11)(13 "
                       "15)\nend\n";
        e.tags = {"nilpotent", "p-group:2"};
        e.expect_order = 64;
        e.expect_nilpotent = true;
        e.expect_class = 3;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "Syl2S8";
        e.group_text = "group Syl2S8\nkind permutation degree 8\ngen a = (1 2)\ngen b = (1 "
                       "3)(2 4)\ngen c = (1 5)(2 6)(3 7)(4 8)\nend\n";
        e.tags = {"nilpotent", "p-group:2"};
        e.expect_order = 128;
        e.expect_nilpotent = true;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "F75";
        e.group_text =
            "group F75\nkind permutation degree 25\ngen v1 = (1 6 11 16 21)(2 7 12 17 22)(3 8 "
            "13 18 23)(4 9 14 19 24)(5 10 15 20 25)\ngen v2 = (1 2 3 4 5)(6 7 8 9 10)(11 12 "
            "13 14 15)(16 17 18 19 20)(21 22 23 24 25)\ngen c = (2 25 6)(3 19 11)(4 13 16)(5 "
            "7 21)(8 20 10)(9 14 15)(12 22 24)(17 23 18)\nend\n";
        e.tags = {"soluble"};
        e.expect_order = 75;
        e.expect_nilpotent = false;
        e.expect_soluble = true;
        e.expect_fitting_height = 2;
        e.expect_fitting_order = 25;
        e.expect_gamma_inf_order = 25;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "F21xC3";
        e.group_text =
            "group F21xC3\nkind permutation degree 10\ngen r = (1 2 3 4 5 6 7)\ngen s = (2 3 "
            "5)(4 7 6)\ngen t = (8 9 10)\nend\n";
        e.tags = {"soluble"};
        e.expect_order = 63;
        e.expect_nilpotent = false;
        e.expect_soluble = true;
        e.expect_fitting_height = 2;
        e.expect_fitting_order = 21;
        e.expect_gamma_inf_order = 7;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "S3xC3";
        e.group_text = "group S3xC3\nkind permutation degree 6\ngen s = (1 2)\ngen r = (1 2 "
                       "3)\ngen t = (4 5 6)\nend\n";
        e.tags = {"soluble"};
        e.expect_order = 18;
        e.expect_nilpotent = false;
        e.expect_soluble = true;
        e.expect_fitting_height = 2;
        e.expect_fitting_order = 9;
        e.expect_gamma_inf_order = 3;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "GDih9";
        e.group_text = "group GDih9\nkind permutation degree 6\ngen u = (1 2 3)\ngen v = (4 5 "
                       "6)\ngen s = (2 3)(5 6)\nend\n";
        e.tags = {"soluble"};
        e.expect_order = 18;
        e.expect_nilpotent = false;
        e.expect_soluble = true;
        e.expect_fitting_height = 2;
        e.expect_fitting_order = 9;
        e.expect_gamma_inf_order = 9;
        add(e);
    }
    return out;
}

std::vector<CatalogActionEntry> build_actions() {
    std::vector<CatalogActionEntry> out;
    auto add = [&](const std::string& name, const std::string& text,
                   std::vector<std::string> tags) {
        out.push_back({name, text, std::move(tags)});
    };
    add("klein_on_C3xC3",
        "action klein_on_C3xC3 on C3xC3\nactor V4\nauto u: u -> u^-1\nauto v: v -> v^-1\nend\n",
        {"klein", "q2", "coprime"});
    add("klein_on_Heis3",
        "action klein_on_Heis3 on Heis3\nactor V4\nauto u: x -> x^-1\nauto v: y -> y^-1\nend\n",
        {"klein", "q2", "coprime"});
    add("klein_on_Heis5",
        "action klein_on_Heis5 on Heis5\nactor V4\nauto u: x -> x^-1\nauto v: y -> y^-1\nend\n",
        {"klein", "q2", "coprime"});
    add("klein_on_F75",
        "action klein_on_F75 on F75\nactor V4\nauto u: v1 -> v1^-1, v2 -> v2^-1\nauto v: v2 "
        "-> v1^4 v2^4, c -> c^2\nend\n",
        {"klein", "q2", "coprime", "ward-nonvacuous"});
    add("klein_on_F21xC3",
        "action klein_on_F21xC3 on F21xC3\nactor V4\nauto u: r -> r^-1\nauto v: t -> "
        "t^-1\nend\n",
        {"klein", "q2", "coprime", "ward-vacuous"});
    add("q3_on_C7xC7",
        "action q3_on_C7xC7 on C7xC7\nactor C3xC3\nauto u: u -> u^2\nauto v: v -> v^2\nend\n",
        {"klein", "q2", "coprime"});
    add("q3_on_V4", "action q3_on_V4 on V4\nactor C3xC3\nauto u: u -> v, v -> u v\nend\n",
        {"klein", "q2", "coprime", "non-faithful"});
    // cyclic coprime pairs for the semidirect sink checks
    add("inv_C7", "action inv_C7 on C7\nactor C2\nauto g: g -> g^-1\nend\n",
        {"sink-pair", "coprime"});
    add("inv_C9", "action inv_C9 on C9\nactor C2\nauto g: g -> g^-1\nend\n",
        {"sink-pair", "coprime"});
    add("mul2_C5", "action mul2_C5 on C5\nactor C4\nauto g: g -> g^2\nend\n",
        {"sink-pair", "coprime"});
    add("inv1_C3xC3", "action inv1_C3xC3 on C3xC3\nactor C2\nauto g: u -> u^-1\nend\n",
        {"sink-pair", "coprime"});
    add("swap_C3xC3", "action swap_C3xC3 on C3xC3\nactor C2\nauto g: u -> v, v -> u\nend\n",
        {"sink-pair", "coprime"});
    add("rot3_V4", "action rot3_V4 on V4\nactor C3\nauto g: u -> v, v -> u v\nend\n",
        {"sink-pair", "coprime"});
    add("rot3_Q8", "action rot3_Q8 on Q8\nactor C3\nauto g: i -> j, j -> i j\nend\n",
        {"sink-pair", "coprime"});
    add("alpha_Heis3", "action alpha_Heis3 on Heis3\nactor C2\nauto g: x -> x^-1\nend\n",
        {"sink-pair", "coprime"});
    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

const std::vector<CatalogActionEntry>& catalog_action_entries() {
    static const std::vector<CatalogActionEntry> actions = build_actions();
    return actions;
}

const CatalogEntry* catalog_find(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return &e;
    return nullptr;
}

const CatalogActionEntry* catalog_find_action(const std::string& name) {
    for (const auto& a : catalog_action_entries())
        if (a.name == name) return &a;
    return nullptr;
}

GroupPtr catalog_group(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, GroupPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    const CatalogEntry* e = catalog_find(name);
    if (!e) throw Error(ErrorCode::NotFound, "no catalog group named '" + name + "'");
    GroupPtr g = load_group(e->group_text);
    cache.emplace(name, g);
    return g;
}

AutAction catalog_action(const std::string& name) {
    const CatalogActionEntry* a = catalog_find_action(name);
    if (!a) throw Error(ErrorCode::NotFound, "no catalog action named '" + name + "'");
    ActionSpecAst ast = parse_action_spec(a->text);
    return realize_action(ast, [](const std::string& gname) { return catalog_group(gname); });
}

} // namespace ewb
