#include "ewb/run.hpp"

#include "ewb/catalog.hpp"
#include "ewb/engel.hpp"
#include "ewb/error.hpp"
#include "ewb/lie_series.hpp"
#include "ewb/nilpotent_model.hpp"
#include "ewb/spec_text.hpp"
#include "ewb/suites.hpp"
#include "ewb/vandermonde.hpp"
#include "ewb/version.hpp"
#include "ewb/zassenhaus.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace ewb {

namespace {

struct Options {
    std::string subcommand;
    std::string group_arg;
    std::string action_arg;
    std::string element_arg;
    std::vector<std::string> suites;
    bool all = false;
    int p = 0, q = 0, k = 0, m = 1, T = 50, U = 12, W = 6, l = 1;
    int jobs = 1;
    uint64_t seed = kDefaultSeed;
    ReportFormat format = ReportFormat::Text;
    std::vector<std::string> positional;
};

[[noreturn]] void usage_fail(const std::string& what) {
    throw Error(ErrorCode::UsageError, what);
}

uint64_t parse_seed(const std::string& s) {
    try {
        return std::stoull(s, nullptr, 16);
    } catch (...) {
        usage_fail("bad --seed value '" + s + "' (hex expected)");
    }
}

Options parse_options(const std::vector<std::string>& args) {
    Options opt;
    if (args.empty())
        usage_fail("subcommand required: sink | verify | filtration | lie | bch | vandermonde "
                   "| linearize | catalog");
    opt.subcommand = args[0];
    size_t i = 1;
    auto value = [&](const std::string& flag) -> std::string {
        if (i + 1 >= args.size()) usage_fail("missing value for " + flag);
        return args[++i];
    };
    for (; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--group") opt.group_arg = value(a);
        else if (a == "--action") opt.action_arg = value(a);
        else if (a == "--element") opt.element_arg = value(a);
        else if (a == "--suite") opt.suites.push_back(value(a));
        else if (a == "--all") opt.all = true;
        else if (a == "--p") opt.p = std::atoi(value(a).c_str());
        else if (a == "--q") opt.q = std::atoi(value(a).c_str());
        else if (a == "--k") opt.k = std::atoi(value(a).c_str());
        else if (a == "--m") opt.m = std::atoi(value(a).c_str());
        else if (a == "--T") opt.T = std::atoi(value(a).c_str());
        else if (a == "--U") opt.U = std::atoi(value(a).c_str());
        else if (a == "--W") opt.W = std::atoi(value(a).c_str());
        else if (a == "--l") opt.l = std::atoi(value(a).c_str());
        else if (a == "--jobs") opt.jobs = std::atoi(value(a).c_str());
        else if (a == "--seed") opt.seed = parse_seed(value(a));
        else if (a == "--format") {
            std::string f = value(a);
            if (f == "json") opt.format = ReportFormat::Json;
            else if (f == "text") opt.format = ReportFormat::Text;
            else usage_fail("--format must be json or text");
        } else if (!a.empty() && a[0] == '-') {
            usage_fail("unknown flag " + a);
        } else {
            opt.positional.push_back(a);
        }
    }
    return opt;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::NotFound, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

OrderedJson cx(std::initializer_list<std::pair<std::string, OrderedJson>> kv) {
    OrderedJson j;
    for (const auto& [k, v] : kv) j[k] = v;
    return j;
}

std::string seed_hex(uint64_t seed) {
    std::ostringstream os;
    os << "0x" << std::hex << seed;
    return os.str();
}

void cmd_sink(const Options& opt, Report& report, OrderedJson& payload) {
    if (opt.group_arg.empty()) usage_fail("sink needs --group");
    if (opt.element_arg.empty()) usage_fail("sink needs --element");
    GroupPtr g = resolve_group_arg(opt.group_arg);
    int elt = resolve_element_arg(g, opt.element_arg);
    EngelSink sink = smallest_sink(g, elt);
    {
        OrderedJson members = OrderedJson::array();
        for (int s : sink.sink) members.push_back(g->label(s));
        OrderedJson witnesses = OrderedJson::object();
        for (const auto& [s, k] : sink.witnesses) witnesses[g->label(s)] = k;
        payload = OrderedJson::object();
        payload["group"] = g->name;
        payload["element"] = g->label(elt);
        payload["sink"] = std::move(members);
        payload["witnesses"] = std::move(witnesses);
    }
    std::ostringstream os;
    os << "sink size " << sink.sink.size() << ": {";
    for (size_t i = 0; i < sink.sink.size(); ++i)
        os << (i ? ", " : "") << g->label(sink.sink[i]);
    os << "}";
    int max_tail = 0, max_cycle = 0;
    for (const auto& st : sink.per_start) {
        max_tail = std::max(max_tail, st.tail);
        max_cycle = std::max(max_cycle, st.cycle);
    }
    os << "; longest tail " << max_tail << ", longest cycle " << max_cycle;
    report.checks.push_back(pass_record("sink/" + g->name + "/" + g->label(elt),
                                        "smallest-engel-sink", os.str()));
    // surjectivity and witnesses, so a sink query is also a verification
    bool onto = true;
    {
        std::vector<uint8_t> hit(g->order, 0);
        for (int s : sink.sink) hit[g->comm(s, elt)] = 1;
        for (int s : sink.sink)
            if (!hit[s]) onto = false;
    }
    bool witnesses = true;
    for (const auto& [s, k2] : sink.witnesses)
        if (k2 < 1 || k2 > g->order || iterated_commutator(*g, s, elt, k2) != s)
            witnesses = false;
    report.checks.push_back(onto ? pass_record("sink/minimality", "sink-minimality", "")
                                 : fail_record("sink/minimality", "sink-minimality",
                                               "not surjective",
                                               cx({{"group", g->name},
                                                   {"element", g->label(elt)}})));
    report.checks.push_back(witnesses
                                ? pass_record("sink/witnesses", "sink-recurrence", "")
                                : fail_record("sink/witnesses", "sink-recurrence",
                                              "witness failed",
                                              cx({{"group", g->name},
                                                  {"element", g->label(elt)}})));
    report.checks.push_back(pass_record("sink/engel", "engel-element",
                                        sink.sink.size() == 1 ? "element is Engel"
                                                              : "element is not Engel"));
}

void cmd_filtration(const Options& opt, Report& report) {
    if (opt.group_arg.empty()) usage_fail("filtration needs --group");
    if (opt.p < 2) usage_fail("filtration needs --p");
    GroupPtr g = resolve_group_arg(opt.group_arg);
    ZFiltration z = zassenhaus_filtration(g, opt.p);
    std::ostringstream os;
    os << "orders";
    for (const auto& t : z.terms) os << " " << t.order();
    report.checks.push_back(pass_record("filtration/" + g->name, "p-dimension-series", os.str()));
    bool ok = true;
    const int r = (int)z.terms.size();
    for (int i = 1; i <= r && ok; ++i)
        for (int j = 1; j <= r && ok; ++j) {
            const Subgroup& target = (i + j <= r) ? z.term(i + j) : z.terms.back();
            for (int x : z.term(i).members) {
                bool stop = false;
                for (int y : z.term(j).members)
                    if (!target.contains(g->comm(x, y))) {
                        ok = false;
                        stop = true;
                        break;
                    }
                if (stop) break;
            }
        }
    report.checks.push_back(ok ? pass_record("filtration/strong-centrality", "strong-centrality",
                                             "")
                               : fail_record("filtration/strong-centrality", "strong-centrality",
                                             "failed", cx({{"group", g->name}})));
}

void cmd_lie(const Options& opt, Report& report) {
    if (opt.group_arg.empty()) usage_fail("lie needs --group");
    if (opt.p < 2) usage_fail("lie needs --p");
    GroupPtr g = resolve_group_arg(opt.group_arg);
    GradedLie alg = graded_lie(zassenhaus_filtration(g, opt.p), opt.seed);
    std::ostringstream os;
    os << "dims";
    for (const auto& c : alg.components) os << " " << c.dim;
    os << "; generated subalgebra dims";
    for (int d : alg.lp_dims) os << " " << d;
    report.checks.push_back(pass_record("lie/" + g->name, "graded-dimension-sum", os.str()));
    std::ostringstream ads;
    ads << "ad indices of degree-1 basis:";
    for (int a = 0; a < (alg.components.empty() ? 0 : alg.components[0].dim); ++a)
        ads << " " << ad_index(alg, basis_vector(alg, 0, a));
    report.checks.push_back(pass_record("lie/ad-indices", "ad-index-sanity", ads.str()));
}

void cmd_bch(const Options& opt, Report& report, OrderedJson& payload) {
    if (opt.W < 1) usage_fail("bch needs --W >= 1");
    const LieSeries& phi = bch_series(opt.W);
    const auto& basis = phi.basis();
    OrderedJson table = OrderedJson::object();
    for (const auto& [idx, c] : phi.coeffs)
        table[basis.word_string(idx, "XY")] = rat_to_string(c);
    payload = std::move(table);
    report.checks.push_back(pass_record("bch/W" + std::to_string(opt.W), "bch-series",
                                        std::to_string(phi.coeffs.size()) +
                                            " basis coefficients emitted"));
}

void cmd_vandermonde(const Options& opt, Report& report, OrderedJson& payload) {
    if (opt.k < 1 || opt.p < 2) usage_fail("vandermonde needs --k and --p");
    VandermondeSystem sys = solve_system(opt.k, opt.p, opt.m);
    OrderedJson rows = OrderedJson::array();
    for (int i = 0; i < sys.k; ++i) {
        OrderedJson row;
        row["k"] = sys.k;
        row["p"] = opt.p;
        row["m"] = sys.m;
        row["i"] = i;
        row["c_i"] = rat_to_string(sys.c[i]);
        row["denom_valuation"] = padic_val(denominator(sys.c[i]), sys.p);
        row["beta_checked_to"] = opt.T;
        rows.push_back(std::move(row));
    }
    payload = std::move(rows);
    std::string cs;
    for (int i = 0; i < sys.k; ++i) cs += (i ? ", " : "") + rat_to_string(sys.c[i]);
    try {
        beta_sequence(sys, opt.T);
        report.checks.push_back(pass_record("vandermonde/beta", "beta-integrality",
                                            "c = (" + cs + "); beta_t p-integral for t <= " +
                                                std::to_string(opt.T)));
    } catch (const Error& e) {
        report.checks.push_back(fail_record("vandermonde/beta", "beta-integrality", e.what(),
                                            cx({{"k", opt.k}, {"p", opt.p}, {"m", opt.m}})));
    }
    try {
        valuation_checks(sys, opt.U);
        report.checks.push_back(pass_record("vandermonde/valuations", "denominator-valuation",
                                            "exact for i >= 1; tails to u = " +
                                                std::to_string(opt.U)));
    } catch (const Error& e) {
        report.checks.push_back(fail_record("vandermonde/valuations", "denominator-valuation",
                                            e.what(),
                                            cx({{"k", opt.k}, {"p", opt.p}, {"m", opt.m}})));
    }
    if (!sys.product_form_sign_flips.empty()) {
        std::string note = "product-form sign flips at i =";
        for (int i : sys.product_form_sign_flips) note += " " + std::to_string(i);
        report.checks.push_back(pass_record("vandermonde/product-form", "product-form-sign",
                                            note));
    }
}

void cmd_linearize(const Options& opt, Report& report) {
    if (opt.k < 1 || opt.p < 2) usage_fail("linearize needs --k and --p");
    try {
        LinearizationReport rep = linearization_identity_check(opt.l, opt.k, opt.p, opt.m, opt.W);
        std::string details = "degree-0 part is w_0; degrees 1.." + std::to_string(opt.k - 1) +
                              " vanish; beta-scaled parts match; delta clears denominators";
        for (const auto& n : rep.notes) details += "; " + n;
        report.checks.push_back(pass_record("linearize", "linearization-identity", details));
    } catch (const Error& e) {
        report.checks.push_back(
            fail_record("linearize", "linearization-identity", e.what(),
                        cx({{"l", opt.l}, {"k", opt.k}, {"p", opt.p}, {"m", opt.m},
                            {"W", opt.W}})));
    }
}

void cmd_catalog(const Options& opt, Report& report) {
    if (opt.positional.empty()) usage_fail("catalog needs 'list' or 'show <name>'");
    if (opt.positional[0] == "list") {
        for (const auto& e : catalog_entries()) {
            std::string tags;
            for (const auto& t : e.tags) tags += (tags.empty() ? "" : ",") + t;
            report.checks.push_back(pass_record("catalog/" + e.name, "catalog-entry",
                                                "order " + std::to_string(e.expect_order) +
                                                    " [" + tags + "]"));
        }
        for (const auto& a : catalog_action_entries()) {
            std::string tags;
            for (const auto& t : a.tags) tags += (tags.empty() ? "" : ",") + t;
            report.checks.push_back(
                pass_record("catalog/action/" + a.name, "catalog-action", "[" + tags + "]"));
        }
    } else if (opt.positional[0] == "show") {
        if (opt.positional.size() < 2) usage_fail("catalog show <name>");
        const std::string& name = opt.positional[1];
        if (const CatalogEntry* e = catalog_find(name)) {
            report.checks.push_back(pass_record("catalog/" + name, "catalog-entry",
                                                "\n" + e->group_text));
        } else if (const CatalogActionEntry* a = catalog_find_action(name)) {
            report.checks.push_back(
                pass_record("catalog/action/" + name, "catalog-action", "\n" + a->text));
        } else {
            usage_fail("no catalog entry named '" + name + "'");
        }
    } else {
        usage_fail("catalog subcommand must be 'list' or 'show'");
    }
}

void cmd_verify(const Options& opt, Report& report) {
    std::vector<std::string> suites = opt.suites;
    if (suites.empty()) {
        suites = core_suite_names();
        if (opt.all)
            for (const auto& s : extended_suite_names()) suites.push_back(s);
    }
    SuiteContext ctx{opt.seed, opt.jobs};
    std::vector<CheckUnit> units;
    for (const auto& s : suites) {
        auto add = suite_units(s, ctx);
        for (auto& u : add) units.push_back(std::move(u));
    }
    // optional filters
    if (opt.q > 0) {
        std::vector<CheckUnit> kept;
        for (auto& u : units) {
            bool is_action_unit = u.id.rfind("actions/", 0) == 0 ||
                                  u.id.rfind("theorems/", 0) == 0;
            if (!is_action_unit) {
                kept.push_back(std::move(u));
                continue;
            }
            std::string name = u.id.substr(u.id.find('/') + 1);
            AutAction a = catalog_action(name);
            if (a.actor->order == opt.q * opt.q) kept.push_back(std::move(u));
        }
        units = std::move(kept);
    }
    auto strip_catalog = [](const std::string& arg) {
        return arg.rfind("catalog:", 0) == 0 ? arg.substr(8) : arg;
    };
    if (!opt.group_arg.empty()) {
        std::string name = strip_catalog(opt.group_arg);
        if (catalog_find(name)) {
            std::vector<CheckUnit> kept;
            for (auto& u : units)
                if (u.id.substr(u.id.find('/') + 1) == name) kept.push_back(std::move(u));
            units = std::move(kept);
        } else {
            // a spec file: run the group-level checks on it ad hoc
            GroupPtr g = resolve_group_arg(opt.group_arg);
            units.clear();
            units.push_back({"sinks/" + g->name, [g] {
                                 return sink_records(g, "sinks/" + g->name);
                             }});
            auto primes = primes_dividing(g->order);
            if (primes.size() == 1 && g->order > 1) {
                int p = primes[0];
                uint64_t seed = opt.seed;
                units.push_back({"zassenhaus/" + g->name, [g, p, seed] {
                                     return zassenhaus_records(g, p, "zassenhaus/" + g->name,
                                                               seed);
                                 }});
            }
        }
    }
    if (!opt.action_arg.empty()) {
        std::string name = strip_catalog(opt.action_arg);
        if (catalog_find_action(name)) {
            std::vector<CheckUnit> kept;
            for (auto& u : units)
                if (u.id.substr(u.id.find('/') + 1) == name) kept.push_back(std::move(u));
            units = std::move(kept);
        } else {
            AutAction action = resolve_action_arg(opt.action_arg);
            units.clear();
            std::string aname = action.name.empty() ? "action" : action.name;
            if (action.coprime) {
                units.push_back({"actions/" + aname, [action, aname] {
                                     return action_lemma_records(action, "actions/" + aname);
                                 }});
            } else {
                units.push_back({"actions/" + aname, [aname] {
                                     std::vector<CheckRecord> out;
                                     out.push_back(skipped_record(
                                         "actions/" + aname, "centralizer-generation",
                                         "action is not coprime; the lemmas do not apply"));
                                     return out;
                                 }});
            }
            if (actor_is_elementary_abelian_q2(action) && action.coprime)
                units.push_back({"theorems/" + aname, [action, aname] {
                                     return theorem_shadow_records(action,
                                                                   "theorems/" + aname);
                                 }});
        }
    }
    auto records = run_units(std::move(units), opt.jobs);
    for (auto& r : records) report.checks.push_back(std::move(r));
}

} // namespace

GroupPtr resolve_group_arg(const std::string& arg) {
    if (arg.rfind("catalog:", 0) == 0) return catalog_group(arg.substr(8));
    return load_group(read_file(arg));
}

AutAction resolve_action_arg(const std::string& arg) {
    if (arg.rfind("catalog:", 0) == 0) return catalog_action(arg.substr(8));
    ActionSpecAst ast = parse_action_spec(read_file(arg));
    return realize_action(ast, [](const std::string& name) { return catalog_group(name); });
}

int resolve_element_arg(const GroupPtr& g, const std::string& arg) {
    if (!arg.empty() && arg[0] == '#') {
        int id = std::atoi(arg.c_str() + 1);
        if (id < 0 || id >= g->order) throw Error(ErrorCode::NotFound, "element id out of range");
        return id;
    }
    if (!arg.empty() && arg[0] == '(') {
        if (g->perm_degree == 0)
            throw Error(ErrorCode::UsageError, "cycle syntax needs a permutation-backed group");
        std::vector<int> perm = parse_cycles(arg, g->perm_degree);
        int id = g->id_of_perm(perm);
        if (id < 0) throw Error(ErrorCode::NotFound, "permutation is not in the group");
        return id;
    }
    // word in generator names: "r s^-1 r^2"
    std::istringstream is(arg);
    std::string tok;
    int value = 0;
    while (is >> tok) {
        auto caret = tok.find('^');
        std::string base = tok.substr(0, caret == std::string::npos ? tok.size() : caret);
        int e = 1;
        if (caret != std::string::npos) e = std::atoi(tok.c_str() + caret + 1);
        int gen = -1;
        for (size_t i = 0; i < g->gen_names.size(); ++i)
            if (g->gen_names[i] == base) gen = g->generators[i];
        if (gen < 0) throw Error(ErrorCode::NotFound, "unknown generator '" + base + "'");
        value = g->mul(value, g->pow(gen, e));
    }
    return value;
}

RunResult run_command(const std::vector<std::string>& args) {
    auto start = std::chrono::steady_clock::now();
    Options opt = parse_options(args);
    RunResult out;
    out.format = opt.format;
    out.report.version = kVersion;
    out.report.seed_hex = seed_hex(opt.seed);
    {
        // echo the semantic command; --jobs only affects scheduling and must
        // not change the bytes of the report
        std::string cmd;
        for (size_t i = 0; i < args.size(); ++i) {
            if (args[i] == "--jobs") {
                ++i;
                continue;
            }
            cmd += (cmd.empty() ? "" : " ") + args[i];
        }
        out.report.command = cmd;
    }
    OrderedJson payload; // null unless a command emits a table

    if (opt.subcommand == "sink") cmd_sink(opt, out.report, payload);
    else if (opt.subcommand == "verify") cmd_verify(opt, out.report);
    else if (opt.subcommand == "filtration") cmd_filtration(opt, out.report);
    else if (opt.subcommand == "lie") cmd_lie(opt, out.report);
    else if (opt.subcommand == "bch") cmd_bch(opt, out.report, payload);
    else if (opt.subcommand == "vandermonde") cmd_vandermonde(opt, out.report, payload);
    else if (opt.subcommand == "linearize") cmd_linearize(opt, out.report);
    else if (opt.subcommand == "catalog") cmd_catalog(opt, out.report);
    else usage_fail("unknown subcommand '" + opt.subcommand + "'");

    auto end = std::chrono::steady_clock::now();
    out.report.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();
    out.report.payload = std::move(payload);
    out.exit_code = exit_code_for(out.report);
    return out;
}

} // namespace ewb
