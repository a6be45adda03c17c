// Workbench front door: group/action specs in, verification reports out.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

#include "ewb/error.hpp"
#include "ewb/run.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

const char* kUsage =
    "usage: ewb <subcommand> [flags]\n"
    "\n"
    "subcommands:\n"
    "  sink --group <G> --element <E>        smallest Engel sink of an element\n"
    "  verify [--all] [--suite NAME]...      run the lemma suites over the catalog\n"
    "  filtration --group <G> --p <p>        p-dimension series of a p-group\n"
    "  lie --group <G> --p <p>               graded Lie algebra of the filtration\n"
    "  bch --W <w>                           BCH coefficients up to weight w\n"
    "  vandermonde --k <k> --p <p> --m <m>   elimination coefficients and checks\n"
    "  linearize --l <l> --k <k> --p <p>     end-to-end elimination identity\n"
    "  catalog list | catalog show <name>    bundled groups and actions\n"
    "\n"
    "flags: --group <file|catalog:NAME>  --action <file|catalog:NAME>\n"
    "       --element <\"#id\"|cycles|word>  --p --q --k --m --T --U --W --l\n"
    "       --format json|text  --seed <hex>  --jobs <n>\n";

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        std::cout << kUsage;
        return args.empty() ? 2 : 0;
    }
    try {
        ewb::RunResult result = ewb::run_command(args);
        std::cout << ewb::emit_report(result.report, result.format);
        return result.exit_code;
    } catch (const ewb::Error& e) {
        if (e.code() == ewb::ErrorCode::UsageError) {
            std::cerr << "error: " << e.what() << "\n\n" << kUsage;
            return 2;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
