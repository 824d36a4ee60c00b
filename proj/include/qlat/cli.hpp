#ifndef QLAT_CLI_HPP
#define QLAT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qlat::cli {

/* Full command-line driver, in-process for testability.  `args` excludes the
   program name.  Writes results to `out`, diagnostics to `err`, and returns
   the process exit code:

     0  success (including an Unknown verdict from a semidecision probe)
     1  unknown subcommand or malformed flags (usage text on err)
     2  domain or resource error in an otherwise well-formed request
     3  unparseable input (files, rational literals, set syntax, config)

   Configuration is read from the file named by QLATTICE_CONFIG when the
   variable is set; command-line flags override it. */
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

/* argv adapter around run() for main(). */
int run_main(int argc, char** argv);

} // namespace qlat::cli

#endif
