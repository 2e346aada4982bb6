#ifndef LAFT_TOOLS_CLI_HPP
#define LAFT_TOOLS_CLI_HPP

#include <iosfwd>

namespace laft::cli
{

// Exit codes: 0 success, 1 usage or syntax error, 2 domain error, 3 a
// verify suite reported a violation.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace laft::cli

#endif
