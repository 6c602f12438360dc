#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hitq {

// parses "9,17,21" and "1-24" (mixed allowed)
std::vector<int> parse_degree_list(const std::string& s);

// exit codes: 0 ok, 1 verification mismatch, 2 usage error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

} // namespace hitq
