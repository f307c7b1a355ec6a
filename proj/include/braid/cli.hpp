#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braid::cli {

// Exit status: 0 success / affirmative, 1 negative decision, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braid::cli
