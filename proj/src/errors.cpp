#include "perind/errors.hpp"

#include <cstdio>
#include <cstdlib>

namespace perind {

void invariant_violation(const std::string& what) {
    std::fprintf(stderr, "invariant violation: %s\n", what.c_str());
    std::fflush(stderr);
    std::abort();
}

}  // namespace perind
