#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ycluster/vertex.hpp"

namespace ycluster::cli {

struct RunConfig {
    FamilyDescriptor family;
    std::string semifield = "numeric";  // tropical | numeric | symbolic
    bool semifield_given = false;
    bool family_given = false;
    bool principal = false;
    int periods = 1;
    std::uint64_t rng_seed = 20100101;
    double tol_rel = 1e-9;
    double tol_dilog = 1e-8;
    std::size_t node_bound = 200000;
    std::string check = "all";
    std::string script;
    bool guided = false;
    std::string out;
};

// Runs one command line.  Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage or domain error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ycluster::cli
