#pragma once

#include <string>

#include "gh/algebra.hpp"
#include "gh/hopf.hpp"
#include "gh/report.hpp"

namespace gh {

// Resolves every overlap abc (rules on ab and on bc, point letters sampled) both ways.
Report check_local_confluence(const Presentation& P, const AxiomOptions& opt, const std::string& prefix,
                              const std::string& anchor);

// nf((uv)w) = nf(u(vw)) on random normal words, plus idempotence and additivity of degree and weight.
Report check_associativity(const Presentation& P, const AxiomOptions& opt, const std::string& prefix,
                           const std::string& anchor);

}  // namespace gh
