#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gh {

using Scalar = mpq_class;

std::string to_string(const Scalar& s);
Scalar parse_scalar(std::string_view text);

inline int parity(int degree) { return degree & 1; }

// (-1)^{|a||b|} with |a|, |b| the summed parities.
int koszul_sign(const std::vector<int>& degrees_a, const std::vector<int>& degrees_b);

inline int sign_of(int exponent) { return (exponent & 1) ? -1 : 1; }

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define GH_ERROR(Name)                        \
  struct Name : Error {                       \
    using Error::Error;                       \
  }

GH_ERROR(NonTerminating);
GH_ERROR(UnregisteredGenerator);
GH_ERROR(FiltrationExceeded);
GH_ERROR(DegeneratePairing);
GH_ERROR(MalformedDefinition);
GH_ERROR(GroupAxiomViolation);
GH_ERROR(UnsupportedGroup);
GH_ERROR(JacobiViolation);
GH_ERROR(NotSmooth);
GH_ERROR(CocycleViolation);
GH_ERROR(UnknownSuite);
GH_ERROR(UnknownGroup);

#undef GH_ERROR

}  // namespace gh
