#pragma once

#include <stdexcept>

#include "gss/report.hpp"

namespace gss::cases {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Named case studies:
//   not-transitive, ell1-real, ell1-complex, fdim-spectra, reconstruction,
//   sublemma, like-tensor, classification
// Unknown names raise UsageError.
report::Report run_case_study(const std::string& name, const report::RunConfig& config);

const std::vector<std::string>& case_study_names();

}  // namespace gss::cases
