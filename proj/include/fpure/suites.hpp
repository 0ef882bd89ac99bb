#pragma once

#include <string>
#include <vector>

#include "fpure/corpus.hpp"

namespace fpure {

struct CaseResult {
  std::string label;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CaseResult> cases;

  std::size_t failures() const;
};

/// main-formula, scaling, semicontinuity, tensor, hyperplane, perturbation, diffpow.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Corpus-driven suites use `corpus`; the others carry
/// their own instances. Throws InputError for an unknown name.
SuiteResult run_suite(const std::string& name, const std::vector<CorpusEntry>& corpus,
                      unsigned jobs = 1);

SuiteResult run_main_formula_suite(const std::vector<CorpusEntry>& corpus,
                                   const std::vector<unsigned>& levels);
/// Per level step: b' >= p b, the equivalent theta' <= p theta + n(p-1), and the
/// stronger theta' <= p theta, which fails whenever theta_e = c(q-1) with c > 0.
SuiteResult run_scaling_suite(const std::vector<CorpusEntry>& corpus, unsigned e_max);
SuiteResult run_semicontinuity_suite(const std::vector<CorpusEntry>& corpus,
                                     const std::vector<unsigned>& levels, unsigned jobs);
SuiteResult run_tensor_suite(const std::vector<unsigned>& levels);
SuiteResult run_hyperplane_suite(const std::vector<unsigned>& levels);
SuiteResult run_perturbation_suite(const std::vector<unsigned>& levels);
/// diff_power_member at m against membership in m^n + m^[q], three variables.
SuiteResult run_diffpow_suite(std::size_t random_samples = 200);

}  // namespace fpure
