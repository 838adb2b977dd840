#include "gss/cases.hpp"

#include "gss/banach/ell1_complex.hpp"
#include "gss/banach/not_transitive.hpp"
#include "gss/closure/iso.hpp"
#include "gss/closure/transforms.hpp"
#include "gss/cstar/lemmas.hpp"
#include "gss/cstar/reconstruct.hpp"
#include "gss/cstar/spectra.hpp"
#include "gss/suite.hpp"

namespace gss::cases {

using report::Report;
using report::RunConfig;

namespace {

Report case_not_transitive(const RunConfig&) {
  Report rep;
  banach::NotTransitiveReport r = banach::not_transitive_case_study();
  for (const auto& claim : r.claims)
    rep.add("not-transitive/" + claim.id, claim.pass, claim.detail);
  return rep;
}

Report case_ell1_real(const RunConfig&) {
  return suite::ell1_real_dichotomy(4);
}

Report case_ell1_complex(const RunConfig& config) {
  return suite::ell1_complex_agreement(config.torus_pairs, 4, config.seed);
}

Report case_fdim_spectra(const RunConfig& config) {
  Report rep;
  cstar::FdAlgebra alg = cstar::FdAlgebra::parse(config.algebra);
  cstar::SpectraResult sp = cstar::spectra(alg);
  const int k = alg.block_count();
  rep.add("fdim-spectra/point-counts", sp.gs.size() == k && sp.ps.size() == k,
          "algebra " + alg.str());
  rep.add("fdim-spectra/discrete",
          sp.gs.closed_family().size() == (1u << k) && sp.ps.closed_family().size() == (1u << k));
  rep.add("fdim-spectra/gamma-bijective-homeomorphism",
          sp.gamma.is_bijective() && closure::is_homeomorphism(sp.gamma));
  bool quotient = true;
  for (closure::Subset s = 0;; ++s) {
    if (sp.gs.closure(s) != sp.gamma.preimage(sp.ps.closure(sp.gamma.image(s)))) quotient = false;
    if (s == sp.gs.full_mask()) break;
  }
  rep.add("fdim-spectra/quotient-identity", quotient);
  bool kernels_ok = true;
  for (int b = 0; b < k; ++b) {
    const auto& ker = sp.kernels[static_cast<size_t>(b)];
    if (static_cast<int>(ker.size()) != k - 1) kernels_ok = false;
    for (int j : ker)
      if (j == b) kernels_ok = false;
  }
  rep.add("fdim-spectra/kernel-ideals", kernels_ok);
  // simple algebra: single block has the zero ideal as its only kernel
  cstar::SpectraResult simple = cstar::spectra(cstar::FdAlgebra({3}));
  rep.add("fdim-spectra/simple-block-zero-kernel",
          simple.kernels.size() == 1 && simple.kernels[0].empty());
  return rep;
}

Report case_reconstruction(const RunConfig& config) {
  return suite::reconstruction_batch(config.reconstruction_trials, config.seed,
                                     config.mode == RunConfig::Mode::exact);
}

Report case_sublemma(const RunConfig& config) {
  return suite::sublemma_batch(config.batch_trials, config.seed);
}

Report case_like_tensor(const RunConfig& config) {
  return suite::like_tensor_batch(config.batch_trials, config.seed);
}

Report case_classification(const RunConfig&) {
  return suite::classification_sweep(12);
}

}  // namespace

const std::vector<std::string>& case_study_names() {
  static const std::vector<std::string> names = {
      "not-transitive", "ell1-real",      "ell1-complex",  "fdim-spectra",
      "reconstruction", "sublemma",       "like-tensor",   "classification"};
  return names;
}

Report run_case_study(const std::string& name, const RunConfig& config) {
  Report rep;
  rep.seed = config.seed;
  rep.mode = config.mode_name();
  if (name == "not-transitive")
    rep.merge(case_not_transitive(config));
  else if (name == "ell1-real")
    rep.merge(case_ell1_real(config));
  else if (name == "ell1-complex")
    rep.merge(case_ell1_complex(config));
  else if (name == "fdim-spectra")
    rep.merge(case_fdim_spectra(config));
  else if (name == "reconstruction")
    rep.merge(case_reconstruction(config));
  else if (name == "sublemma")
    rep.merge(case_sublemma(config));
  else if (name == "like-tensor")
    rep.merge(case_like_tensor(config));
  else if (name == "classification")
    rep.merge(case_classification(config));
  else
    throw UsageError("unknown case study: " + name);
  return rep;
}

}  // namespace gss::cases
