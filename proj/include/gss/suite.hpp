#pragma once

#include "gss/report.hpp"

namespace gss::suite {

// Exhaustive and seeded property batches. Each returns a Report whose
// records carry stable claim ids; the acceptance gate and the `suite` CLI
// subcommand are built from these.

// Closure axioms and family/fixed-point agreement over every
// intersection-closed family on at most `max_points` points.
report::Report closure_axioms_exhaustive(int max_points);

// Pullback identity between the two transforms, the definitional closure of
// the second transform, and its T0 property, over the same enumeration.
report::Report transform_identity_exhaustive(int max_points);

// Seeded homeomorphic pairs: lifted maps are homeomorphisms and the square
// with the two delta maps commutes.
report::Report lift_functoriality(int pairs, std::uint64_t seed);

// Sampled 5-point spaces: axioms plus transform identity.
report::Report sampled_spaces(int count, std::uint64_t seed);

// Real ell1 up to max_n: point counts and every distinct pair closed.
report::Report ell1_real_dichotomy(int max_n);

// Complex ell1 torus pairs: ratio criterion vs span oracle, witness checks,
// and float clustering agreement.
report::Report ell1_complex_agreement(int pairs, int max_n, std::uint64_t seed);

// mixed3d extremality oracle certification by boundary sampling and
// midpoint tests.
report::Report mixed3d_oracle_certification(int samples, std::uint64_t seed);

// Fast vs brute-force tie verdicts, exact scalars, per block size 2..4.
report::Report tie_agreement(int pairs_per_n, std::uint64_t seed);

// Nullspace solver: dimension-one solution spaces aligned with the input.
report::Report sublemma_batch(int count, std::uint64_t seed);

// Seeded vanishing functional sums: decompose and verify both identities.
report::Report like_tensor_batch(int count, std::uint64_t seed);

// All algebras with at most `max_blocks` blocks of size at most `max_size`:
// both derived spaces discrete, gamma bijective, quotient identity.
report::Report spectra_exhaustive(int max_blocks, int max_size);

// Seeded (U, V, sigma, flip) reconstructions on M_3 and M_4.
report::Report reconstruction_batch(int count, std::uint64_t seed, bool exact);

// Fingerprints across all block multisets with total dimension <= cap.
report::Report classification_sweep(int max_total_dim);

// Remaining module invariants: involutions, induced maps, R-sets, induced
// closure spaces, equivalence classes vs tie components.
report::Report cross_module_invariants(const report::RunConfig& config);

// The full battery with configured sizes; deterministic given the config.
report::Report run_property_suite(const report::RunConfig& config);

}  // namespace gss::suite
