#pragma once

#include "purecross/bijections.hpp"
#include "purecross/numeric.hpp"
#include "purecross/series.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace purecross {

/// p/q with p uniform in [-9, 9] and q uniform in [1, 9].
Rational random_rational(std::mt19937_64& rng);

/// Random a(pi) for every purely crossing partition of size <= max_size;
/// larger members keep the default weight 1.
WeightAssignment random_weight_assignment(std::mt19937_64& rng, int max_size);

/// Random series of `order` with zero constant term, unit linear
/// coefficient and small integer coefficients elsewhere.
Series random_unit_series(std::mt19937_64& rng, int order);

/// Lagrange inversion: g_n = (1/n) [x^{n-1}] (x / f)^n. Independent of
/// `reversion` and used to cross-check it.
Series lagrange_inversion(const Series& f);

struct VerifyOptions {
    int max_n = 8;
    int weighted_trials = 20;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    /// Counterexample or summary.
    std::string detail;
};

/**
 * Runs every invariant of the library: partition predicates and cover,
 * enumeration, the three bijections and weight transport, the series
 * engine and both pipelines. Enumeration depths are capped by
 * `options.max_n` (and tighter per-check ceilings for the quadratic
 * brute-force oracles). `on_result` is called as each check finishes.
 */
std::vector<CheckResult> run_verification(const VerifyOptions& options,
                                          const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace purecross
