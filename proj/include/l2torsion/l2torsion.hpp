#pragma once

// Exact arithmetic for the proportionality constants alpha_d relating
// analytic L2-torsion to volume for closed hyperbolic manifolds of odd
// dimension d = 2n+1. Everything on the exact paths is rational or a
// rational multiple of a power of pi; floating point only appears in the
// numeric cross-check oracle and in convenience conversions.

#include "errors.hpp"      // exception taxonomy
#include "rational.hpp"    // Int, Rational
#include "polynomial.hpp"  // Polynomial, intpoly helpers
#include "interval.hpp"    // RatInterval, pi_enclosure
#include "pi_monomial.hpp" // PiMonomial, exact grammar
#include "decimal.hpp"     // proven significant-figure rendering
#include "report.hpp"      // CheckStatus, VerificationReport
#include "plancherel.hpp"  // density coefficients, heat trace, quadrature oracle
#include "logdet.hpp"      // L_j densities, dual routes, sign lemma
#include "torsion.hpp"     // alpha_d assembly, torsion, growth bounds
#include "golden.hpp"      // published reference table
