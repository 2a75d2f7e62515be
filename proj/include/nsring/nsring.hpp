#pragma once

// Exact arithmetic for Hilbert functions and first Hilbert coefficients of
// one-dimensional local rings given combinatorially: numerical semigroup
// rings, their finite-torsion idealizations, and the pair ideals of V x V.

#include "nsring/coefficients.hpp"
#include "nsring/cofinite_set.hpp"
#include "nsring/core.hpp"
#include "nsring/delta.hpp"
#include "nsring/idealization.hpp"
#include "nsring/monomial_ideal.hpp"
#include "nsring/pair_ideal.hpp"
#include "nsring/semigroup.hpp"
#include "nsring/verify.hpp"
