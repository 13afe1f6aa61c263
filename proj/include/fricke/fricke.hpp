#pragma once

// Umbrella header: free-group word arithmetic, word-growth spectral
// radius estimation, the Fricke trace calculus on the rank-2 SL2
// character variety, degree-growth algebraic entropy, and p-adic
// translation-length certificates.

#include "fricke/automorphism.hpp"
#include "fricke/error.hpp"
#include "fricke/estimate.hpp"
#include "fricke/growth.hpp"
#include "fricke/intmatrix.hpp"
#include "fricke/polynomial.hpp"
#include "fricke/representation.hpp"
#include "fricke/rng.hpp"
#include "fricke/sl2.hpp"
#include "fricke/trace.hpp"
#include "fricke/trace_map.hpp"
#include "fricke/valuation.hpp"
#include "fricke/word.hpp"
