#pragma once

// Umbrella header.
#include "apostol/basis_expansion.hpp"
#include "apostol/big_rational.hpp"
#include "apostol/combinatorics.hpp"
#include "apostol/errors.hpp"
#include "apostol/field_element.hpp"
#include "apostol/identity_verifier.hpp"
#include "apostol/lambda_poly.hpp"
#include "apostol/lambda_rat_func.hpp"
#include "apostol/operator_calculus.hpp"
#include "apostol/report.hpp"
#include "apostol/series.hpp"
#include "apostol/special_polynomials.hpp"
#include "apostol/x_polynomial.hpp"
