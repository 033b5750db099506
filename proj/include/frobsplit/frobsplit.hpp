#pragma once

// Umbrella header: the full Frobenius-splitting toolkit.
//
//   field/varctx/multipoly/parser  exact arithmetic over F_p and sparse
//                                  multivariate polynomials with a canonical
//                                  term order and print format
//   unipoly/unifactor              dense univariate layer: gcd, squarefree
//                                  decomposition, certified factorization
//   groebner                       Buchberger bases, ideal membership,
//                                  bracket powers, intersections and colons
//   fedder                         F-purity tests, compatible centers, the
//                                  nu invariant and F-pure-threshold ladders
//   divisor                        Q-divisors on the affine line, pullback,
//                                  ramification, base-change transforms
//   fdifferent                     premultiplier extraction along a center
//                                  and the induced boundary divisor
//   fibration                      cubic families, fiberwise splitting
//                                  oracles, moduli divisors, prime scans

#include "frobsplit/digest.hpp"
#include "frobsplit/divisor.hpp"
#include "frobsplit/errors.hpp"
#include "frobsplit/fdifferent.hpp"
#include "frobsplit/fedder.hpp"
#include "frobsplit/fibration.hpp"
#include "frobsplit/field.hpp"
#include "frobsplit/groebner.hpp"
#include "frobsplit/multipoly.hpp"
#include "frobsplit/parser.hpp"
#include "frobsplit/rational.hpp"
#include "frobsplit/unifactor.hpp"
#include "frobsplit/unipoly.hpp"
#include "frobsplit/varctx.hpp"
