#pragma once

#include "qsym/element.hpp"

#include <vector>

namespace qsym {

/// Ordinary (quasi-shuffle) product. Result in the M basis.
Element mul(const Element& a, const Element& b);

/// The weakly nonassociative product a .k. b, defined on the M basis by
///   M_A .k. 1      = M_A(k)
///   M_A .k. M_(m)B = M_A(k,m)B + M_A(k+m)B.
/// Two Mt operands use the closed Mt rule and return Mt; two F operands with
/// k = 1 use the F rule and return F. Everything else is evaluated in M.
/// Throws std::invalid_argument for k < 1.
Element bullet(int k, const Element& a, const Element& b);

/// Mirror product a ^k^ b:
///   1 ^k^ M_B        = M_(k)B
///   M_A(m) ^k^ M_B   = M_A(m,k)B + M_A(m+k)B.
Element hat_bullet(int k, const Element& a, const Element& b);

/// Mt_lhs .k. Mt_rhs = Mt_A(m,k)B - Mt_A(m+k)B where lhs = A(m), rhs = B.
/// Throws on an empty lhs; the unit case is 1 .k. Mt_B = Mt_(k)B.
Element bullet_tilde(int k, const Composition& lhs, const Composition& rhs);

/// F_A . F_(m)B = F_A(m+1)B for the first product; F_A . 1 = F_A(1).
Element bullet_F(const Composition& lhs, const Composition& rhs);

/// F_(m+1,1^n) built as L^m R^n (1 . 1) with L(b) = 1 . b and R(b) = b . 1. M basis.
Element elementary_F(int m, int n);

/// Elementary F factors of c in left-to-right order. Throws on the empty composition.
std::vector<Element> factorize_F(const Composition& c);

/// a .k. b computed only through the first product, by repeated use of
///   a .(j+1). b = a .1. (1 .j. b) - (a .1. 1) .j. b.
Element bullet_by_first_product(int k, const Element& a, const Element& b);

} // namespace qsym
