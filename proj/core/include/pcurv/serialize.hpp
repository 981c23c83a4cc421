#pragma once

#include <string>
#include <vector>

#include "pcurv/connection.hpp"

namespace pcurv {

/// Canonical text. Terms are listed in descending (Novikov exponent, monomial)
/// order with coefficients in 0..p-1, e.g. `q[1,0]*h^2*l1 + 3`.
std::string to_text(const Poly& f);
std::string to_text(const RatFun& f);
std::string to_text(const PSeries& s);
std::string to_text(const RSeries& s);
/// One row per line, entries separated by " ; ".
std::string to_text(const PMat& M);
std::string to_text(const PSMat& M);
std::string to_text(const RSMat& M);
std::string to_text(const std::vector<RSeries>& v);

/// Parse the canonical forms back. Also accepts '-' and integers outside 0..p-1.
Poly parse_poly(const std::string& s, const PolyRing* R);
RatFun parse_ratfun(const std::string& s, const PolyRing* R);
RSeries parse_rseries(const std::string& s, const PolyRing* R, const NovikovIndex* I);
PSeries parse_pseries(const std::string& s, const PolyRing* R, const NovikovIndex* I);
PMat parse_pmat(const std::string& s, const PolyRing* R);
PSMat parse_psmat(const std::string& s, const PolyRing* R, const NovikovIndex* I);

}  // namespace pcurv
