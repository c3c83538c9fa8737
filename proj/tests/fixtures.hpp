#pragma once

#include <string>
#include <vector>

#include "magmaforge/magma.hpp"

namespace fixtures {

using magmaforge::Element;
using magmaforge::FiniteMagma;

inline std::string data(const std::string& name) { return std::string(MF_TEST_DATA) + "/" + name; }

// r, p, s, w, v, l are 0, 1, 2, 3, 3, 4 respectively.
inline const std::vector<Element> rps = {0, 1, 0, 1, 1, 2, 0, 2, 2};
inline const std::vector<Element> french = {0, 1, 0, 3, 1, 1, 2, 1, 0, 2, 2, 3, 3, 1, 3, 3};
inline const std::vector<Element> rpssl = {0, 1, 0, 3, 0, 1, 1, 2, 1, 4, 0, 2, 2, 3, 2,
                                           3, 1, 3, 3, 4, 0, 4, 2, 4, 4};
inline const std::vector<Element> bsigma = {1, 2, 1, 2, 2, 0, 1, 0, 0};
inline const std::vector<Element> rps72 = {
    0, 1, 0, 3, 4, 0, 0,  //
    1, 1, 2, 1, 1, 5, 6,  //
    0, 2, 2, 3, 2, 5, 2,  //
    3, 1, 3, 3, 4, 3, 6,  //
    4, 1, 2, 4, 4, 5, 4,  //
    0, 5, 5, 3, 5, 5, 6,  //
    0, 6, 2, 6, 4, 6, 6};
// f(a, x, y) at a*25 + x*5 + y
inline const std::vector<Element> rps53 = {
    0, 1, 0, 3, 0, 1, 1, 0, 0, 4, 0, 0, 0, 2, 4, 3, 0, 2, 3, 3, 0, 4, 4, 3, 0,
    1, 1, 0, 0, 4, 1, 1, 2, 1, 4, 0, 2, 2, 1, 1, 0, 1, 1, 1, 3, 4, 4, 1, 3, 4,
    0, 0, 0, 2, 4, 0, 2, 2, 1, 1, 0, 2, 2, 3, 2, 2, 1, 3, 3, 2, 4, 1, 2, 2, 2,
    3, 0, 2, 3, 3, 0, 1, 1, 1, 3, 2, 1, 3, 3, 2, 3, 1, 3, 3, 4, 3, 3, 2, 4, 4,
    0, 4, 4, 3, 0, 4, 4, 1, 3, 4, 4, 1, 2, 2, 2, 3, 3, 2, 4, 4, 0, 4, 2, 4, 4};

inline FiniteMagma rps_magma() { return FiniteMagma::make(3, 2, rps); }
inline FiniteMagma french_magma() { return FiniteMagma::make(4, 2, french); }
inline FiniteMagma rpssl_magma() { return FiniteMagma::make(5, 2, rpssl); }
inline FiniteMagma bsigma_magma() { return FiniteMagma::make(3, 2, bsigma); }
inline FiniteMagma rps72_magma() { return FiniteMagma::make(7, 2, rps72); }
inline FiniteMagma rps53_magma() { return FiniteMagma::make(5, 3, rps53); }

}  // namespace fixtures
