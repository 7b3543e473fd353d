#pragma once

#include <string>

#include "nilskt/complex_structure.hpp"
#include "nilskt/form.hpp"

namespace nilskt {
namespace models {

/// Real Lie algebra from the compact structure-constant notation, e.g.
/// "(0,0,0,0,13+42,14+23)".
RealLieAlgebra from_label(const std::string& label);

/// H3 x SU(2): de3 = e12, de4 = e56, de5 = e64, de6 = e45.
RealLieAlgebra h3_su2();
/// The standard pairing w_k = e^(2k-1) + i e^(2k) on h3_su2.
ComplexStructure h3_su2_structure();

/// The Ricci-flat pseudo-Kahler data on the Iwasawa algebra:
/// W = e16 + e25 + e34 and J acting on the coframe by
/// e1 -> e2, e3 -> -e4, e5 -> -e6.
struct PseudoKahlerExample {
  ComplexStructure structure;
  Form omega;
};
PseudoKahlerExample pseudo_kahler_example();

}  // namespace models
}  // namespace nilskt
