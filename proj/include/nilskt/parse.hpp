#pragma once

#include <string>

#include "nilskt/form.hpp"

namespace nilskt {

/// Parse a 2-form in compact index notation over generators e1..e9:
/// "13+42", "12-2*34", "0", "1/2*12". Coefficients are exact rationals;
/// each index pair is a wedge monomial e_i ^ e_j.
TermMap parse_two_form(const std::string& text);

/// "(0,0,0,0,13+42,14+23)" -> list of per-generator term maps.
std::vector<TermMap> parse_structure_list(const std::string& text);

}  // namespace nilskt
