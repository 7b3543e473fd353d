#include "nilskt/parse.hpp"

#include <cctype>

namespace nilskt {

namespace {

void add_term(TermMap& out, Mask mo, const Scalar& c, int sign) {
  Scalar v = sign < 0 ? -c : c;
  auto [it, fresh] = out.try_emplace(mo, v);
  if (!fresh) it->second += v;
  if (it->second.is_zero(0.0)) out.erase(mo);
}

}  // namespace

TermMap parse_two_form(const std::string& text) {
  TermMap out;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size()) return out;
  bool first = true;
  while (pos < text.size()) {
    skip_ws();
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw Error("parse_two_form: expected '+' or '-' in \"" + text + "\"");
    }
    first = false;
    skip_ws();
    // Optional rational coefficient followed by '*'.
    Scalar coeff(1);
    size_t mark = pos;
    std::string num;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
      num += text[pos++];
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      coeff = Scalar::rational(num);
      ++pos;
      skip_ws();
      mark = pos;
      num.clear();
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        num += text[pos++];
    } else {
      pos = mark;
      num.clear();
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        num += text[pos++];
    }
    if (num == "0" && out.empty() && coeff == Scalar(1)) {
      skip_ws();
      if (pos >= text.size()) return out;  // the zero form
      throw Error("parse_two_form: unexpected text after 0");
    }
    if (num.size() != 2) throw Error("parse_two_form: expected an index pair in \"" + text + "\"");
    int i = num[0] - '1';
    int j = num[1] - '1';
    if (i < 0 || j < 0 || i == j) throw Error("parse_two_form: bad indices " + num);
    Mask mo = (1u << i) | (1u << j);
    if (i > j) sign = -sign;
    add_term(out, mo, coeff, sign);
    skip_ws();
  }
  return out;
}

std::vector<TermMap> parse_structure_list(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') body = body.substr(1);
  if (!body.empty() && body.back() == ')') body.pop_back();
  std::vector<TermMap> out;
  size_t start = 0;
  while (start <= body.size()) {
    size_t comma = body.find(',', start);
    std::string item =
        comma == std::string::npos ? body.substr(start) : body.substr(start, comma - start);
    out.push_back(parse_two_form(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace nilskt
