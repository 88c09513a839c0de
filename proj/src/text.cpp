#include "hlvir/text.hpp"

#include <cctype>

#include "hlvir/errors.hpp"

namespace hlvir::text {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<SignedTerm> split_signed_terms(std::string_view s) {
  std::vector<SignedTerm> out;
  s = trim(s);
  int depth = 0;
  bool negative = false;
  std::string current;
  char last_significant = '\0';
  auto flush = [&] {
    auto body = std::string(trim(current));
    if (body.empty()) throw InvalidArgument("empty term in '" + std::string(s) + "'");
    out.push_back({negative, std::move(body)});
    current.clear();
  };
  bool started = false;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    const bool operand_sign = last_significant == '^' || last_significant == '*' ||
                              last_significant == '/' || last_significant == '(';
    if (depth == 0 && (c == '+' || c == '-') && !operand_sign) {
      if (started) {
        flush();
        negative = (c == '-');
      } else {
        negative = negative != (c == '-');
      }
      last_significant = c;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) {
      started = true;
      last_significant = c;
    }
    current.push_back(c);
  }
  if (depth != 0) throw InvalidArgument("unbalanced parentheses in '" + std::string(s) + "'");
  flush();
  return out;
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string current;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && c == sep) {
      out.emplace_back(trim(current));
      current.clear();
      continue;
    }
    current.push_back(c);
  }
  out.emplace_back(trim(current));
  return out;
}

std::string_view strip_parens(std::string_view s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i + 1 < s.size()) return s;  // the first '(' closes early
  }
  return trim(s.substr(1, s.size() - 2));
}

std::string parenthesize_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (depth == 0 && i > 0 && s[i - 1] == ' ' && (s[i] == '+' || s[i] == '-') && s[i + 1] == ' ') {
      return "(" + s + ")";
    }
  }
  return s;
}

void append_term(std::string& out, const std::string& coeff_text, const std::string& suffix) {
  std::string c = parenthesize_sum(coeff_text);
  bool negative = false;
  if (!c.empty() && c.front() == '-') {
    negative = true;
    c.erase(0, 1);
  }
  std::string term = suffix.empty() ? c : c + "*" + suffix;
  if (out.empty()) {
    out = negative ? "-" + term : term;
  } else {
    out += negative ? " - " : " + ";
    out += term;
  }
}

}  // namespace hlvir::text
