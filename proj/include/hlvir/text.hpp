#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hlvir::text {

struct SignedTerm {
  bool negative = false;
  std::string body;  // trimmed, without the leading sign
};

std::string_view trim(std::string_view s);

/// Splits "a - b + (c + d)*e" into signed terms at depth-0 '+' and '-'.
/// A sign directly after '^', '*' or '/' belongs to the operand, not a split.
std::vector<SignedTerm> split_signed_terms(std::string_view s);

/// Splits at depth-0 occurrences of `sep`.
std::vector<std::string> split_top_level(std::string_view s, char sep);

/// Removes one pair of enclosing parentheses if they wrap the whole string.
std::string_view strip_parens(std::string_view s);

/// Wraps `s` in parentheses when it is a sum (contains a depth-0 " + " or " - ").
std::string parenthesize_sum(const std::string& s);

/// Appends `coeff_text` followed by "*" + `suffix` (or just the coefficient
/// when the suffix is empty) to a running sum, pulling a leading minus of an
/// atomic coefficient out as " - ".
void append_term(std::string& out, const std::string& coeff_text, const std::string& suffix);

}  // namespace hlvir::text
