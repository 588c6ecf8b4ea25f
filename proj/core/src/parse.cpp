#include "degset/parse.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace degset {
namespace {

std::string strip_whitespace(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_positive_int(const std::string& token, const char* what) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw ParseError(std::string("bad ") + what + ": '" + token + "'");
  if (token.size() > 9) throw ParseError(std::string(what) + " too large: '" + token + "'");
  int value = std::stoi(token);
  if (value < 1) throw ParseError(std::string(what) + " must be positive");
  return value;
}

}  // namespace

DegreeSet parse_degree_set(const std::string& text, int limit) {
  std::vector<int> degrees;
  for (const auto& token : split(strip_whitespace(text), ','))
    degrees.push_back(parse_positive_int(token, "degree"));
  return DegreeSet(std::move(degrees), limit);
}

DegreeSequence parse_degree_sequence(const std::string& text, int limit) {
  std::vector<int> values;
  for (const auto& token : split(strip_whitespace(text), ',')) {
    std::size_t caret = token.find('^');
    int value = parse_positive_int(token.substr(0, caret), "degree");
    int mult = 1;
    if (caret != std::string::npos)
      mult = parse_positive_int(token.substr(caret + 1), "multiplicity");
    if (static_cast<std::int64_t>(values.size()) + mult > limit)
      throw LimitExceeded("sequence length exceeds limit " +
                          std::to_string(limit));
    values.insert(values.end(), static_cast<std::size_t>(mult), value);
  }
  return DegreeSequence::from_values(std::move(values), limit);
}

}  // namespace degset
