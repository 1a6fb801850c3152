#pragma once

// Single-datum mutants of the reference data text: every maximal digit run
// outside comments, bumped by one.  Used by the negative-control suites.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace testutil {

struct Mutation {
  std::string description;
  std::string text;
};

inline std::vector<Mutation> numeric_mutations(std::string_view original) {
  std::vector<Mutation> out;
  bool in_comment = false;
  for (size_t i = 0; i < original.size(); ++i) {
    char c = original[i];
    if (c == '\n') {
      in_comment = false;
      continue;
    }
    if (c == '#') in_comment = true;
    if (in_comment || !std::isdigit(static_cast<unsigned char>(c))) continue;
    size_t j = i;
    while (j < original.size() && std::isdigit(static_cast<unsigned char>(original[j]))) ++j;
    std::string_view token = original.substr(i, j - i);
    uint64_t v = 0;
    std::from_chars(token.data(), token.data() + token.size(), v);
    std::string bumped = std::to_string(v + 1);
    std::string text(original);
    text.replace(i, j - i, bumped);
    out.push_back({std::string(token) + "->" + bumped + " at offset " + std::to_string(i),
                   std::move(text)});
    i = j - 1;
  }
  return out;
}

}  // namespace testutil
