#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "common/error.hpp"
#include "exactla/scalar.hpp"

namespace ncm::io {

struct Entry {
  std::string key;
  std::string value;
  size_t line = 0;
  size_t column = 0;  // of the value
};

struct Section {
  std::string name;
  size_t line = 0;
  std::vector<Entry> entries;
};

// Position-carrying diagnostics: "file:line:col: rule: message".
[[noreturn]] void fail(const std::string& file, size_t line, size_t column, const std::string& rule,
                       const std::string& message);
[[noreturn]] void fail(const std::string& file, const Entry& e, const std::string& rule, const std::string& message);

// Blank lines and lines starting with '#' are skipped; "[name]" opens a
// section; everything else is "key = value".
std::vector<Section> parse_sections(std::string_view text, const std::string& file);

// Key set check: every entry key must appear in `allowed`; keys in `single`
// may appear at most once.
void check_keys(const Section& s, const std::string& file, const std::vector<std::string>& allowed,
                const std::vector<std::string>& single);
const Entry* find_entry(const Section& s, const std::string& key);

std::string trim(std::string_view s);
std::vector<std::string> split_list(std::string_view s, char sep);

la::Scalar parse_rational(const std::string& file, const Entry& e, const std::string& text);
size_t parse_count(const std::string& file, const Entry& e, const std::string& text);

std::string read_file(const std::string& path);

// A signed linear combination "2 b1.a1 - 3/2*x + y", or "0". Labels start
// with a letter and stop at whitespace or one of + - * = ,
struct Term {
  la::Scalar coeff;
  std::string label;
};
std::vector<Term> parse_combination(const std::string& file, const Entry& e, std::string_view text);

// Renders terms as "a - 3/2 b"; "0" when empty.
std::string format_combination(const std::vector<Term>& terms);

}  // namespace ncm::io
