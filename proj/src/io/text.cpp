#include "io/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ncm::io {

namespace {

bool label_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '*' && c != '=' && c != ',';
}

}  // namespace

void fail(const std::string& file, size_t line, size_t column, const std::string& rule, const std::string& message) {
  throw Error(ErrorKind::ParseError,
              file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + rule + ": " + message);
}

void fail(const std::string& file, const Entry& e, const std::string& rule, const std::string& message) {
  fail(file, e.line, e.column, rule, message);
}

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_list(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

std::vector<Section> parse_sections(std::string_view text, const std::string& file) {
  std::vector<Section> out;
  size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++line_no;
    pos = end + 1;
    const std::string line = trim(raw);
    const size_t indent = raw.find_first_not_of(" \t") + 1;
    if (line.empty() || line[0] == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (line[0] == '[') {
      if (line.back() != ']') fail(file, line_no, indent, "section", "missing closing bracket");
      const std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
      if (name.empty()) fail(file, line_no, indent, "section", "empty section name");
      out.push_back(Section{name, line_no, {}});
    } else {
      const size_t eq = raw.find('=');
      if (eq == std::string_view::npos) fail(file, line_no, indent, "entry", "expected 'key = value'");
      const std::string key = trim(raw.substr(0, eq));
      if (key.empty()) fail(file, line_no, indent, "entry", "missing key");
      for (char c : key)
        if (!(std::islower(static_cast<unsigned char>(c)) || c == '_'))
          fail(file, line_no, indent, "entry", "key '" + key + "' must be lowercase letters and '_'");
      const std::string_view rest = raw.substr(eq + 1);
      const size_t lead = rest.find_first_not_of(" \t");
      const std::string value = trim(rest);
      if (value.empty()) fail(file, line_no, eq + 2, "entry", "missing value for '" + key + "'");
      if (out.empty()) fail(file, line_no, indent, "entry", "entry before the first section");
      out.back().entries.push_back(Entry{key, value, line_no, eq + 2 + lead});
    }
    if (end == text.size()) break;
  }
  return out;
}

void check_keys(const Section& s, const std::string& file, const std::vector<std::string>& allowed,
                const std::vector<std::string>& single) {
  std::vector<std::string> seen;
  for (const Entry& e : s.entries) {
    if (std::find(allowed.begin(), allowed.end(), e.key) == allowed.end())
      fail(file, e.line, 1, "unknown-key", "'" + e.key + "' is not allowed in [" + s.name + "]");
    if (std::find(single.begin(), single.end(), e.key) != single.end()) {
      if (std::find(seen.begin(), seen.end(), e.key) != seen.end())
        fail(file, e.line, 1, "duplicate-key", "'" + e.key + "' given twice in [" + s.name + "]");
      seen.push_back(e.key);
    }
  }
}

const Entry* find_entry(const Section& s, const std::string& key) {
  for (const Entry& e : s.entries)
    if (e.key == key) return &e;
  return nullptr;
}

la::Scalar parse_rational(const std::string& file, const Entry& e, const std::string& text) {
  try {
    return la::parse_scalar(text);
  } catch (const std::exception&) {
    fail(file, e, "rational", "'" + text + "' is not a rational number p or p/q");
  }
}

size_t parse_count(const std::string& file, const Entry& e, const std::string& text) {
  if (text.empty() || text.size() > 9 || text.find_first_not_of("0123456789") != std::string::npos)
    fail(file, e, "count", "'" + text + "' is not a non-negative integer");
  return std::stoul(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Term> parse_combination(const std::string& file, const Entry& e, std::string_view text) {
  std::vector<Term> out;
  if (trim(text) == "0") return out;
  size_t i = 0;
  const auto col = [&] { return e.column + i; };
  const auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) fail(file, e.line, col(), "combination", "empty expression");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    la::Scalar sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      fail(file, e.line, col(), "combination", "expected '+' or '-'");
    }
    first = false;
    la::Scalar coeff = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      const size_t start = i;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
      coeff = parse_rational(file, Entry{e.key, e.value, e.line, e.column + start}, std::string(text.substr(start, i - start)));
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    const size_t start = i;
    while (i < text.size() && label_char(text[i])) ++i;
    if (start == i) fail(file, e.line, col(), "combination", "expected a label");
    const std::string label(text.substr(start, i - start));
    if (!std::isalpha(static_cast<unsigned char>(label[0])))
      fail(file, e.line, e.column + start, "combination", "label '" + label + "' must start with a letter");
    out.push_back(Term{sign * coeff, label});
  }
  return out;
}

std::string format_combination(const std::vector<Term>& terms) {
  std::string s;
  for (const Term& t : terms) {
    if (la::is_zero(t.coeff)) continue;
    const bool neg = sgn(t.coeff) < 0;
    const la::Scalar mag = neg ? la::Scalar(-t.coeff) : t.coeff;
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    if (mag != 1) s += la::to_string(mag) + " ";
    s += t.label;
  }
  return s.empty() ? "0" : s;
}

}  // namespace ncm::io
