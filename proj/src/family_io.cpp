#include "permemc/family_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace permemc {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::invalid_argument("line " + std::to_string(line) + (column > 0 ? ", column " + std::to_string(column) : "") +
                            ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view text, int& value) {
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

// Numbered lines with comments and blanks removed.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t number = 0;
  while (!text.empty()) {
    const std::size_t cut = text.find('\n');
    std::string_view raw = text.substr(0, cut);
    text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + 1);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::string_view body = trim(raw);
    if (body.empty() || body.front() == '#') continue;
    out.emplace_back(number, raw);
  }
  return out;
}

// Parses "<key>=<int>" with optional spaces around '='.
int parse_header(std::size_t line, std::string_view raw, char key, int max_value) {
  std::string_view body = trim(raw);
  if (body.empty() || body.front() != key) {
    throw ParseError(line, 0, std::string("expected header '") + key + "=<int>'");
  }
  body = trim(body.substr(1));
  if (body.empty() || body.front() != '=') throw ParseError(line, 0, std::string("expected '=' after '") + key + "'");
  body = trim(body.substr(1));
  int value = 0;
  if (!parse_int(body, value) || value < 1 || value > max_value) {
    throw ParseError(line, 0, "header value must be an integer in [1, " + std::to_string(max_value) + "]");
  }
  return value;
}

}  // namespace

LoadedFamily parse_family(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, 0, "missing header 'n=<int>'");
  const int n = parse_header(lines.front().first, lines.front().second, 'n', kMaxDegree);

  LoadedFamily out;
  std::vector<Permutation> members;
  std::set<Permutation> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [number, raw] = lines[k];
    const auto tokens = tokenize(raw);
    if (tokens.size() != static_cast<std::size_t>(n)) {
      throw ParseError(number, 0, "expected " + std::to_string(n) + " images, found " + std::to_string(tokens.size()));
    }
    std::vector<int> images;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const Token& t : tokens) {
      int value = 0;
      if (!parse_int(t.text, value) || value < 1 || value > n) {
        throw ParseError(number, t.column, "image '" + std::string(t.text) + "' is not an integer in [1, " + std::to_string(n) + "]");
      }
      if (used[static_cast<std::size_t>(value)]) {
        throw ParseError(number, t.column, "image " + std::to_string(value) + " repeats; not a permutation");
      }
      used[static_cast<std::size_t>(value)] = true;
      images.push_back(value);
    }
    Permutation sigma(images);
    if (!seen.insert(sigma).second) {
      out.warnings.push_back("line " + std::to_string(number) + ": duplicate permutation " + sigma.to_string() + " ignored");
      continue;
    }
    members.push_back(sigma);
  }
  out.family = Family(n, std::move(members));
  return out;
}

LoadedFamily load_family(const std::filesystem::path& path) { return parse_family(read_text(path)); }

std::string format_family(const Family& family) {
  std::string out = "n=" + std::to_string(family.degree()) + "\n";
  for (const auto& sigma : family) {
    out += sigma.to_string();
    out += '\n';
  }
  return out;
}

void save_family(const std::filesystem::path& path, const Family& family) { write_text(path, format_family(family)); }

ZeroOneMatrix parse_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, 0, "missing header 'N=<int>'");
  const int size = parse_header(lines.front().first, lines.front().second, 'N', kRyserCap);
  if (lines.size() != static_cast<std::size_t>(size) + 1) {
    const std::size_t at = lines.size() > static_cast<std::size_t>(size) + 1 ? lines[static_cast<std::size_t>(size) + 1].first
                                                                            : lines.back().first;
    throw ParseError(at, 0, "expected " + std::to_string(size) + " matrix rows, found " + std::to_string(lines.size() - 1));
  }
  ZeroOneMatrix matrix(size);
  for (int row = 0; row < size; ++row) {
    const auto& [number, raw] = lines[static_cast<std::size_t>(row) + 1];
    const auto tokens = tokenize(raw);
    if (tokens.size() != static_cast<std::size_t>(size)) {
      throw ParseError(number, 0, "expected " + std::to_string(size) + " entries, found " + std::to_string(tokens.size()));
    }
    for (int col = 0; col < size; ++col) {
      const Token& t = tokens[static_cast<std::size_t>(col)];
      if (t.text != "0" && t.text != "1") throw ParseError(number, t.column, "entry '" + std::string(t.text) + "' is not 0 or 1");
      matrix.set(row, col, t.text == "1" ? 1 : 0);
    }
  }
  return matrix;
}

ZeroOneMatrix load_matrix(const std::filesystem::path& path) { return parse_matrix(read_text(path)); }

std::string format_matrix(const ZeroOneMatrix& matrix) {
  std::string out = "N=" + std::to_string(matrix.size()) + "\n";
  for (int row = 0; row < matrix.size(); ++row) {
    for (int col = 0; col < matrix.size(); ++col) {
      if (col > 0) out += ' ';
      out += matrix.at(row, col) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buffer.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace permemc
