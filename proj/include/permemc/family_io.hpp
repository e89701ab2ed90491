#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permemc/count_kernels.hpp"
#include "permemc/family.hpp"

namespace permemc {

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed family or matrix text. Line and column are 1-based; column 0
/// means the whole line.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct LoadedFamily {
  Family family;
  std::vector<std::string> warnings;  ///< one per dropped duplicate
};

/// Family text: a header line `n=<int>`, then one permutation per line as
/// n whitespace-separated images. Blank lines and lines starting with '#'
/// are skipped; duplicate permutations are dropped with a warning.
LoadedFamily parse_family(std::string_view text);
LoadedFamily load_family(const std::filesystem::path& path);

/// Canonical text; parse_family(format_family(F)).family == F.
std::string format_family(const Family& family);
void save_family(const std::filesystem::path& path, const Family& family);

/// Matrix text: a header line `N=<int>`, then N rows of N entries in {0, 1}.
ZeroOneMatrix parse_matrix(std::string_view text);
ZeroOneMatrix load_matrix(const std::filesystem::path& path);
std::string format_matrix(const ZeroOneMatrix& matrix);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace permemc
