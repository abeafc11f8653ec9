#ifndef FARSINORM_MAPPING_TABLE_H_
#define FARSINORM_MAPPING_TABLE_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace farsinorm {

/// Raised when a resource file is malformed or violates a table invariant.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable surface -> replacement table with longest-match-first lookup.
///
/// Resource format: UTF-8, one entry per line, two tab-separated columns
/// (surface, replacement). Lines starting with '#' and blank lines are
/// ignored. Both columns understand the escapes \uXXXX, \UXXXXXXXX, \t and
/// \\, which is how invisible or comment-like characters ('#', NBSP, ...)
/// are written. The replacement column may be empty (deletion).
class MappingTable {
 public:
  struct Entry {
    std::u32string surface;
    std::u32string replacement;
  };

  struct Match {
    size_t length;  // code points consumed
    const std::u32string* replacement;
  };

  MappingTable() = default;

  /// Parses a table; `name` only decorates error messages.
  static MappingTable parse(std::string_view text, std::string_view name);

  /// Rejects empty and duplicate surfaces.
  void add(std::u32string surface, std::u32string replacement);

  /// Longest entry whose surface starts at text[pos].
  std::optional<Match> match_at(std::u32string_view text, size_t pos) const;

  std::optional<std::u32string_view> lookup(std::u32string_view surface) const;
  bool contains(std::u32string_view surface) const {
    return lookup(surface).has_value();
  }

  /// Left-to-right rewrite with longest match at each position.
  std::u32string apply(std::u32string_view text) const;

  const std::vector<Entry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  size_t max_surface_length() const { return max_len_; }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::u32string, size_t> index_;
  // Entries whose surface is a single code point, for the common fast path.
  std::unordered_map<char32_t, size_t> single_;
  // First code points of multi-character surfaces.
  std::unordered_set<char32_t> multi_first_;
  size_t max_len_ = 0;
};

/// Sorted, merged set of closed code-point intervals.
///
/// Resource format: one interval per line, "XXXX" or "XXXX-YYYY" in hex,
/// optionally followed by whitespace and a free-form description.
class RangeSet {
 public:
  static RangeSet parse(std::string_view text, std::string_view name);

  void add(char32_t lo, char32_t hi);
  bool contains(char32_t c) const;
  const std::vector<std::pair<char32_t, char32_t>>& ranges() const {
    return ranges_;
  }

 private:
  void normalize();
  std::vector<std::pair<char32_t, char32_t>> ranges_;
};

/// Splits a resource file into non-comment, non-blank lines.
std::vector<std::string_view> resource_lines(std::string_view text);

/// Expands \u, \U, \t and \\ escapes; throws ResourceError on bad escapes.
std::u32string unescape_field(std::string_view field);

}  // namespace farsinorm

#endif  // FARSINORM_MAPPING_TABLE_H_
