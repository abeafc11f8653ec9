#include "farsinorm/mapping_table.h"

#include <algorithm>
#include <charconv>

#include "farsinorm/utf8.h"

namespace farsinorm {

namespace {

std::string_view trim_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool parse_hex(std::string_view s, char32_t& out) {
  if (s.empty() || s.size() > 8) return false;
  uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (ec != std::errc() || ptr != s.data() + s.size() || v > 0x10FFFF) {
    return false;
  }
  out = v;
  return true;
}

}  // namespace

std::vector<std::string_view> resource_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim_cr(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::u32string unescape_field(std::string_view field) {
  std::u32string raw = utf8_decode(field);
  std::u32string out;
  out.reserve(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] != U'\\' || i + 1 == raw.size()) {
      out.push_back(raw[i]);
      continue;
    }
    const char32_t kind = raw[i + 1];
    if (kind == U'\\') {
      out.push_back(U'\\');
      ++i;
    } else if (kind == U't') {
      out.push_back(U'\t');
      ++i;
    } else if (kind == U'u' || kind == U'U') {
      const size_t width = kind == U'u' ? 4 : 8;
      if (i + 2 + width > raw.size()) {
        throw ResourceError("truncated escape in field: " + std::string(field));
      }
      std::string hex;
      for (size_t k = 0; k < width; ++k) {
        hex.push_back(static_cast<char>(raw[i + 2 + k]));
      }
      char32_t cp = 0;
      if (!parse_hex(hex, cp)) {
        throw ResourceError("bad escape in field: " + std::string(field));
      }
      out.push_back(cp);
      i += 1 + width;
    } else {
      out.push_back(raw[i]);
    }
  }
  return out;
}

MappingTable MappingTable::parse(std::string_view text, std::string_view name) {
  MappingTable table;
  for (std::string_view line : resource_lines(text)) {
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ResourceError(std::string(name) + ": missing tab in line: " +
                          std::string(line));
    }
    std::string_view replacement = line.substr(tab + 1);
    // A third column, if any, is a free-form note.
    if (size_t tab2 = replacement.find('\t'); tab2 != std::string_view::npos) {
      replacement = replacement.substr(0, tab2);
    }
    try {
      table.add(unescape_field(line.substr(0, tab)),
                unescape_field(replacement));
    } catch (const ResourceError& e) {
      throw ResourceError(std::string(name) + ": " + e.what());
    }
  }
  return table;
}

void MappingTable::add(std::u32string surface, std::u32string replacement) {
  if (surface.empty()) throw ResourceError("empty surface");
  if (index_.count(surface) != 0) {
    throw ResourceError("duplicate surface: " + utf8_encode(surface));
  }
  const size_t id = entries_.size();
  index_.emplace(surface, id);
  if (surface.size() == 1) {
    single_.emplace(surface[0], id);
  } else {
    multi_first_.insert(surface[0]);
  }
  max_len_ = std::max(max_len_, surface.size());
  entries_.push_back({std::move(surface), std::move(replacement)});
}

std::optional<MappingTable::Match> MappingTable::match_at(
    std::u32string_view text, size_t pos) const {
  if (pos >= text.size()) return std::nullopt;
  const char32_t first = text[pos];
  if (multi_first_.count(first) != 0) {
    const size_t longest = std::min(max_len_, text.size() - pos);
    for (size_t len = longest; len >= 2; --len) {
      auto it = index_.find(std::u32string(text.substr(pos, len)));
      if (it != index_.end()) {
        return Match{len, &entries_[it->second].replacement};
      }
    }
  }
  if (auto it = single_.find(first); it != single_.end()) {
    return Match{1, &entries_[it->second].replacement};
  }
  return std::nullopt;
}

std::optional<std::u32string_view> MappingTable::lookup(
    std::u32string_view surface) const {
  auto it = index_.find(std::u32string(surface));
  if (it == index_.end()) return std::nullopt;
  return std::u32string_view(entries_[it->second].replacement);
}

std::u32string MappingTable::apply(std::u32string_view text) const {
  std::u32string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (auto m = match_at(text, i)) {
      out += *m->replacement;
      i += m->length;
    } else {
      out.push_back(text[i]);
      ++i;
    }
  }
  return out;
}

RangeSet RangeSet::parse(std::string_view text, std::string_view name) {
  RangeSet set;
  for (std::string_view line : resource_lines(text)) {
    const size_t end = line.find_first_of(" \t");
    std::string_view spec = line.substr(0, end);
    const size_t dash = spec.find('-');
    char32_t lo = 0;
    char32_t hi = 0;
    bool ok = false;
    if (dash == std::string_view::npos) {
      ok = parse_hex(spec, lo);
      hi = lo;
    } else {
      ok = parse_hex(spec.substr(0, dash), lo) &&
           parse_hex(spec.substr(dash + 1), hi) && lo <= hi;
    }
    if (!ok) {
      throw ResourceError(std::string(name) + ": bad range: " +
                          std::string(line));
    }
    set.ranges_.emplace_back(lo, hi);
  }
  set.normalize();
  return set;
}

void RangeSet::add(char32_t lo, char32_t hi) {
  ranges_.emplace_back(lo, hi);
  normalize();
}

void RangeSet::normalize() {
  std::sort(ranges_.begin(), ranges_.end());
  std::vector<std::pair<char32_t, char32_t>> merged;
  for (const auto& r : ranges_) {
    if (!merged.empty() && r.first <= merged.back().second + 1) {
      merged.back().second = std::max(merged.back().second, r.second);
    } else {
      merged.push_back(r);
    }
  }
  ranges_ = std::move(merged);
}

bool RangeSet::contains(char32_t c) const {
  auto it = std::upper_bound(
      ranges_.begin(), ranges_.end(), c,
      [](char32_t v, const std::pair<char32_t, char32_t>& r) {
        return v < r.first;
      });
  if (it == ranges_.begin()) return false;
  --it;
  return c <= it->second;
}

}  // namespace farsinorm
