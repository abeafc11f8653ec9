#ifndef FARSINORM_RESOURCE_BUNDLE_H_
#define FARSINORM_RESOURCE_BUNDLE_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace farsinorm {

/// The set of data files (mapping tables, templates, lexicon) keyed by their
/// path relative to the data root, e.g. "tables/digits.tsv".
///
/// The files under data/ are compiled into the library, so embedded() works
/// without any installed data. from_directory() overlays files found on disk
/// over the embedded copy, which is how tables are edited without a rebuild.
class ResourceBundle {
 public:
  static const ResourceBundle& embedded();

  /// Throws ResourceError if `root` is not a directory.
  static ResourceBundle from_directory(const std::filesystem::path& root);

  /// Throws ResourceError for unknown names.
  const std::string& get(std::string_view name) const;
  bool has(std::string_view name) const;

  void set(std::string name, std::string content);
  std::vector<std::string> names() const;

 private:
  std::map<std::string, std::string, std::less<>> files_;
};

}  // namespace farsinorm

#endif  // FARSINORM_RESOURCE_BUNDLE_H_
