#include "farsinorm/resource_bundle.h"

#include <fstream>
#include <sstream>

#include "farsinorm/mapping_table.h"

namespace farsinorm {

namespace embedded_data {
struct File {
  const char* name;
  const char* content;
};
// Defined in the build-generated embedded_resources.cc.
extern const File kFiles[];
extern const size_t kFileCount;
}  // namespace embedded_data

const ResourceBundle& ResourceBundle::embedded() {
  static const ResourceBundle bundle = [] {
    ResourceBundle b;
    for (size_t i = 0; i < embedded_data::kFileCount; ++i) {
      b.set(embedded_data::kFiles[i].name, embedded_data::kFiles[i].content);
    }
    return b;
  }();
  return bundle;
}

ResourceBundle ResourceBundle::from_directory(
    const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) {
    throw ResourceError("resource directory not found: " + root.string());
  }
  ResourceBundle bundle = embedded();
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    if (!in) throw ResourceError("cannot read " + entry.path().string());
    std::ostringstream buf;
    buf << in.rdbuf();
    bundle.set(fs::relative(entry.path(), root).generic_string(), buf.str());
  }
  return bundle;
}

const std::string& ResourceBundle::get(std::string_view name) const {
  auto it = files_.find(name);
  if (it == files_.end()) {
    throw ResourceError("missing resource: " + std::string(name));
  }
  return it->second;
}

bool ResourceBundle::has(std::string_view name) const {
  return files_.find(name) != files_.end();
}

void ResourceBundle::set(std::string name, std::string content) {
  files_.insert_or_assign(std::move(name), std::move(content));
}

std::vector<std::string> ResourceBundle::names() const {
  std::vector<std::string> out;
  out.reserve(files_.size());
  for (const auto& [name, _] : files_) out.push_back(name);
  return out;
}

}  // namespace farsinorm
