#pragma once

// Map files: {"domain": <path>, "codomain": <path>, "assignment": {name: name}}.
// Relative complex paths resolve against the directory of the map file.

#include "contig/complex.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace contig {

/// Loads each complex file once, so maps naming the same file share one
/// ComplexPtr (and compare as same_complex without a structural check).
class ComplexCache {
public:
    ComplexPtr load(const std::filesystem::path& path);
    /// Every file loaded so far, keyed by normalized absolute path.
    const std::map<std::filesystem::path, ComplexPtr>& loaded() const { return loaded_; }

private:
    std::map<std::filesystem::path, ComplexPtr> loaded_;
};

struct MapFile {
    SimplicialMap map;
    std::filesystem::path domain_path;
    std::filesystem::path codomain_path;
};

MapFile parse_map(std::string_view json_text, const std::filesystem::path& base_dir,
                  ComplexCache& cache);
MapFile load_map(const std::filesystem::path& path, ComplexCache& cache);

/// JSON text with sorted keys and a trailing newline.
std::string serialize_map(const SimplicialMap& f, const std::string& domain_path,
                          const std::string& codomain_path);

}  // namespace contig
