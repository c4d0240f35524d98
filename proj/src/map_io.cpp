#include "contig/map_io.hpp"

#include "contig/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace contig {

namespace fs = std::filesystem;

ComplexPtr ComplexCache::load(const fs::path& path) {
    std::error_code ec;
    fs::path key = fs::weakly_canonical(fs::absolute(path), ec);
    if (ec) key = fs::absolute(path).lexically_normal();
    auto it = loaded_.find(key);
    if (it != loaded_.end()) return it->second;
    ComplexPtr k = load_complex(path);
    loaded_.emplace(key, k);
    return k;
}

MapFile parse_map(std::string_view json_text, const fs::path& base_dir, ComplexCache& cache) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("map file is not valid JSON: ") + e.what());
    }
    auto string_field = [&](const char* key) {
        if (!doc.is_object() || !doc.contains(key) || !doc[key].is_string())
            throw InputError(std::string("map file needs a string field \"") + key + "\"");
        return doc[key].get<std::string>();
    };
    fs::path dom_path = string_field("domain");
    fs::path cod_path = string_field("codomain");
    if (dom_path.is_relative()) dom_path = base_dir / dom_path;
    if (cod_path.is_relative()) cod_path = base_dir / cod_path;
    if (!doc.contains("assignment") || !doc["assignment"].is_object())
        throw InputError("map file needs an object field \"assignment\"");

    std::map<std::string, std::string> assignment;
    for (const auto& [from, to] : doc["assignment"].items()) {
        if (!to.is_string()) throw InputError("assignment of '" + from + "' is not a name");
        assignment.emplace(from, to.get<std::string>());
    }
    ComplexPtr dom = cache.load(dom_path);
    ComplexPtr cod = cache.load(cod_path);
    return MapFile{make_map(dom, cod, assignment), dom_path, cod_path};
}

MapFile load_map(const fs::path& path, ComplexCache& cache) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read map file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_map(buf.str(), path.parent_path(), cache);
}

std::string serialize_map(const SimplicialMap& f, const std::string& domain_path,
                          const std::string& codomain_path) {
    nlohmann::json assignment = nlohmann::json::object();
    const auto& dom = *f.domain();
    const auto& cod = *f.codomain();
    for (VertexId v = 0; v < dom.vertex_count(); ++v) assignment[dom.name(v)] = cod.name(f(v));
    nlohmann::json doc = {
        {"domain", domain_path}, {"codomain", codomain_path}, {"assignment", assignment}};
    return doc.dump(2) + "\n";
}

}  // namespace contig
