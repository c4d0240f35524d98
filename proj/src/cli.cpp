#include "contig/cli.hpp"

#include "contig/collapse.hpp"
#include "contig/constructions.hpp"
#include "contig/contiguity.hpp"
#include "contig/distance.hpp"
#include "contig/error.hpp"
#include "contig/map_io.hpp"
#include "contig/oracle.hpp"
#include "contig/set_cover.hpp"
#include "contig/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace contig {

std::string emit_dot(const SimplicialComplex& k) {
    std::ostringstream out;
    auto quoted = [&](VertexId v) {
        std::string s = "\"";
        for (char c : k.name(v)) {
            if (c == '"' || c == '\\') s += '\\';
            s += c;
        }
        return s + "\"";
    };
    out << "graph K {\n";
    for (VertexId v = 0; v < k.vertex_count(); ++v) out << "  " << quoted(v) << ";\n";
    std::set<std::pair<VertexId, VertexId>> edges;
    for (const auto& f : k.facets()) {
        auto vs = f.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) edges.emplace(vs[i], vs[j]);
    }
    for (const auto& [a, b] : edges) out << "  " << quoted(a) << " -- " << quoted(b) << ";\n";
    for (const auto& f : k.facets()) {
        if (f.dimension() < 2) continue;
        out << "  // facet:";
        for (VertexId v : f.vertices()) out << ' ' << k.name(v);
        out << "\n";
    }
    out << "}\n";
    return out.str();
}

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string read_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < length; ++i)
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return out.str();
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
}

/// Path of `target` as seen from the directory holding `from_file`.
std::string relative_to(const fs::path& target, const fs::path& from_file) {
    fs::path base = from_file.parent_path();
    if (base.empty()) base = ".";
    return fs::relative(fs::absolute(target), fs::absolute(base)).generic_string();
}

std::vector<std::size_t> indices(const FacetMask& m) { return mask_indices(m); }

json assignment_json(const SimplicialMap& f) {
    json a = json::object();
    for (VertexId v = 0; v < f.domain()->vertex_count(); ++v)
        a[f.domain()->name(v)] = f.codomain()->name(f(v));
    return a;
}

json certificate_json(const ContiguityCertificate& c) {
    json chain = json::array();
    for (const auto& link : c.chain) chain.push_back(assignment_json(link));
    return {{"verdict", to_string(c.verdict)}, {"chain", chain}, {"explored", c.explored}};
}

std::string mask_text(const FacetMask& m) {
    std::string s = "{";
    for (auto i : indices(m)) s += (s.size() > 1 ? "," : "") + std::to_string(i);
    return s + "}";
}

struct Globals {
    bool json_output = false;
    std::size_t cap = 1'000'000;
    unsigned threads = 1;
    bool deterministic = false;
    bool oracle = false;
};

/// State of one invocation: loaded inputs, the result payload, and output.
class Session {
public:
    Session(const Globals& globals, std::vector<std::string> args, std::ostream& out)
        : globals_(globals), args_(std::move(args)), out_(out),
          start_(std::chrono::steady_clock::now()) {}

    std::ostream& text() { return globals_.json_output ? discard_ : out_; }
    json& result() { return result_; }
    void set_exact(bool exact) { exact_ = exact; }

    ComplexPtr complex(const std::string& path) {
        record(path);
        return cache_.load(path);
    }

    MapFile map(const std::string& path) {
        record(path);
        MapFile m = load_map(path, cache_);
        record(m.domain_path.generic_string());
        record(m.codomain_path.generic_string());
        return m;
    }

    DistanceOptions distance_options() const {
        DistanceOptions o;
        o.class_options.state_cap = globals_.cap;
        o.threads = std::max(1U, globals_.threads);
        return o;
    }

    ClassOptions class_options() const { return distance_options().class_options; }
    const Globals& globals() const { return globals_; }

    int finish(const std::string& command, int code) {
        if (!globals_.json_output) return code;
        json report = {{"schema", 1},
                       {"command", command},
                       {"args", args_},
                       {"inputs", inputs_},
                       {"result", result_},
                       {"exit_code", code}};
        if (exact_) report["exact"] = *exact_;
        if (!globals_.deterministic)
            report["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                       std::chrono::steady_clock::now() - start_)
                                       .count();
        out_ << report.dump(2) << "\n";
        return code;
    }

private:
    void record(const std::string& path) {
        for (const auto& in : inputs_)
            if (in["path"] == path) return;
        inputs_.push_back({{"path", path}, {"sha256", sha256_hex(read_bytes(path))}});
    }

    Globals globals_;
    std::vector<std::string> args_;
    std::ostream& out_;
    std::ostringstream discard_;
    std::chrono::steady_clock::time_point start_;
    ComplexCache cache_;
    json inputs_ = json::array();
    json result_ = json::object();
    std::optional<bool> exact_;
};

json distance_json(const DistanceResult& r, const SimplicialComplex& domain) {
    json pieces = json::array();
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
        json facets = json::array();
        for (auto f : indices(r.witness[i])) {
            json names = json::array();
            for (VertexId v : domain.facet(f).vertices()) names.push_back(domain.name(v));
            facets.push_back(names);
        }
        json piece = {{"mask", indices(r.witness[i])}, {"facets", facets}};
        if (i < r.certificates.size()) piece["certificate"] = certificate_json(r.certificates[i]);
        pieces.push_back(piece);
    }
    json undecided = json::array();
    for (const auto& m : r.undecided) undecided.push_back(indices(m));
    return {{"value", r.value},
            {"exact", r.exact},
            {"lower_bound", r.lower_bound},
            {"witness", pieces},
            {"undecided", undecided}};
}

/// Shared tail of distance, scat, tc and scat-map.
int report_distance(Session& s, const std::string& label, const DistanceResult& r,
                    const SimplicialComplex& domain, const std::string& witness_path) {
    json payload = distance_json(r, domain);
    if (!witness_path.empty()) write_file(witness_path, payload.dump(2) + "\n");
    json summary = payload;
    summary.erase("witness");
    json masks = json::array();
    for (const auto& m : r.witness) masks.push_back(indices(m));
    summary["witness_masks"] = masks;
    s.result() = summary;
    s.set_exact(r.exact);

    if (r.exact) {
        s.text() << label << " = " << r.value << " (exact)\n";
    } else {
        s.text() << label << " = " << r.value << " (upper bound; lower bound " << r.lower_bound
                 << ")\n";
    }
    s.text() << "witness:";
    for (const auto& m : r.witness) s.text() << ' ' << mask_text(m);
    s.text() << "\n";
    if (!r.undecided.empty()) {
        s.text() << "undecided masks:";
        for (const auto& m : r.undecided) s.text() << ' ' << mask_text(m);
        s.text() << "\n";
    }
    return r.exact ? kExitOk : kExitUnknown;
}

/// Runs the brute-force distance next to an engine result. Returns false on
/// a disagreement with an exact engine value.
bool oracle_distance(Session& s, const SimplicialMap& phi, const SimplicialMap& psi,
                     const DistanceResult& r) {
    try {
        int brute = oracle::exhaustive_distance(phi, psi);
        bool agrees = !r.exact || brute == r.value;
        s.result()["oracle"] = {{"value", brute}, {"agrees", agrees}};
        s.text() << "oracle: " << brute << (agrees ? " (agrees)" : " (DISAGREES)") << "\n";
        return agrees;
    } catch (const CapExceeded& e) {
        s.result()["oracle"] = {{"skipped", e.what()}};
        s.text() << "oracle: skipped (" << e.what() << ")\n";
        return true;
    }
}

std::vector<ComplexPtr> load_corpus(Session& s, const std::string& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".cplx")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<ComplexPtr> out;
    for (const auto& f : files) {
        ComplexPtr k = s.complex(f.generic_string());
        if (is_connected(*k)) out.push_back(k);
    }
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Contiguity distance, simplicial LS category and discrete TC of finite complexes"};
    app.name("contig");
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json_output, "Print a JSON report instead of text");
    app.add_option("--cap", g.cap, "State cap for contiguity-class searches")->check(CLI::PositiveNumber);
    app.add_option("--threads", g.threads, "Worker threads for the distance search")
        ->check(CLI::Range(1U, 1024U));
    app.add_flag("--deterministic", g.deterministic, "Omit timings so reports are byte-identical");
    app.add_flag("--oracle", g.oracle, "Cross-check with the brute-force oracle");

    std::string input, input2, out_path, map_out, witness, certificate, with_map;
    bool dot = false, trace = false, with_maps = false, no_oracle = false;
    std::size_t complexes = 200, pairs = 500;
    std::uint64_t seed = VerifyOptions{}.seed;
    std::string corpus;

    auto* info = app.add_subcommand("info", "Summary of a complex");
    info->add_option("complex", input)->required();
    info->add_flag("--dot", dot, "Emit the 1-skeleton as Graphviz DOT");

    auto* core_cmd = app.add_subcommand("core", "Core of a complex by strong collapses");
    core_cmd->add_option("complex", input)->required();
    core_cmd->add_option("--out", out_path, "Write the core here");
    core_cmd->add_option("--map-out", map_out, "Write the retraction map here (needs --out)");
    core_cmd->add_flag("--trace", trace, "List the eliminated vertices");

    auto* coll = app.add_subcommand("collapsible", "Whether a complex is strongly collapsible");
    coll->add_option("complex", input)->required();

    auto* sd_cmd = app.add_subcommand("sd", "Barycentric subdivision");
    sd_cmd->add_option("complex", input)->required();
    sd_cmd->add_option("--out", out_path, "Write the subdivision here");
    sd_cmd->add_option("--with-maps", with_map, "Also subdivide this map (its domain is the complex)");

    auto* product = app.add_subcommand("product", "Categorical product");
    product->add_option("left", input)->required();
    product->add_option("right", input2)->required();
    product->add_option("--out", out_path, "Write the product here");
    product->add_flag("--with-maps", with_maps, "Also write the projections next to --out");

    auto* contiguous = app.add_subcommand("contiguous", "One-step contiguity of two maps");
    contiguous->add_option("f", input)->required();
    contiguous->add_option("g", input2)->required();

    auto* same = app.add_subcommand("same-class", "Contiguity class membership");
    same->add_option("f", input)->required();
    same->add_option("g", input2)->required();
    same->add_option("--certificate", certificate, "Write the chain or refutation as JSON");

    auto* distance = app.add_subcommand("distance", "Contiguity distance SD(f, g)");
    distance->add_option("f", input)->required();
    distance->add_option("g", input2)->required();
    distance->add_option("--witness", witness, "Write the witness cover as JSON");

    auto* scat_cmd = app.add_subcommand("scat", "Simplicial LS category");
    scat_cmd->add_option("complex", input)->required();
    scat_cmd->add_option("--witness", witness, "Write the witness cover as JSON");

    auto* tc_cmd = app.add_subcommand("tc", "Discrete topological complexity");
    tc_cmd->add_option("complex", input)->required();
    tc_cmd->add_option("--witness", witness, "Write the witness cover as JSON");

    auto* scat_map_cmd = app.add_subcommand("scat-map", "LS category of a map");
    scat_map_cmd->add_option("map", input)->required();
    scat_map_cmd->add_option("--witness", witness, "Write the witness cover as JSON");

    auto* verify = app.add_subcommand("verify", "Randomized invariant suite");
    verify->add_option("corpus", corpus, "Directory of .cplx files checked as well");
    verify->add_option("--complexes", complexes, "Random complexes");
    verify->add_option("--pairs", pairs, "Random map pairs");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_flag("--no-oracle", no_oracle, "Skip oracle agreement checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Session s(g, args, out);
    try {
        if (command == "info") {
            ComplexPtr k = s.complex(input);
            if (dot) {
                std::string d = emit_dot(*k);
                s.result()["dot"] = d;
                s.text() << d;
                return s.finish(command, kExitOk);
            }
            CoreResult c = core(k);
            json sizes = json::array();
            for (const auto& f : k->facets()) sizes.push_back(f.size());
            s.result() = {{"vertices", k->vertex_count()},
                          {"facets", k->facet_count()},
                          {"dimension", k->dimension()},
                          {"connected", is_connected(*k)},
                          {"strongly_collapsible", c.core->vertex_count() == 1},
                          {"core_vertices", c.core->vertex_count()},
                          {"facet_sizes", sizes}};
            s.text() << "vertices: " << k->vertex_count() << "\n"
                     << "facets: " << k->facet_count() << "\n"
                     << "dimension: " << k->dimension() << "\n"
                     << "connected: " << (is_connected(*k) ? "yes" : "no") << "\n"
                     << "strongly collapsible: " << (c.core->vertex_count() == 1 ? "yes" : "no") << "\n"
                     << "core vertices: " << c.core->vertex_count() << "\n";
            return s.finish(command, kExitOk);
        }

        if (command == "core") {
            ComplexPtr k = s.complex(input);
            CoreResult c = core(k);
            const std::string text = serialize_complex(*c.core);
            json trace_json = json::array();
            for (const auto& e : c.elimination_trace)
                trace_json.push_back({k->name(e.dominated), k->name(e.dominator)});
            s.result() = {{"vertices", c.core->vertex_count()},
                          {"facets", c.core->facet_count()},
                          {"removed", c.elimination_trace.size()},
                          {"unchanged", c.elimination_trace.empty()},
                          {"core", text},
                          {"trace", trace_json}};
            if (!map_out.empty() && out_path.empty()) throw InputError("--map-out needs --out");
            if (!out_path.empty()) {
                write_file(out_path, text);
                s.text() << "core: " << c.core->vertex_count() << " vertices, " << c.core->facet_count()
                         << " facets (" << c.elimination_trace.size() << " removed) -> " << out_path
                         << "\n";
            } else {
                s.text() << text;
            }
            if (!map_out.empty())
                write_file(map_out, serialize_map(c.retraction, relative_to(input, map_out),
                                                  relative_to(out_path, map_out)));
            if (trace)
                for (const auto& e : c.elimination_trace)
                    s.text() << "# " << k->name(e.dominated) << " -> " << k->name(e.dominator) << "\n";
            return s.finish(command, kExitOk);
        }

        if (command == "collapsible") {
            ComplexPtr k = s.complex(input);
            bool yes = is_strongly_collapsible(k);
            s.result() = {{"strongly_collapsible", yes}};
            s.text() << (yes ? "strongly collapsible" : "not strongly collapsible") << "\n";
            return s.finish(command, yes ? kExitOk : kExitNo);
        }

        if (command == "sd") {
            ComplexPtr k = s.complex(input);
            Subdivision sk = barycentric_subdivision(k);
            const std::string text = serialize_complex(*sk.complex);
            s.result() = {{"vertices", sk.complex->vertex_count()},
                          {"facets", sk.complex->facet_count()}};
            if (out_path.empty()) {
                if (!with_map.empty()) throw InputError("--with-maps needs --out");
                s.text() << text;
                s.result()["complex"] = text;
                return s.finish(command, kExitOk);
            }
            write_file(out_path, text);
            s.text() << "sd: " << sk.complex->vertex_count() << " vertices, "
                     << sk.complex->facet_count() << " facets -> " << out_path << "\n";
            if (!with_map.empty()) {
                MapFile m = s.map(with_map);
                if (!same_complex(m.map.domain(), k))
                    throw InputError("the map's domain is not " + input);
                fs::path base = fs::path(out_path);
                fs::path map_path = base.parent_path() / (base.stem().string() + ".map");
                fs::path cod_path = out_path;
                Subdivision sl = sk;
                if (!same_complex(m.map.codomain(), k)) {
                    sl = barycentric_subdivision(m.map.codomain());
                    cod_path = base.parent_path() / (base.stem().string() + ".codomain.cplx");
                    write_file(cod_path, serialize_complex(*sl.complex));
                }
                SimplicialMap sf = sd_map(m.map, sk, sl);
                write_file(map_path, serialize_map(sf, relative_to(out_path, map_path),
                                                   relative_to(cod_path, map_path)));
                s.result()["map"] = map_path.generic_string();
                s.text() << "sd map -> " << map_path.generic_string() << "\n";
            }
            return s.finish(command, kExitOk);
        }

        if (command == "product") {
            ComplexPtr a = s.complex(input);
            ComplexPtr b = s.complex(input2);
            Product p = categorical_product(a, b);
            const std::string text = serialize_complex(*p.complex);
            s.result() = {{"vertices", p.complex->vertex_count()}, {"facets", p.complex->facet_count()}};
            if (out_path.empty()) {
                if (with_maps) throw InputError("--with-maps needs --out");
                s.text() << text;
                s.result()["complex"] = text;
                return s.finish(command, kExitOk);
            }
            write_file(out_path, text);
            s.text() << "product: " << p.complex->vertex_count() << " vertices, "
                     << p.complex->facet_count() << " facets -> " << out_path << "\n";
            if (with_maps) {
                fs::path base = fs::path(out_path);
                for (int slot : {1, 2}) {
                    fs::path mp = base.parent_path() / (base.stem().string() + ".p" + std::to_string(slot) + ".map");
                    const SimplicialMap& proj = slot == 1 ? p.p1 : p.p2;
                    write_file(mp, serialize_map(proj, relative_to(out_path, mp),
                                                 relative_to(slot == 1 ? input : input2, mp)));
                    s.result()["p" + std::to_string(slot)] = mp.generic_string();
                    s.text() << "p" << slot << " -> " << mp.generic_string() << "\n";
                }
            }
            return s.finish(command, kExitOk);
        }

        if (command == "contiguous") {
            MapFile f = s.map(input);
            MapFile h = s.map(input2);
            bool yes = is_contiguous(f.map, h.map);
            s.result() = {{"contiguous", yes}};
            s.text() << (yes ? "contiguous" : "not contiguous") << "\n";
            return s.finish(command, yes ? kExitOk : kExitNo);
        }

        if (command == "same-class") {
            MapFile f = s.map(input);
            MapFile h = s.map(input2);
            if (!same_complex(f.map.domain(), h.map.domain()) ||
                !same_complex(f.map.codomain(), h.map.codomain()))
                throw InputError("maps must share domain and codomain");
            ContiguityCertificate c = same_contiguity_class(f.map, h.map, s.class_options());
            if (!certificate.empty()) write_file(certificate, certificate_json(c).dump(2) + "\n");
            s.result() = {{"verdict", to_string(c.verdict)},
                          {"chain_length", c.chain.size()},
                          {"explored", c.explored}};
            switch (c.verdict) {
                case Verdict::same:
                    s.text() << "same contiguity class (chain of " << c.chain.size() << " maps)\n";
                    break;
                case Verdict::different:
                    s.text() << "different contiguity classes (component of " << c.explored
                             << " reduced maps exhausted)\n";
                    break;
                case Verdict::unknown:
                    s.text() << "unknown (state cap " << g.cap << " reached)\n";
                    break;
            }
            int code = c.verdict == Verdict::same ? kExitOk
                       : c.verdict == Verdict::different ? kExitNo
                                                         : kExitUnknown;
            if (g.oracle) {
                try {
                    bool brute = oracle::exhaustive_same_class(f.map, h.map);
                    bool agrees = c.verdict == Verdict::unknown || brute == (c.verdict == Verdict::same);
                    s.result()["oracle"] = {{"same", brute}, {"agrees", agrees}};
                    s.text() << "oracle: " << (brute ? "same" : "different")
                             << (agrees ? " (agrees)" : " (DISAGREES)") << "\n";
                    if (!agrees) code = kExitUnknown;
                } catch (const CapExceeded& e) {
                    s.result()["oracle"] = {{"skipped", e.what()}};
                    s.text() << "oracle: skipped (" << e.what() << ")\n";
                }
            }
            return s.finish(command, code);
        }

        if (command == "distance" || command == "scat-map") {
            MapFile f = s.map(input);
            SimplicialMap other = command == "distance"
                                      ? s.map(input2).map
                                      : constant_map(f.map.domain(), f.map.codomain(), 0);
            if (!same_complex(f.map.domain(), other.domain()) ||
                !same_complex(f.map.codomain(), other.codomain()))
                throw InputError("maps must share domain and codomain");
            DistanceResult r = contiguity_distance(f.map, other, s.distance_options());
            int code = report_distance(s, command == "distance" ? "SD" : "scat(map)", r,
                                       *f.map.domain(), witness);
            if (g.oracle && !oracle_distance(s, f.map, other, r)) code = kExitUnknown;
            return s.finish(command, code);
        }

        if (command == "scat" || command == "tc") {
            ComplexPtr k = s.complex(input);
            DistanceOptions o = s.distance_options();
            if (command == "scat") {
                DistanceResult r = scat(k, o);
                int code = report_distance(s, "scat", r, *k, witness);
                if (g.oracle && !oracle_distance(s, identity_map(k), constant_map(k, k, 0), r))
                    code = kExitUnknown;
                return s.finish(command, code);
            }
            Product sq = categorical_product(k, k, o.size_caps);
            DistanceResult r = contiguity_distance(sq.p1, sq.p2, o);
            int code = report_distance(s, "tc", r, *sq.complex, witness);
            if (g.oracle) {
                try {
                    DistanceResult fr = farber_cover_tc(k, o);
                    bool agrees = !r.exact || !fr.exact || fr.value == r.value;
                    s.result()["oracle"] = {{"farber_value", fr.value}, {"agrees", agrees}};
                    s.text() << "farber cover: " << fr.value << (agrees ? " (agrees)" : " (DISAGREES)")
                             << "\n";
                    if (!agrees) code = kExitUnknown;
                } catch (const CapExceeded& e) {
                    s.result()["oracle"] = {{"skipped", e.what()}};
                    s.text() << "farber cover: skipped (" << e.what() << ")\n";
                }
            }
            return s.finish(command, code);
        }

        if (command == "verify") {
            VerifyOptions o;
            o.seed = seed;
            o.complexes = complexes;
            o.pairs = pairs;
            o.run_oracle = !no_oracle;
            o.distance = s.distance_options();
            if (!corpus.empty()) o.corpus = load_corpus(s, corpus);
            VerifyReport r = run_verify(o, [&](const std::string& line) {
                if (!g.json_output && !g.deterministic) err << line << "\n";
            });
            json checks = json::array();
            s.text() << "seed " << r.seed << ", complexes " << r.complexes << ", map pairs " << r.pairs
                     << "\n";
            for (const auto& t : r.checks) {
                checks.push_back({{"name", t.name}, {"passed", t.passed}, {"skipped", t.skipped},
                                  {"failed", t.failed}});
                s.text() << "  " << t.name << ": passed " << t.passed << ", skipped " << t.skipped
                         << ", failed " << t.failed << "\n";
            }
            json violations = json::array();
            for (const auto& v : r.violations) {
                violations.push_back({{"check", v.check}, {"instance", v.instance}, {"detail", v.detail}});
                s.text() << "VIOLATION " << v.check << ": " << v.instance << "\n    " << v.detail << "\n";
            }
            s.result() = {{"seed", r.seed},
                          {"complexes", r.complexes},
                          {"pairs", r.pairs},
                          {"checks", checks},
                          {"violations", violations}};
            s.text() << (r.ok() ? "verify: OK" : "verify: " + std::to_string(r.violations.size()) +
                                                     " violation(s)")
                     << "\n";
            return s.finish(command, r.ok() ? kExitOk : kExitNo);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        s.result() = {{"error", e.what()}};
        return s.finish(command, kExitInput);
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        s.result() = {{"error", e.what()}};
        return s.finish(command, kExitUnknown);
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        s.result() = {{"error", e.what()}};
        return s.finish(command, kExitInput);
    }
    err << "unknown command\n";
    return kExitInput;
}

}  // namespace contig
