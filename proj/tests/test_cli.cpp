#include "contig/cli.hpp"
#include "contig/map_io.hpp"
#include "contig/error.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace contig;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = CONTIG_FIXTURE_DIR;

std::string fx(const std::string& name) { return (kFixtures / name).string(); }

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "contig_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("map files load with shared complexes") {
    ComplexCache cache;
    MapFile id = load_map(fx("id_boundary.map"), cache);
    MapFile c = load_map(fx("const_a.map"), cache);
    CHECK(id.map.domain() == c.map.domain());
    CHECK(id.map.codomain() == c.map.domain());
    CHECK(id.map == identity_map(id.map.domain()));

    auto text = serialize_map(c.map, "boundary2.cplx", "boundary2.cplx");
    MapFile again = parse_map(text, kFixtures, cache);
    CHECK(again.map == c.map);

    CHECK_THROWS_AS(parse_map("{", kFixtures, cache), InputError);
    CHECK_THROWS_AS(parse_map(R"({"domain": "boundary2.cplx", "codomain": "boundary2.cplx",
        "assignment": {"a": "a", "b": "b"}})", kFixtures, cache), InputError);
    CHECK_THROWS_AS(parse_map(R"({"domain": "delta2.cplx", "codomain": "boundary2.cplx",
        "assignment": {"a": "a", "b": "b", "c": "c"}})", kFixtures, cache), InputError);
}

TEST_CASE("emit_dot counts") {
    auto count = [](const std::string& s, const std::string& what) {
        std::size_t n = 0;
        for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
        return n;
    };
    std::string d1 = emit_dot(*parse_complex("a b"));
    CHECK(count(d1, " -- ") == 1);
    CHECK(count(d1, ";\n") == 3);
    std::string b = emit_dot(*parse_complex("a b\nb c\nc a"));
    CHECK(count(b, " -- ") == 3);
    std::string f = emit_dot(*load_complex(fx("fig3.cplx")));
    CHECK(count(f, " -- ") == 12);
    CHECK(count(f, ";\n") == 18);
    CHECK(count(f, "// facet:") == 7);
}

TEST_CASE("cli examples") {
    auto s = run({"scat", fx("fig3.cplx")});
    CHECK(s.code == 0);
    CHECK(s.out.rfind("scat = 1 (exact)\n", 0) == 0);

    auto c = run({"collapsible", fx("delta2.cplx")});
    CHECK(c.code == 0);
    CHECK(c.out == "strongly collapsible\n");
    CHECK(run({"collapsible", fx("boundary2.cplx")}).code == 1);

    CHECK(run({"contiguous", fx("id_boundary.map"), fx("const_a.map")}).code == 1);
    CHECK(run({"contiguous", fx("id_boundary.map"), fx("fold_boundary.map")}).code == 1);
    CHECK(run({"contiguous", fx("fold_boundary.map"), fx("const_a.map")}).code == 0);
    CHECK(run({"same-class", fx("id_boundary.map"), fx("const_a.map")}).code == 1);
    CHECK(run({"same-class", fx("arc_c5.map"), fx("const_c5.map"), "--oracle"}).code == 0);
    auto d = run({"distance", fx("id_boundary.map"), fx("const_a.map")});
    CHECK(d.code == 0);
    CHECK(d.out.rfind("SD = 1 (exact)", 0) == 0);
    CHECK(run({"scat-map", fx("fold_boundary.map")}).out.rfind("scat(map) = 0 (exact)", 0) == 0);
    CHECK(run({"tc", fx("delta3.cplx")}).out.rfind("tc = 0 (exact)", 0) == 0);
}

TEST_CASE("cli error codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"scat", fx("missing.cplx")}).code == 2);
    auto p = scratch("two.cplx");
    std::ofstream(p) << "a b\nc d\n";
    CHECK(run({"scat", p.string()}).code == 2);
    CHECK(run({"same-class", fx("arc_c5.map"), fx("const_c5.map"), "--cap", "1"}).code == 3);
    CHECK(run({"distance", fx("id_fig3.map"), fx("const_fig3.map"), "--cap", "1"}).code == 3);
}

TEST_CASE("cli json reports") {
    auto r = run({"scat", fx("boundary2.cplx"), "--json", "--deterministic"});
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["command"] == "scat");
    CHECK(doc["result"]["value"] == 1);
    CHECK(doc["exact"] == true);
    CHECK_FALSE(doc.contains("elapsed_ms"));
    CHECK(doc["inputs"][0]["sha256"].get<std::string>().size() == 64);
    CHECK(run({"scat", fx("boundary2.cplx"), "--json", "--deterministic"}).out == r.out);
    auto timed = nlohmann::json::parse(run({"scat", fx("boundary2.cplx"), "--json"}).out);
    CHECK(timed.contains("elapsed_ms"));
}

TEST_CASE("cli writes files") {
    auto core_out = scratch("core.cplx");
    auto map_out = scratch("core.map");
    CHECK(run({"core", fx("p3.cplx"), "--out", core_out.string(), "--map-out", map_out.string(),
               "--trace"}).code == 0);
    ComplexCache cache;
    MapFile r = load_map(map_out, cache);
    CHECK(r.map.codomain()->vertex_count() == 1);

    auto sq = scratch("sq.cplx");
    CHECK(run({"product", fx("boundary2.cplx"), fx("boundary2.cplx"), "--out", sq.string(),
               "--with-maps"}).code == 0);
    MapFile p1 = load_map(scratch("sq.p1.map"), cache);
    MapFile p2 = load_map(scratch("sq.p2.map"), cache);
    CHECK(p1.map.domain()->vertex_count() == 9);
    auto tc = run({"distance", scratch("sq.p1.map").string(), scratch("sq.p2.map").string()});
    CHECK(tc.out.rfind("SD = 2 (exact)", 0) == 0);

    auto sdp = scratch("sdc.cplx");
    CHECK(run({"sd", fx("p2.cplx"), "--out", sdp.string(), "--with-maps", fx("arc_c5.map")}).code == 0);
    MapFile sf = load_map(scratch("sdc.map"), cache);
    CHECK(sf.map.domain()->vertex_count() == 5);
    CHECK(sf.map.codomain()->vertex_count() == 10);

    auto witness = scratch("w.json");
    CHECK(run({"scat", fx("fig3.cplx"), "--witness", witness.string()}).code == 0);
    std::ifstream in(witness);
    auto w = nlohmann::json::parse(in);
    CHECK(w["witness"].size() == 2);
    CHECK(w["witness"][0]["certificate"]["verdict"] == "same");

    auto cert = scratch("c.json");
    CHECK(run({"same-class", fx("arc_c5.map"), fx("const_c5.map"), "--certificate", cert.string()}).code == 0);
    std::ifstream cin(cert);
    auto cj = nlohmann::json::parse(cin);
    CHECK(cj["chain"].size() >= 2);
}

TEST_CASE("info and dot") {
    auto r = run({"info", fx("fig3.cplx")});
    CHECK(r.out.find("vertices: 6\n") != std::string::npos);
    CHECK(r.out.find("strongly collapsible: no\n") != std::string::npos);
    auto d = run({"info", fx("fig3.cplx"), "--dot"});
    CHECK(d.out.rfind("graph K {", 0) == 0);
}
