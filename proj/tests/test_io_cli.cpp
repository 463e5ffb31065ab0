#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "hyperoval/cli.hpp"

using namespace hyperoval;
using hyperoval::test::solid;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

// In-process run with captured streams.
Result run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "hyperoval_cli");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// The real binary; stdout only.
Result run_binary(const std::string& args)
{
    std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, {}, {}};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, {}};
}

class TempDir {
public:
    TempDir()
    {
        path_ = fs::temp_directory_path() / ("hyperoval_test_" + std::to_string(::getpid()) + "_" +
                                             ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream(path) << text;
}

}  // namespace

// ------------------------------------------------------------------ io

TEST(Io, FieldRoundTrip)
{
    for (int h : {1, 2, 3, 4, 5}) {
        const Field& f = Field::standard(h);
        EXPECT_EQ(&field_from_json(field_json(f)), &f);
    }
    EXPECT_THROW(field_from_json(json{{"h", 2}, {"modulus", 5}}), FormatError);
    EXPECT_THROW(field_from_json(json{{"h", 9}, {"modulus", 5}}), FormatError);
    EXPECT_THROW(field_from_json(json::array()), FormatError);
}

TEST(Io, PointRoundTrip)
{
    const Field& f = Field::standard(3);
    Vec<6> v{1, 0, 7, 3, 0, 5};
    EXPECT_EQ(point_from_json<6>(point_json(v), f), v);
    EXPECT_EQ(point_json(v).dump(), R"(["1","0","7","3","0","5"])");
    EXPECT_THROW(point_from_json<6>(json::array({"1", "2"}), f), FormatError);
    EXPECT_THROW(point_from_json<4>(json::array({"1", "2", "3", "9"}), f), FormatError);
}

TEST(Io, HyperovalRoundTrip)
{
    const EllipticSolid& s = solid(2);
    const KleinModel& m = s.model();
    PointSet h = h_lambda(s, 2);
    Provenance p{"lambda", json{{"lambda", "2"}}};
    json j = hyperoval_json(m, h, p);
    EXPECT_EQ(j["size"], 96);
    auto hf = hyperoval_file_from_json(json::parse(j.dump()));
    EXPECT_EQ(hf.provenance.family, "lambda");
    EXPECT_EQ(hf.provenance.params["lambda"], "2");
    EXPECT_EQ(hyperoval_points(m, hf), h);
    // deterministic serialization
    EXPECT_EQ(hyperoval_json(m, h, p).dump(), j.dump());

    json bad = j;
    bad["indices"][0] = bad["indices"][1];
    EXPECT_THROW(hyperoval_points(m, hyperoval_file_from_json(bad)), FormatError);
    json off = j;
    off["points"][0] = point_json(Vec<6>{1, 1, 0, 0, 0, 0});
    EXPECT_THROW(hyperoval_points(m, hyperoval_file_from_json(off)), FormatError);
    json short_ = j;
    short_["points"].erase(0);
    EXPECT_THROW(hyperoval_file_from_json(short_), FormatError);
    json nofield = j;
    nofield.erase("field");
    EXPECT_THROW(hyperoval_file_from_json(nofield), FormatError);
    EXPECT_THROW(hyperoval_points(solid(1).model(), hyperoval_file_from_json(j)), FormatError);
}

TEST(Io, OvoidRoundTrip)
{
    const EllipticSolid& s = solid(3);
    for (const Ovoid& o : {classical_ovoid(s, Vec<4>{1, 0, 0, 0}), tits_ovoid(s), base_elliptic(s)}) {
        json j = ovoid_json(s, o);
        Ovoid back = ovoid_from_json(s, json::parse(j.dump()));
        EXPECT_EQ(back.points, o.points);
        EXPECT_EQ(back.kind, o.kind);
        EXPECT_EQ(back.base_intersection, o.base_intersection);
        if (o.kind == OvoidKind::classical) { EXPECT_EQ(back.b, o.b); }
    }
    EXPECT_THROW(ovoid_from_json(s, json{{"kind", "tits"}}), FormatError);
    EXPECT_THROW(ovoid_from_json(solid(2), ovoid_json(s, tits_ovoid(s))), FormatError);
}

TEST(Io, ReportJson)
{
    VerificationReport r;
    r.subject = "x";
    r.seconds = 12.5;
    r.checks.push_back(make_check("a", true));
    Check c = make_check("b", false, "why", {4, 5});
    c.counts = {{"n", 3}};
    r.checks.push_back(c);
    json j = report_json(r);
    EXPECT_EQ(j["passed"], false);
    EXPECT_FALSE(j.contains("seconds"));
    EXPECT_EQ(j.dump(),
              R"({"subject":"x","passed":false,"checks":[{"name":"a","passed":true},)"
              R"({"name":"b","passed":false,"detail":"why","counts":{"n":3},"witness":[4,5]}]})");
}

TEST(Io, Files)
{
    TempDir d;
    json j{{"a", 1}};
    write_json_file(d.file("a.json"), j);
    EXPECT_EQ(read_json_file(d.file("a.json")), j);
    EXPECT_THROW(read_json_file(d.file("missing.json")), std::ios_base::failure);
    write_text(d.file("bad.json"), "{not json");
    EXPECT_THROW(read_json_file(d.file("bad.json")), FormatError);
    EXPECT_THROW(write_json_file(d.file("no/such/dir/x.json"), j), std::ios_base::failure);
}

// ------------------------------------------------------------------ cli, in process

TEST(Cli, ConstructSummary)
{
    auto r = run_cli({"construct", "--q", "4"});
    EXPECT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["size"], 96);
    EXPECT_EQ(j["family"], "lambda");
    auto r2 = run_cli({"construct", "--q", "2"});
    EXPECT_EQ(json::parse(r2.out)["size"], 16);
    EXPECT_EQ(json::parse(r2.out)["family"], "q2");
}

TEST(Cli, ConstructVerifyRoundTrip)
{
    TempDir d;
    auto r = run_cli({"construct", "--q", "4", "--family", "ovoid", "--b", "0,0,1,1", "--out", d.file("h.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["size"], 72);
    auto v = run_cli({"verify", "--in", d.file("h.json")});
    EXPECT_EQ(v.code, 0) << v.out;
    auto j = json::parse(v.out);
    EXPECT_EQ(j["report"]["passed"], true);
    EXPECT_EQ(j["construction"]["family"], "ovoid");
    EXPECT_EQ(j["size"], 72);
}

TEST(Cli, VerifyFamilies)
{
    for (std::vector<std::string> args : {std::vector<std::string>{"verify", "--q", "4", "--family", "eq1", "--lambda", "3"},
                                          std::vector<std::string>{"verify", "--q", "4", "--family", "ovoid", "--b", "1,0,0,0"},
                                          std::vector<std::string>{"verify", "--q", "2"}}) {
        auto r = run_cli(args);
        EXPECT_EQ(r.code, 0) << r.out << r.err;
        EXPECT_EQ(json::parse(r.out)["report"]["passed"], true);
    }
}

TEST(Cli, VerifyTamperedFileFails)
{
    TempDir d;
    ASSERT_EQ(run_cli({"construct", "--q", "4", "--out", d.file("h.json")}).code, 0);
    json j = read_json_file(d.file("h.json"));
    j["indices"].erase(0);
    j["points"].erase(0);
    write_json_file(d.file("t.json"), j);
    auto r = run_cli({"verify", "--in", d.file("t.json")});
    EXPECT_EQ(r.code, 1);
    auto out = json::parse(r.out);
    EXPECT_EQ(out["report"]["passed"], false);
    bool witnessed = false;
    for (const auto& c : out["report"]["checks"])
        if (c["name"] == "lines meet in 0 or 2 points") witnessed = c["passed"] == false && c.contains("witness");
    EXPECT_TRUE(witnessed);
}

TEST(Cli, UsageErrors)
{
    TempDir d;
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"construct"}).code, 2);                        // missing --q
    EXPECT_EQ(run_cli({"construct", "--q", "6"}).code, 2);             // not a power of two in range
    EXPECT_EQ(run_cli({"construct", "--q", "4", "--family", "x"}).code, 2);
    EXPECT_EQ(run_cli({"construct", "--q", "4", "--lambda", "0"}).code, 2);
    EXPECT_EQ(run_cli({"construct", "--q", "4", "--lambda", "7"}).code, 2);
    EXPECT_EQ(run_cli({"construct", "--q", "4", "--family", "ovoid"}).code, 2);  // needs --b
    EXPECT_EQ(run_cli({"construct", "--q", "4", "--family", "ovoid", "--b", "1,0"}).code, 2);
    EXPECT_EQ(run_cli({"construct", "--q", "4", "--family", "ovoid", "--ovoid", "tits"}).code, 2);  // h even
    EXPECT_EQ(run_cli({"verify"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--in", d.file("missing.json")}).code, 2);
    write_text(d.file("bad.json"), "[1,2");
    EXPECT_EQ(run_cli({"verify", "--in", d.file("bad.json")}).code, 2);
    write_text(d.file("wrong.json"), R"({"field":{"h":2,"modulus":7}})");
    EXPECT_EQ(run_cli({"verify", "--in", d.file("wrong.json")}).code, 2);
    EXPECT_EQ(run_cli({"crosscheck", "--q", "4", "--lambda", "zz"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--q", "4", "--scan", "everything"}).code, 2);
}

TEST(Cli, NonEllipticParameterIsACheckFailure)
{
    auto r = run_cli({"construct", "--q", "4", "--family", "ovoid", "--b", "0,0,0,1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("check failed"), std::string::npos);
}

TEST(Cli, Classify)
{
    auto r = run_cli({"classify", "--q", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["class_count"], 2);
    EXPECT_EQ(j["expected"], 2);
    EXPECT_EQ(j["trace_zero_orbits"]["N"], 1);
    EXPECT_EQ(j["b_elliptic"].get<int>() + j["b_non_elliptic"].get<int>(), 255);

    auto one = run_cli({"classify", "--q", "4", "--b", "1,0,0,0"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(json::parse(one.out)["class"], "(4, 1, tangent)");
    auto tits = run_cli({"classify", "--q", "8", "--ovoid", "tits"});
    EXPECT_EQ(tits.code, 0);
    EXPECT_EQ(json::parse(tits.out)["class"], "nonclassical");
}

TEST(Cli, Crosscheck)
{
    auto r = run_cli({"crosscheck", "--q", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["rows"].size(), 3u);  // every lambda by default
    for (const auto& row : j["rows"]) {
        EXPECT_EQ(row["eq1_sc_equals_h_lambda"], true);
        EXPECT_EQ(row["h_from_recovered_ovoid"], true);
        EXPECT_EQ(row["size"], 96);
    }
    auto r2 = run_cli({"crosscheck", "--q", "2"});
    EXPECT_EQ(r2.code, 0);
    EXPECT_EQ(json::parse(r2.out)["passed"], true);
    auto r3 = run_cli({"crosscheck", "--q", "4", "--lambda", "2"});
    EXPECT_EQ(json::parse(r3.out)["rows"].size(), 1u);
}

// ------------------------------------------------------------------ cli binary

TEST(Binary, ExitCodesAndDeterminism)
{
    auto a = run_binary("verify --q 8 --family ovoid --ovoid tits --jobs 1");
    auto b = run_binary("verify --q 8 --family ovoid --ovoid tits --jobs 3");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(b.code, 0);
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out);  // byte-identical regardless of thread count

    EXPECT_EQ(run_binary("construct --q 4 --family ovoid --b 0,0,0,1").code, 1);
    EXPECT_EQ(run_binary("construct --q 3").code, 2);
    EXPECT_EQ(run_binary("frobnicate").code, 2);
    EXPECT_EQ(run_binary("--help").code, 0);
}

TEST(Binary, FileOutputIsStable)
{
    TempDir d;
    ASSERT_EQ(run_binary("construct --q 8 --lambda 3 --out " + d.file("a.json")).code, 0);
    ASSERT_EQ(run_binary("construct --q 8 --lambda 3 --out " + d.file("b.json")).code, 0);
    std::ifstream fa(d.file("a.json")), fb(d.file("b.json"));
    std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
    EXPECT_FALSE(sa.empty());
    EXPECT_EQ(sa, sb);
    EXPECT_EQ(json::parse(sa)["size"], 640);
}
