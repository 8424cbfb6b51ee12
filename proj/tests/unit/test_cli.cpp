#include <doctest.h>

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/dispatch.hpp"

using namespace bhseq;
using namespace bhseq::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "bhseq");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << contents;
    return path;
}

}  // namespace

TEST_CASE("emit_bfile examples") {
    auto text = [](unsigned h, unsigned k) {
        std::ostringstream os;
        emit_bfile(greedy_sequence(h, k), os);
        return os.str();
    };
    CHECK(text(1, 2) == "0 0\n1 1\n2 2\n");
    CHECK(text(2, 2) == "0 0\n1 1\n2 3\n");
    CHECK(text(5, 0) == "0 0\n");
}

TEST_CASE("b-file round trip on generated sequences") {
    for (unsigned h = 1; h <= 8; ++h) {
        for (unsigned k = 0; k <= 6; ++k) {
            const auto rec = greedy_sequence(h, k);
            std::ostringstream os;
            emit_bfile(rec, os);
            std::istringstream is(os.str());
            CHECK(read_bfile(is) == rec.terms);
        }
    }
}

TEST_CASE("read_bfile tolerates comments and rejects gaps") {
    std::istringstream ok("# A-number\n0 0\n\n1 1\n2 3 \n");
    CHECK(read_bfile(ok) == std::vector<Element>{0, 1, 3});
    std::istringstream gap("0 0\n2 3\n");
    CHECK_THROWS_AS(read_bfile(gap), InvalidInput);
    std::istringstream junk("0 zero\n");
    CHECK_THROWS_AS(read_bfile(junk), InvalidInput);
}

TEST_CASE("set file parsing") {
    std::istringstream in("# greedy B_2 prefix\n7\n0\n  3  # trailing comment\n\n1\n");
    CHECK(read_set(in) == std::vector<Element>{0, 1, 3, 7});
    std::istringstream dup("1\n1\n");
    CHECK_THROWS_AS(read_set(dup), InvalidInput);
    std::istringstream neg("-1\n");
    CHECK_THROWS_AS(read_set(neg), InvalidInput);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_set(empty), InvalidInput);
    std::istringstream huge("99999999999999999999999\n");
    CHECK_THROWS_AS(read_set(huge), OverflowError);
    CHECK(parse_set_literal("{0, 2,1}") == std::vector<Element>{0, 1, 2});
    CHECK(parse_set_literal("5") == std::vector<Element>{5});
}

TEST_CASE("JSON sequence report schema") {
    const auto doc = sequence_json(greedy_sequence(2, 4));
    const std::vector<std::string> expected_keys{"h", "k", "offset", "terms", "cap", "elapsed_ms"};
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys == expected_keys);
    CHECK(doc["h"].is_number_unsigned());
    CHECK(doc["k"] == 4);
    CHECK(doc["offset"] == 0);
    CHECK(doc["terms"] == nlohmann::ordered_json::array({0, 1, 3, 7, 12}));
    CHECK(doc["cap"] == 15);
    REQUIRE(doc["elapsed_ms"].is_array());
    CHECK(doc["elapsed_ms"].size() == 5);
    for (const auto& e : doc["elapsed_ms"]) CHECK(e.is_number());
}

TEST_CASE("generate subcommand") {
    auto r = run({"generate", "--h", "2", "--terms", "4", "--format", "bfile"});
    CHECK(r.code == kOk);
    CHECK(r.out == "0 0\n1 1\n2 3\n3 7\n4 12\n");

    r = run({"generate", "--h", "3", "--terms", "4", "--format", "csv"});
    CHECK(r.code == kOk);
    CHECK(r.out == "# h=3 offset=0\nindex,value\n0,0\n1,1\n2,4\n3,13\n4,32\n");

    r = run({"generate", "--h", "2", "--terms", "3", "--format", "json"});
    CHECK(r.code == kOk);
    CHECK(nlohmann::json::parse(r.out)["terms"] == nlohmann::json::array({0, 1, 3, 7}));

    r = run({"generate", "--h", "2", "--terms", "8", "--jobs", "4"});
    CHECK(r.out == run({"generate", "--h", "2", "--terms", "8"}).out);

    const auto path = std::filesystem::temp_directory_path() / "bhseq_generate_test.b";
    r = run({"generate", "--h", "4", "--terms", "4", "--output", path.string()});
    CHECK(r.code == kOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    CHECK(read_bfile(in) == std::vector<Element>{0, 1, 5, 21, 55});
    std::filesystem::remove(path);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"generate", "--h", "0", "--terms", "4"}).code == kUsage);
    CHECK(run({"generate", "--h", "2"}).code == kUsage);
    CHECK(run({"generate", "--h", "2", "--terms", "2", "--format", "xml"}).code == kUsage);
    CHECK(run({"theorem", "--h-min", "5", "--h-max", "2"}).code == kUsage);
    CHECK(run({"frobnicate"}).code == kUsage);
    CHECK(run({}).code == kUsage);
    CHECK(run({"lemma1", "--h", "1"}).code == kUsage);
    CHECK(run({"verify", "--h", "2", "--set", "/nonexistent/set.txt"}).code == kUsage);
    CHECK(run({"generate", "--help"}).code == kOk);
}

TEST_CASE("overflow exits 3") {
    const auto r = run({"generate", "--h", "4000000000", "--terms", "3"});
    CHECK(r.code == kResource);
    CHECK(r.err.find("overflow") != std::string::npos);
}

TEST_CASE("verify subcommand") {
    auto r = run({"verify", "--h", "2", "--set", "{0,1,2}"});
    CHECK(r.code == kFailure);
    CHECK(r.out.rfind("NOT B_2: 0+2 = 1+1\n", 0) == 0);

    const auto path = temp_file("bhseq_verify_test.txt", "# greedy B_3 prefix\n0\n1\n4\n13\n32\n");
    r = run({"verify", "--h", "3", "--set", path.string()});
    CHECK(r.code == kOk);
    CHECK(r.out.rfind("B_3\n", 0) == 0);
    CHECK(r.out.find("|D_3| = 35, C(7,3) = 35") != std::string::npos);
    std::filesystem::remove(path);

    // translation invariance: {5, 6, 8, 12} is the Sidon set {0, 1, 3, 7} shifted
    CHECK(run({"verify", "--h", "2", "--set", "{5,6,8,12}"}).code == kOk);
    CHECK(run({"verify", "--h", "2", "--set", "{0,1,1}"}).code == kUsage);
}

TEST_CASE("theorem subcommand") {
    auto r = run({"theorem", "--h-min", "1", "--h-max", "8"});
    CHECK(r.code == kOk);
    std::istringstream lines(r.out);
    std::string line;
    int matches = 0;
    while (std::getline(lines, line)) {
        if (!line.empty() && std::isdigit(static_cast<unsigned char>(line[0])) && line.ends_with(" MATCH")) ++matches;
    }
    CHECK(matches == 8);
    CHECK(r.out.find("a4(h) < a4(h+1) for every scanned h") != std::string::npos);

    r = run({"theorem", "--h-min", "1", "--h-max", "3", "--format", "csv"});
    CHECK(r.out == "h,a4_greedy,a4_formula,a4_witness,match\n1,4,4,,MATCH\n2,12,12,12,MATCH\n3,32,32,32,MATCH\n");

    r = run({"theorem", "--h-min", "2", "--h-max", "4", "--format", "json", "--jobs", "3"});
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["all_match"] == true);
    CHECK(doc["rows"].size() == 3);
    CHECK(doc["rows"][2]["a4_witness"] == 55);
}

TEST_CASE("theorem_scan is ordered regardless of jobs") {
    const auto seq = theorem_scan(1, 10, 1);
    const auto par = theorem_scan(1, 10, 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].h == i + 1);
        CHECK(par[i].h == seq[i].h);
        CHECK(par[i].a4_greedy == seq[i].a4_greedy);
        CHECK(par[i].match);
    }
    CHECK_FALSE(seq[0].a4_witness.has_value());
}

TEST_CASE("witness subcommand") {
    auto r = run({"witness", "--h", "2", "--c", "8"});
    CHECK(r.code == kOk);
    CHECK(r.out.rfind("x0=1 x1=0 x2=0 x3=0 y1=1 y2=0 y3=1\n", 0) == 0);
    r = run({"witness", "--h", "3", "--c", "32"});
    CHECK(r.code == kOk);
    CHECK(r.out == "none\n");
}

TEST_CASE("lemma1 subcommand") {
    const auto r = run({"lemma1", "--h", "3"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("merged union: [5, 31]") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("y-piece(y3=1)[y2=0]") != std::string::npos);
    CHECK(run({"lemma1", "--h", "3", "--brief"}).out.find("y-piece(") == std::string::npos);
}

TEST_CASE("bench subcommand") {
    const auto r = run({"bench", "--h", "3", "--terms", "4"});
    CHECK(r.code == kOk);
    CHECK(r.out.find("candidates/second") != std::string::npos);
    CHECK(r.out.find("table memory:") != std::string::npos);
}
