#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gen.hpp"
#include "sftlab/render.hpp"
#include "sftlab/runner.hpp"

using namespace sftlab;

namespace {

const char* kSmallDoc = R"(# a small document
dim 1
alphabet 0 1
sft golden { forbid (0)=1 (1)=1 }
sft full { }
code id { radius 0 ; default 0 ; map (0)=0 -> 0 ; map (0)=1 -> 1 }
toeplitz t1 { omega 1 0 1 1 }
cmd blocks golden 1
cmd dist golden full 3
cmd encode t1 4
)";

std::vector<std::string> messages(const ParseOutcome& out) {
    std::vector<std::string> ms;
    for (const auto& e : out.errors) ms.push_back(e.message);
    return ms;
}

bool has_error(const ParseOutcome& out, int line, const std::string& fragment) {
    for (const auto& e : out.errors)
        if (e.line == line && e.message.find(fragment) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("a well formed document parses completely") {
    ParseOutcome out = parse_document(kSmallDoc);
    REQUIRE(out.errors.empty());
    REQUIRE(out.document.has_value());
    const Document& d = *out.document;
    CHECK(d.dim == 1);
    CHECK(d.alphabet.size() == 2);
    CHECK(d.sfts.size() == 2);
    CHECK(d.sfts.count("golden") == 1);
    CHECK(d.sfts.at("golden").forbidden.size() == 1);
    CHECK(d.sfts.at("full").forbidden.empty());
    CHECK(d.codes.size() == 1);
    CHECK(d.toeplitz.size() == 1);
    CHECK(d.toeplitz.at("t1").omega == std::vector<int>{1, 0, 1, 1});
    REQUIRE(d.commands.size() == 3);
    CHECK(d.commands[0].op == "blocks");
    CHECK(d.commands[0].args == std::vector<std::string>{"golden", "1"});
    CHECK(d.commands[2].op == "encode");
}

TEST_CASE("brace blocks may span lines and carry comments") {
    ParseOutcome out = parse_document(
        "dim 1\nalphabet a b\nsft s {\n  forbid (0)=a (1)=a ;  # no aa\n  forbid (0)=b (1)=b\n}\ncmd boxes s 2\n");
    REQUIRE(out.document.has_value());
    CHECK(out.document->sfts.at("s").forbidden.size() == 2);
}

TEST_CASE("parse errors name their lines") {
    SUBCASE("unknown statement") {
        ParseOutcome out = parse_document("dim 1\nalphabet 0 1\nbogus x\n");
        CHECK(!out.document.has_value());
        CHECK(has_error(out, 3, "unknown statement"));
    }
    SUBCASE("statement before dim") {
        ParseOutcome out = parse_document("sft s { }\ndim 1\nalphabet 0 1\n");
        CHECK(has_error(out, 1, "before 'dim'"));
    }
    SUBCASE("missing dim entirely") {
        ParseOutcome out = parse_document("# nothing\n");
        CHECK(has_error(out, 1, "missing 'dim'"));
    }
    SUBCASE("dim twice") {
        ParseOutcome out = parse_document("dim 1\ndim 2\nalphabet 0 1\n");
        CHECK(has_error(out, 2, "twice"));
    }
    SUBCASE("dim out of range") {
        ParseOutcome out = parse_document("dim 4\nalphabet 0 1\n");
        CHECK(has_error(out, 1, "1..3"));
    }
    SUBCASE("unknown symbol in a pattern") {
        ParseOutcome out = parse_document("dim 1\nalphabet 0 1\nsft s { forbid (0)=2 }\n");
        CHECK(has_error(out, 3, "unknown symbol '2'"));
    }
    SUBCASE("cell arity must match dim") {
        ParseOutcome out = parse_document("dim 2\nalphabet 0 1\nsft s { forbid (0)=1 }\n");
        CHECK(out.errors.size() >= 1);
        CHECK(out.errors[0].line == 3);
    }
    SUBCASE("unmatched close brace") {
        ParseOutcome out = parse_document("dim 1\nalphabet 0 1\nsft s }\n");
        CHECK(has_error(out, 3, "unmatched '}'"));
    }
    SUBCASE("unterminated block") {
        ParseOutcome out = parse_document("dim 1\nalphabet 0 1\nsft s { forbid (0)=1\n");
        CHECK(has_error(out, 3, "unterminated"));
    }
    SUBCASE("map must cover the whole window") {
        ParseOutcome out = parse_document(
            "dim 1\nalphabet 0 1\ncode c { radius 1 ; default 0 ; map (0)=1 -> 1 }\n");
        CHECK(!out.document.has_value());
        CHECK(out.errors.front().line == 3);
    }
    SUBCASE("unknown command") {
        ParseOutcome out = parse_document("dim 1\nalphabet 0 1\ncmd frobnicate\n");
        CHECK(has_error(out, 3, "unknown command"));
    }
    SUBCASE("perturb wants its three budgets") {
        ParseOutcome out = parse_document(
            "dim 1\nalphabet 0 1\nsft s { }\ncode id { radius 0 ; default 0 ; map (0)=0 -> 0 ; map (0)=1 -> 1 }\ncmd perturb s id keep=1\n");
        CHECK(has_error(out, 5, "expects 5 arguments"));
        ParseOutcome bad = parse_document(
            "dim 1\nalphabet 0 1\nsft s { }\ncode id { radius 0 ; default 0 ; map (0)=0 -> 0 ; map (0)=1 -> 1 }\ncmd perturb s id keep=1 patmax=4 bogus=3\n");
        CHECK(has_error(bad, 5, "expected keep=N patmax=N imgmax=N"));
        ParseOutcome dup = parse_document(
            "dim 1\nalphabet 0 1\nsft s { }\ncode id { radius 0 ; default 0 ; map (0)=0 -> 0 ; map (0)=1 -> 1 }\ncmd perturb s id keep=1 keep=2 patmax=4\n");
        CHECK(has_error(dup, 5, "duplicate 'keep='"));
    }
    SUBCASE("toeplitz needs dimension one") {
        ParseOutcome out = parse_document("dim 2\nalphabet 0 1\ntoeplitz t { omega 1 }\n");
        CHECK(has_error(out, 3, "requires dim 1"));
    }
    SUBCASE("duplicate object names collide across kinds") {
        ParseOutcome out = parse_document(
            "dim 1\nalphabet 0 1\nsft x { }\ncode x { radius 0 ; default 0 ; map (0)=0 -> 0 ; map (0)=1 -> 1 }\n");
        CHECK(has_error(out, 4, "duplicate name 'x'"));
    }
    SUBCASE("command referencing a missing object") {
        ParseOutcome out = parse_document("dim 1\nalphabet 0 1\ncmd blocks ghost 1\n");
        CHECK(has_error(out, 3, "unknown sft 'ghost'"));
    }
    SUBCASE("several errors all surface") {
        ParseOutcome out = parse_document("dim 1\nalphabet 0 1\nbogus\ncmd blocks ghost 1\n");
        CHECK(messages(out).size() >= 2);
    }
}

TEST_CASE("run_document executes commands in order") {
    ParseOutcome out = parse_document(kSmallDoc);
    REQUIRE(out.document.has_value());
    RunOptions opt;
    opt.timing = false;
    RunOutcome run = run_document(*out.document, opt);
    CHECK(run.all_ok);
    REQUIRE(run.report.size() == 3);
    CHECK(run.report[0]["command"] == "blocks");
    CHECK(run.report[0]["status"] == "ok");
    CHECK(run.report[0]["result"]["count"] == 5);
    CHECK(run.report[1]["result"]["display"] == "2^-1");
    CHECK(run.report[2]["result"]["bits"].size() == 9);
    for (const auto& entry : run.report) CHECK(!entry.contains("ms"));
}

TEST_CASE("a failing command does not stop the run") {
    ParseOutcome out = parse_document(
        "dim 1\nalphabet 0 1\nsft full { }\ncmd dist full full 40\ncmd blocks full 1\n");
    REQUIRE(out.document.has_value());
    RunOptions opt;
    opt.timing = false;
    opt.block_budget = 1000;  // resolution 40 cannot fit
    RunOutcome run = run_document(*out.document, opt);
    CHECK(!run.all_ok);
    REQUIRE(run.report.size() == 2);
    CHECK(run.report[0]["status"] == "error");
    CHECK(run.report[0].contains("error"));
    CHECK(run.report[1]["status"] == "ok");
    CHECK(run.report[1]["result"]["count"] == 8);
}

TEST_CASE("reports are deterministic with timing off") {
    ParseOutcome out = parse_document(kSmallDoc);
    REQUIRE(out.document.has_value());
    RunOptions opt;
    opt.timing = false;
    std::string a = run_document(*out.document, opt).report.dump(2);
    std::string b = run_document(*out.document, opt).report.dump(2);
    CHECK(a == b);
}

TEST_CASE("timing on adds an ms field") {
    ParseOutcome out = parse_document(kSmallDoc);
    REQUIRE(out.document.has_value());
    RunOptions opt;  // timing defaults on
    RunOutcome run = run_document(*out.document, opt);
    for (const auto& entry : run.report) CHECK(entry.contains("ms"));
}

TEST_CASE("render_pgm writes a plausible image") {
    namespace fs = std::filesystem;
    Alphabet a = gen::binary();
    Pattern p;
    p.dim = 2;
    // 3 wide, 2 tall checker
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 2; ++y) p.cells[{x, y}] = (x + y) % 2;
    fs::path path = fs::temp_directory_path() / "sftlab_render_test.pgm";
    render_pgm(p, a, path.string());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::string header(9, '\0');
    in.read(header.data(), 9);
    CHECK(header == "P5\n3 2\n25");
    in.seekg(0, std::ios::end);
    CHECK(static_cast<long>(in.tellg()) == 11 + 6);  // "P5\n3 2\n255\n" + 6 pixels
    in.close();
    fs::remove(path);
}

TEST_CASE("render_pgm rejects shapes it cannot draw") {
    Alphabet a = gen::binary();
    Pattern ragged;
    ragged.dim = 2;
    ragged.cells[{0, 0}] = 0;
    ragged.cells[{1, 1}] = 1;  // not a full box
    CHECK_THROWS_AS(render_pgm(ragged, a, "/tmp/unused.pgm"), Error);
    Pattern line;
    line.dim = 1;
    line.cells[{0}] = 0;  // wrong dimension
    CHECK_THROWS_AS(render_pgm(line, a, "/tmp/unused.pgm"), Error);
}
