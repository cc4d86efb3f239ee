#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::EndsWith;
using Catch::Matchers::StartsWith;

namespace {
  struct Run {
    int         exit = -1;
    std::string out;
  };

  Run ualg(std::string const& args) {
    std::string const cmd = std::string(UALG_BIN) + " " + args + " 2>&1";
    Run               r;
    FILE*             pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t            got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
      r.out.append(buf.data(), got);
    }
    int const status = pclose(pipe);
    r.exit           = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }
}  // namespace

TEST_CASE("cli: demo is deterministic and passes", "[cli]") {
  auto const a = ualg("demo mitschke");
  auto const b = ualg("demo mitschke");
  CHECK(a.exit == 0);
  CHECK(a.out == b.out);
  CHECK_THAT(a.out, ContainsSubstring("all checks passed"));
  CHECK_THAT(a.out, ContainsSubstring("R;S  (2,3)  yes  (3,2)  no"));
  CHECK_THAT(a.out, ContainsSubstring("S;R  (2,3)  no   (3,2)  yes"));
  CHECK_THAT(a.out, ContainsSubstring("computed at (a,c,b)  1 2 1 1 2 - 1 2  0 mismatches"));
  auto const rows = ualg("--rows demo mitschke");
  CHECK(rows.exit == 0);
  CHECK_THAT(rows.out, StartsWith("command\tdemo mitschke\n"));
  CHECK_THAT(rows.out, EndsWith("exit\t0\n"));
}

TEST_CASE("cli: classify verdicts and exit codes", "[cli]") {
  auto const ab = ualg("classify @A @B");
  CHECK(ab.exit == 0);
  CHECK_THAT(ab.out, ContainsSubstring("3-permutable (Goursat)"));
  CHECK_THAT(ab.out, ContainsSubstring("27 assignments"));
  auto const z3 = ualg("classify @Z3");
  CHECK(z3.exit == 0);
  CHECK_THAT(z3.out, ContainsSubstring("2-permutable (Mal'tsev)"));
  auto const sl = ualg("classify @SL2");
  CHECK(sl.exit == 1);
  CHECK_THAT(sl.out, ContainsSubstring("not n-permutable for any n (fixpoint at power"));
  auto const bounded = ualg("classify @A @B --max-n 2");
  CHECK(bounded.exit == 3);
  CHECK_THAT(bounded.out, ContainsSubstring("unknown"));
}

TEST_CASE("cli: usage and format errors exit 2", "[cli]") {
  CHECK(ualg("").exit == 2);
  CHECK(ualg("no-such-command").exit == 2);
  CHECK(ualg("classify").exit == 2);
  CHECK(ualg("classify @Nope").exit == 2);
  CHECK(ualg("classify /nonexistent.json").exit == 2);
  CHECK(ualg("classify @A @Z3").exit == 2);
  auto const dir = std::filesystem::temp_directory_path() / "ualg_cli_test";
  std::filesystem::create_directories(dir);
  auto const bad = (dir / "bad.json").string();
  std::ofstream(bad) << R"({"name": "X", "size": 2, "ops": [
      {"name": "mul", "arity": 2, "table": [0, 1, 0]}]})";
  auto const r = ualg("classify " + bad);
  CHECK(r.exit == 2);
  CHECK_THAT(r.out, ContainsSubstring("ops[0].table"));
  CHECK_THAT(r.out, ContainsSubstring("'mul'"));
  std::filesystem::remove_all(dir);
  CHECK(ualg("wm-table @A \"(mul x\" \"(mul x y)\"").exit == 2);
}

TEST_CASE("cli: additional commands", "[cli]") {
  CHECK(ualg("check-identities @A @B -i \"(mul (mul x y) x) = x\"").exit == 0);
  CHECK(ualg("check-identities @B -i \"(mul x y) = (mul y x)\"").exit == 1);
  CHECK(ualg("quasi-check @A @B --w1 \"(mul (mul z y) x)\" --w2 \"(mul (mul x y) z)\"")
            .exit
        == 0);
  CHECK(ualg("rel compose @B ker:@f ker:@g").exit == 1);
  CHECK(ualg("rel compose @B ker:@f ker:@f").exit == 0);
  CHECK(ualg("rel chain @B ker:@f ker:@g 3").exit == 0);
  CHECK(ualg("rel chain @B ker:@f ker:@g 2").exit == 1);
  CHECK(ualg("rel classify @SL2 \"0,0;0,1;1,1\"").exit == 0);
  CHECK(ualg("rel closure @Z3 \"0,1\"").exit == 0);
  CHECK(ualg("scan-preorders @SL2").exit == 1);
  CHECK(ualg("scan-preorders @Z3").exit == 0);
  CHECK(ualg("wm-table @B \"(mul (mul z y) x)\" \"(mul (mul x y) z)\"").exit == 0);
  CHECK(ualg("internal analyze --kind pair --algebra @B").exit == 0);
  CHECK(ualg("internal analyze --kind relation --algebra @B --relation ker:@g").exit
        == 0);
  CHECK(ualg("internal analyze --kind monoid --table 0,0,0,1 --unit 1").exit == 1);
  CHECK(ualg("internal analyze --kind monoid --table 0,0,0 --unit 1").exit == 2);
  CHECK(ualg("condition-v @Z3").exit == 0);
  CHECK(ualg("condition-v @set2 --flavor span").exit == 1);
  CHECK(ualg("pushout-sections @Z3 --battery @Z3 @Z2").exit == 0);
  CHECK(ualg("pushout-sections @set2 --battery @set2").exit == 1);
}

TEST_CASE("cli: no positive verdict with a nonzero exit", "[cli]") {
  auto const r = ualg("--rows classify @SL2");
  CHECK_THAT(r.out, ContainsSubstring("verdict\tnot-permutable"));
  CHECK_THAT(r.out, EndsWith("exit\t1\n"));
  auto const p = ualg("--rows classify @Z3");
  CHECK_THAT(p.out, ContainsSubstring("verdict\tpermutable\t2"));
  CHECK_THAT(p.out, EndsWith("exit\t0\n"));
}
