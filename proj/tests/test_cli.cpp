#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "vitushkin/cli/commands.hpp"
#include "vitushkin/errors.hpp"

using namespace vitushkin;
using namespace vitushkin::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text) {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  args.push_back("-");
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bound mode") {
  auto r = run({"--mode", "bound"}, R"({"class":"polynomial","n":2,"degree":3,"epsilons":["1","1/2"]})");
  CHECK(r.code == 0);
  CHECK(r.out == "epsilon,bound_paper,bound_safe\n1,10,13\n1/2,21,24\n");
  r = run({"--mode", "bound"}, R"({"class":"polynomial","n":2,"degree":3})");
  CHECK(r.code == 0);
  CHECK(r.out == "epsilon,bound_paper,bound_safe\n");
}

TEST_CASE("input errors exit 2 without output") {
  for (const char* doc : {R"({"class":"polynomial","n":2,"degree":)", R"({"class":"cubic","n":2})",
                          R"({"class":"polynomial","n":2,"degree":3,"epsilons":["2/5"]})",
                          R"({"class":"polynomial","n":2,"degree":3,"colour":1})",
                          R"({"class":"polynomial","n":2,"terms":[{"coeff":1,"exp":[1]}]})",
                          R"({"class":"polynomial","n":9,"degree":1})", R"([1,2])"}) {
    CAPTURE(doc);
    auto r = run({"--mode", "bound"}, doc);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
  auto r = run({"--mode", "polytope"}, R"({"class":"polynomial","n":2,"terms":[]})");
  CHECK(r.code == 2);
  CHECK(run({"--mode", "sideways"}, "{}").code == 2);
  std::istringstream in;
  std::ostringstream out;
  std::ostringstream err;
  CHECK(run_cli({"/nonexistent/doc.json"}, in, out, err) == 2);
}

TEST_CASE("malformed JSON names the position") {
  auto r = run({"--mode", "bound"}, "{\n  \"class\": polynomial\n}");
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  r = run({"--mode", "bound"}, R"({"class":"polynomial","n":2,"degree":"x"})");
  CHECK(r.err.find("degree") != std::string::npos);
}

TEST_CASE("polytope mode") {
  auto r = run({"--mode", "polytope"}, R"({"class":"polynomial","n":2,"terms":[
      {"coeff":1,"exp":[2,1]},{"coeff":1,"exp":[0,3]},{"coeff":1,"exp":[0,0]}]})");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "record,s,axes,value\nvertex,,,0 0\nvertex,,,0 3\nvertex,,,2 1\nvolume,2,,3\nc_s,1,2,2\nc_s,2,1 2,2\n");
  r = run({"--mode", "polytope"}, R"({"class":"polynomial","n":2,"terms":[{"coeff":5,"exp":[0,0]}]})");
  CHECK(r.out == "record,s,axes,value\nvertex,,,0 0\nvolume,0,,1\nc_s,1,1,0\nc_s,2,1 2,0\n");
  r = run({"--mode", "polytope"}, R"({"class":"multidegree","n":2,"degree":2})");
  CHECK(r.out.find("c_s,2,1 2,7/2\n") != std::string::npos);
}

TEST_CASE("verify mode") {
  auto r = run({"--mode", "verify"}, R"({"class":"polynomial","n":2,
      "terms":[{"coeff":1,"exp":[2,0]},{"coeff":1,"exp":[0,2]}],"rho":"1/4","epsilons":["1/4","1/8","1/16"]})");
  CHECK(r.code == 0);
  CHECK(r.out.find("violation") == std::string::npos);

  // Interval [0,1/2] with the section constants 1, 2 and measure 1/2.
  r = run({"--mode", "verify"}, R"({"class":"polynomial","n":1,"terms":[{"coeff":1,"exp":[1]}],"rho":"1/2",
      "epsilons":["1/10"],"mu":"1/2","chat_override":[1,2]})");
  CHECK(r.code == 0);
  CHECK(r.out == "epsilon,interior,boundary,occupied,bound_paper,bound_safe,flag\n1/10,5,1,6,7,7,\n");

  r = run({"--mode", "verify"}, R"({"class":"polynomial","n":2,"terms":[{"coeff":1,"exp":[1,0]}],"rho":"1/2",
      "epsilons":["1/4"],"mu":0,"chat_override":[0,0,0]})");
  CHECK(r.code == 1);
  CHECK(r.out.find(",violation\n") != std::string::npos);

  r = run({"--mode", "verify"}, R"({"class":"polynomial","n":2,"degree":2,"epsilons":["1/4"]})");
  CHECK(r.code == 2);
}

TEST_CASE("gabrielov mode") {
  const std::string two = fixtures::suite()[2].document;
  std::string doc = two.substr(0, two.size() - 1) +
                    R"(,"sections":[{"fixed":[],"mode":"sublevel","resolution":256},{"fixed":[]}]})";
  auto r = run({"--mode", "gabrielov"}, doc);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "section,s,mode,resolution,components,chat_paper,chat_safe,flag\n"
        "full,2,sublevel,256,2,4,9,\n"
        "full,2,boundary,64,2,4,9,\n");
  r = run({"--mode", "gabrielov"}, R"({"class":"polynomial","n":2,"terms":[{"coeff":1,"exp":[0,0]}],"rho":1,
      "sections":[{"fixed":[[1,"1/2"]]}]})");
  CHECK(r.out == "section,s,mode,resolution,components,chat_paper,chat_safe,flag\nx1=1/2,1,boundary,64,0,0,0,\n");
}

TEST_CASE("normalize round trip") {
  for (const auto& f : fixtures::suite()) {
    CAPTURE(f.name);
    auto a = run({"--mode", "normalize"}, f.document);
    REQUIRE(a.code == 0);
    auto b = run({"--mode", "normalize"}, a.out);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("output file option") {
  const auto path = std::filesystem::temp_directory_path() / "vitushkin_cli_test.csv";
  std::filesystem::remove(path);
  auto r = run({"--mode", "bound", "--output", path.string()},
               R"({"class":"polynomial","n":1,"degree":2,"epsilons":["1/2"]})");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream file(path);
  std::stringstream ss;
  ss << file.rdbuf();
  CHECK(ss.str() == "epsilon,bound_paper,bound_safe\n1/2,3,3\n");
  std::filesystem::remove(path);
}

TEST_CASE("documents build profiles per class") {
  auto q = parse_document(R"({"class":"quasipoly","n":1,"degrees":[0,0],"frequencies":[[0],[1]],"degree_sums":[2]})");
  auto p = build_profile(q);
  CHECK(p.chat.size() == 2);
  // kappa = 3, safe degree floor 1: 1 * (1 + 7)^6 * 2^(3 + 15)
  CHECK(p.chat[1].safe_bound == Rational(pow(BigInt(8), 6) * pow(BigInt(2), 18)));
  auto e = parse_document(R"({"class":"expopoly","m":2,"lambda_hat":3})");
  CHECK(build_profile(e).chat[1].paper_bound == 29);
  auto s = parse_document(R"({"class":"semialgebraic","n":2,"degrees":[[2]]})");
  CHECK(build_profile(s).chat[2].safe_bound == 6);
  CHECK_THROWS_AS(build_function(s), InputError);
  auto l = parse_document(R"({"class":"laurent","n":2,"newton":[[-1,0],[1,0],[0,1],[0,-1]]})");
  CHECK_FALSE(default_clip(l));
  CHECK(build_profile(l).chat[2].safe_bound > 0);
}
