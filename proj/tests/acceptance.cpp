// Acceptance checks, one output line per criterion. Exit status is nonzero
// when any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vitushkin/bounds.hpp"
#include "vitushkin/cli/commands.hpp"
#include "vitushkin/diagram.hpp"
#include "vitushkin/empirical.hpp"
#include "vitushkin/polytope.hpp"

using namespace vitushkin;

namespace {

// Pinned limits.
constexpr double kFormulaSeconds = 1.0;
constexpr double kCoincidenceSeconds = 1.0;
constexpr double kOracleSeconds = 10.0;
constexpr double kSoundnessSeconds = 60.0;
constexpr int kRandom2d = 60;
constexpr int kRandom3d = 25;
constexpr int kRandomMasks = 120;
constexpr std::size_t kMaxMaskSide = 256;
constexpr std::size_t kSectionResolution = 64;
constexpr std::size_t kSamplesPerAxis = 4;
const std::vector<Rational> kOffsets{Rational(1, 10), Rational(3, 10), Rational(1, 2), Rational(7, 10), Rational(9, 10)};

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

LatticePolytope simplex(std::size_t n, std::int64_t d) {
  std::vector<LatticePoint> pts{LatticePoint{std::vector<std::int64_t>(n, 0)}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = d;
    pts.emplace_back(e);
  }
  return convex_hull(pts);
}

struct Loaded {
  std::string name;
  cli::ProblemDocument doc;
  RealFunction f;
  BoundProfile profile;
};

std::vector<Loaded> load_suite() {
  std::vector<Loaded> out;
  for (const auto& fx : fixtures::suite()) {
    auto doc = cli::parse_document(fx.document);
    out.push_back({fx.name, doc, cli::build_function(doc), cli::build_profile(doc)});
  }
  return out;
}

std::vector<Rational> epsilons_for(std::size_t n) {
  if (n == 3) return {Rational(1, 4), Rational(1, 8)};
  return {Rational(1, 4), Rational(1, 8), Rational(1, 16), Rational(1, 32)};
}

// Every coordinate-parallel section of dimension 1 or 2 with the pinned offsets.
std::vector<SectionSpec> sections_for(std::size_t n) {
  std::vector<SectionSpec> out;
  const auto& offs = kOffsets;
  if (n <= 2) out.push_back({n, {}});
  for (std::size_t a = 0; a < n; ++a) {
    if (n - 1 < 1 || n - 1 > 2) continue;
    for (const auto& v : offs) out.push_back({n, {{a, v}}});
  }
  if (n == 3) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (const auto& va : offs)
          for (const auto& vb : offs) out.push_back({n, {{a, va}, {b, vb}}});
  }
  return out;
}

std::string with_extra(const std::string& doc, const std::string& extra) {
  return doc.substr(0, doc.find_last_of('}')) + "," + extra + "}";
}

std::string epsilons_json(const std::vector<Rational>& eps) {
  std::string s = "\"epsilons\":[";
  for (std::size_t i = 0; i < eps.size(); ++i) s += (i ? ",\"" : "\"") + to_string(eps[i]) + "\"";
  return s + "]";
}

std::string sections_json(const std::vector<SectionSpec>& secs) {
  std::string s = "\"sections\":[";
  for (std::size_t i = 0; i < secs.size(); ++i) {
    s += i ? ",{\"fixed\":[" : "{\"fixed\":[";
    for (std::size_t k = 0; k < secs[i].fixed.size(); ++k) {
      s += (k ? "," : "") + std::string("[") + std::to_string(secs[i].fixed[k].first + 1) + ",\"" +
           to_string(secs[i].fixed[k].second) + "\"]";
    }
    s += "],\"resolution\":" + std::to_string(kSectionResolution) + "}";
  }
  return s + "]";
}

int run_in_process(const std::string& mode, const std::string& doc, std::string& out) {
  std::istringstream in(doc);
  std::ostringstream os;
  std::ostringstream err;
  const int code = cli::run_cli({"--mode", mode, "-"}, in, os, err);
  out = os.str();
  return code;
}

// Criterion 1
Outcome exact_formulas() {
  Outcome o;
  const auto t0 = Clock::now();
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned d = 1; d <= 6; ++d)
      for (std::size_t s = 1; s <= n; ++s) {
        const unsigned su = static_cast<unsigned>(s);
        const auto b = chat_bezout({n, d}, s);
        const Rational printed = d > s ? Rational(pow(BigInt(d - su), su)) : Rational(0);
        if (b.paper_bound != printed || b.safe_bound != Rational(pow(BigInt(d - 1), su))) o.fail("bezout mismatch");
        const auto m = chat_multidegree({n, d}, s);
        if (m.paper_bound != oracle::ratio(pow(BigInt(d), su), factorial(su)) ||
            m.safe_bound != Rational(factorial(su) * pow(BigInt(d), su)))
          o.fail("multidegree mismatch");
        for (std::size_t l = 1; l <= n; ++l) {
          SemialgebraicDiagram sd{n, {{d}, {1, d}}};
          const unsigned lu = static_cast<unsigned>(l);
          const Rational expect = oracle::ratio(BigInt(d + 2) * pow(BigInt(d + 1), lu - 1) +
                                                   BigInt(d + 3) * pow(BigInt(d + 2), lu - 1),
                                               2);
          if (chat_semialgebraic(sd, l) != expect) o.fail("semialgebraic mismatch");
        }
      }
  for (unsigned a = 0; a <= 6; ++a)
    for (unsigned b = 0; b <= 6; ++b)
      for (unsigned k = 0; k <= 3; ++k)
        for (unsigned p = 0; p <= 3; ++p) {
          std::vector<unsigned> mv{a, b};
          const BigInt expect = BigInt(a * b) * pow(BigInt(a + b + p + 1), p + k) *
                                pow(BigInt(2), p + (p + k) * (p + k - (p + k > 0 ? 1 : 0)) / 2);
          if (khovanskii_system_bound(mv, k, p) != expect) o.fail("khovanskii mismatch");
        }
  for (unsigned m = 0; m <= 6; ++m)
    for (unsigned lam = 0; lam <= 6; ++lam) {
      if (chat_exponential({1, m, static_cast<double>(lam), false}, 1.0).paper_bound != 4 * m + 7 * lam)
        o.fail("exponential mismatch");
      if (chat_exponential({1, m, static_cast<double>(lam), true}, 1.0).safe_bound != m) o.fail("real exponential mismatch");
    }
  const std::vector<unsigned> ones{1, 1};
  if (chat_bezout({2, 3}, 2).paper_bound != 1) o.fail("(d=3,s=2) is not 1");
  if (khovanskii_system_bound(ones, 1, 0) != 3) o.fail("khovanskii (1,1),k=1,p=0 is not 3");
  if (chat_semialgebraic({2, {{2}}}, 2) != 6) o.fail("semialgebraic (d=2,l=2) is not 6");
  if (chat_exponential({1, 2, 3.0, false}, 1.0).paper_bound != 29) o.fail("exponential (m=2,lambda=3) is not 29");
  const double t = seconds_since(t0);
  if (t >= kFormulaSeconds) o.fail("too slow");
  if (o.pass) o.detail = "sweep n<=4, d<=6 and worked substitutions exact";
  return o;
}

// Criterion 2
Outcome coincidence() {
  Outcome o;
  const auto t0 = Clock::now();
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::int64_t d = 1; d <= 6; ++d) {
      const Rational lhs = Rational(factorial(static_cast<unsigned>(n))) * volume(simplex(n, d)).value;
      if (lhs != Rational(pow(BigInt(d), static_cast<unsigned>(n)))) {
        o.fail("n=" + std::to_string(n) + " d=" + std::to_string(d) + " gives " + to_string(lhs));
      }
    }
  if (seconds_since(t0) >= kCoincidenceSeconds) o.fail("too slow");
  if (o.pass) o.detail = "n! Vol(simplex_d) = d^n for n<=4, d<=6";
  return o;
}

// Criterion 3
Outcome polytope_oracles() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> c2(-8, 8);
  std::uniform_int_distribution<int> k2(3, 12);
  int checked2 = 0;
  while (checked2 < kRandom2d) {
    std::vector<oracle::P2> raw;
    const int k = k2(rng);
    for (int i = 0; i < k; ++i) raw.push_back({c2(rng), c2(rng)});
    auto cycle = oracle::monotone_chain(raw);
    if (cycle.size() < 3 || cycle.size() > 12) continue;
    std::vector<LatticePoint> pts;
    for (const auto& p : raw) pts.emplace_back(std::vector<std::int64_t>{p[0], p[1]});
    if (ambient_volume(convex_hull(pts)) != oracle::shoelace(cycle)) o.fail("2-D mismatch");
    ++checked2;
  }
  std::uniform_int_distribution<std::int64_t> c3(-4, 4);
  std::uniform_int_distribution<int> k3(4, 10);
  int checked3 = 0;
  while (checked3 < kRandom3d) {
    std::vector<oracle::P3> raw;
    const int k = k3(rng);
    for (int i = 0; i < k; ++i) raw.push_back({c3(rng), c3(rng), c3(rng)});
    const Rational expect = oracle::fan_volume_3d(raw);
    if (expect == 0) continue;
    std::vector<LatticePoint> pts;
    for (const auto& p : raw) pts.emplace_back(std::vector<std::int64_t>{p[0], p[1], p[2]});
    if (volume(convex_hull(pts)).value != expect) o.fail("3-D mismatch");
    ++checked3;
  }
  if (seconds_since(t0) >= kOracleSeconds) o.fail("too slow");
  if (o.pass) o.detail = std::to_string(checked2) + " 2-D and " + std::to_string(checked3) + " 3-D instances exact";
  return o;
}

// Criterion 4
Outcome discrepancy_flags() {
  Outcome o;
  // Circle x^2+y^2 = 1/16 around the cube centre: one boundary component.
  auto x = MonomialSum::variable(2, 0) - MonomialSum::constant(2, Rational(1, 2));
  auto y = MonomialSum::variable(2, 1) - MonomialSum::constant(2, Rational(1, 2));
  auto circle = RealFunction::polynomial(x * x + y * y, 1.0 / 16);
  const BoundPair bez = chat_bezout({2, 2}, 2);
  const auto rep = count_components_boundary(circle, {2, {}}, 128, bez);
  if (!bez.degenerate) o.fail("circle witness not flagged");
  if (rep.components != 1) o.fail("circle has " + std::to_string(rep.components) + " components");
  if (!(Rational(1) > bez.paper_bound) || Rational(static_cast<unsigned long>(rep.components)) > bez.safe_bound)
    o.fail("circle witness versus bounds");
  // xy: the gradient (y, x) vanishes only at the origin.
  int critical = 0;
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b)
      if (b == 0 && a == 0) ++critical;
  const BoundPair md = chat_multidegree({2, 1}, 2);
  if (!md.degenerate) o.fail("xy witness not flagged");
  if (!(Rational(critical) > md.paper_bound) || Rational(critical) > md.safe_bound) o.fail("xy witness versus bounds");
  if (o.pass) {
    o.detail = "circle 1 vs paper " + to_string(bez.paper_bound) + " / safe " + to_string(bez.safe_bound) +
               "; xy 1 vs paper " + to_string(md.paper_bound) + " / safe " + to_string(md.safe_bound) + "; both flagged";
  }
  return o;
}

struct SoundnessData {
  std::vector<std::pair<std::string, std::vector<CoverReport>>> reports;
};

// Criterion 5
Outcome soundness(const std::vector<Loaded>& suite, SoundnessData& data) {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t rows = 0;
  for (const auto& fx : suite) {
    const auto eps = epsilons_for(fx.doc.n);
    auto reps = verify(fx.f, fx.profile, eps, kSamplesPerAxis, 4);
    for (const auto& r : reps) {
      ++rows;
      if (r.violation) {
        o.fail(fx.name + " at eps=" + to_string(r.epsilon) + ": " + std::to_string(r.counts.occupied) + " > " +
               to_string(r.safe_bound));
      }
    }
    data.reports.emplace_back(fx.name, reps);
    std::string out;
    const int code = run_in_process("verify", with_extra(fixtures::suite()[&fx - suite.data()].document, epsilons_json(eps)), out);
    if (code != 0) o.fail(fx.name + " verify exit code " + std::to_string(code));
  }
  if (seconds_since(t0) >= kSoundnessSeconds) o.fail("too slow");
  if (o.pass) o.detail = std::to_string(suite.size()) + " fixtures, " + std::to_string(rows) + " rows within the safe bound, exit 0";
  return o;
}

// Criterion 6
Outcome nesting(const std::vector<Loaded>& suite, const SoundnessData& data) {
  Outcome o;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto& reps = data.reports[i].second;
    const std::uint64_t factor = std::uint64_t{1} << suite[i].doc.n;
    for (std::size_t k = 0; k + 1 < reps.size(); ++k) {
      ++pairs;
      const auto a = reps[k].counts.occupied;
      const auto b = reps[k + 1].counts.occupied;
      if (!(a <= b && b <= factor * a)) {
        o.fail(suite[i].name + " eps=" + to_string(reps[k].epsilon) + ": " + std::to_string(a) + " -> " + std::to_string(b));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " eps pairs nested";
  return o;
}

// Criterion 7
Outcome union_find(const std::vector<Loaded>& suite) {
  Outcome o;
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < kRandomMasks; ++trial) {
    const std::size_t w = 1 + rng() % kMaxMaskSide;
    const std::size_t h = 1 + rng() % kMaxMaskSide;
    std::bernoulli_distribution bit(0.3 + 0.4 * static_cast<double>(rng() % 64) / 64.0);
    std::vector<std::uint8_t> mask(w * h);
    for (auto& m : mask) m = bit(rng) ? 1 : 0;
    std::vector<std::size_t> shape{w, h};
    const auto expect = oracle::flood_fill_components(mask, shape);
    if (count_components(mask, shape) != expect) o.fail("random mask mismatch");
    // Shuffled union order.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t yy = 0; yy < h; ++yy)
      for (std::size_t xx = 0; xx < w; ++xx) {
        const std::size_t i = yy * w + xx;
        if (!mask[i]) continue;
        if (xx + 1 < w && mask[i + 1]) edges.emplace_back(i, i + 1);
        if (yy + 1 < h && mask[i + w]) edges.emplace_back(i, i + w);
      }
    std::shuffle(edges.begin(), edges.end(), rng);
    UnionFind uf(mask.size());
    for (auto [a, b] : edges) uf.unite(a, b);
    const auto unmarked = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 0));
    if (uf.classes() - unmarked != expect) o.fail("shuffled union order changed the count");
  }
  std::size_t sections = 0;
  for (const auto& fx : suite)
    for (const auto& sec : sections_for(fx.doc.n))
      for (auto mode : {SectionMode::Sublevel, SectionMode::Boundary}) {
        const auto m = section_mask(fx.f, sec, kSectionResolution, mode, 2);
        ++sections;
        if (count_components(m.mask, m.shape) != oracle::flood_fill_components(m.mask, m.shape)) {
          o.fail(fx.name + " section " + sec.label());
        }
      }
  if (o.pass) {
    o.detail = std::to_string(kRandomMasks) + " random masks and " + std::to_string(sections) + " fixture section masks agree";
  }
  return o;
}

// Criterion 8
Outcome gabrielov(const std::vector<Loaded>& suite) {
  Outcome o;
  std::size_t total = 0;
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto& fx = suite[i];
    const auto secs = sections_for(fx.doc.n);
    for (const auto& sec : secs) {
      ++total;
      const auto rep = count_components_boundary(fx.f, sec, kSectionResolution, fx.profile.chat.at(sec.s()), 2);
      if (rep.violation) {
        bad.push_back(fx.name + "[" + sec.label() + "] " + std::to_string(rep.components) + ">" + to_string(rep.chat_safe));
      }
    }
    std::string out;
    const int code = run_in_process("gabrielov", with_extra(fixtures::suite()[i].document, sections_json(secs)), out);
    if (code != 0) o.fail("exit code " + std::to_string(code));
  }
  if (!bad.empty()) {
    std::string d = std::to_string(bad.size()) + " of " + std::to_string(total) + " sections exceed safe Chat_s:";
    for (std::size_t k = 0; k < bad.size(); ++k) d += " " + bad[k] + ";";
    o.pass = false;
    o.detail = d;
  } else if (o.pass) {
    o.detail = std::to_string(total) + " sections within safe Chat_s, exit 0";
  }
  return o;
}

int run_binary(const std::string& args, const std::filesystem::path& out, std::string& text) {
  const std::string cmd = std::string("\"") + VITUSHKIN_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream f(out, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  text = ss.str();
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Criterion 9
Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "vitushkin_acceptance";
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream(dir / name, std::ios::binary) << body;
    return (dir / name).string();
  };
  const std::string pass_doc = write(
      "pass.json", with_extra(fixtures::suite()[3].document,
                              epsilons_json(epsilons_for(2)) + "," + sections_json(sections_for(2))));
  const std::string violation_doc = write(
      "violation.json", R"({"class":"polynomial","n":2,"terms":[{"coeff":1,"exp":[1,0]}],"rho":"1/2",)"
                        R"("epsilons":["1/4"],"mu":0,"chat_override":[0,0,0]})");
  const std::string bad_doc = write("malformed.json", R"({"class":"polynomial","n":2,)");
  const auto out = dir / "out.csv";

  for (const std::string mode : {"verify", "gabrielov", "bound"}) {
    std::string first;
    for (int threads : {1, 4}) {
      for (int rep = 0; rep < 3; ++rep) {
        std::string text;
        const int code = run_binary("--mode " + mode + " --threads " + std::to_string(threads) + " \"" + pass_doc + "\"", out, text);
        if (code != 0) o.fail(mode + " pass fixture exit " + std::to_string(code));
        if (first.empty()) first = text;
        if (text != first || text.empty()) o.fail(mode + " output differs across runs or threads");
      }
    }
  }
  std::string text;
  if (run_binary("--mode verify \"" + violation_doc + "\"", out, text) != 1) o.fail("forced violation did not exit 1");
  if (text.find("violation") == std::string::npos) o.fail("forced violation row missing its flag");
  if (run_binary("--mode verify \"" + bad_doc + "\"", out, text) != 2) o.fail("malformed document did not exit 2");
  if (!text.empty()) o.fail("malformed document produced output");
  std::filesystem::remove_all(dir);
  if (o.pass) o.detail = "3 runs x threads {1,4} byte-identical; exit codes 0/1/2 as expected";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::string& title, const std::function<Outcome()>& check) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = seconds_since(t0) * 1000.0;
    if (!o.pass) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.0f ms", ms);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << title << " (" << timing << "): " << o.detail
              << std::endl;
  };

  std::vector<Loaded> suite;
  SoundnessData data;
  report(1, "exact formula reproduction", exact_formulas);
  report(2, "Bezout/Kushnirenko coincidence", coincidence);
  report(3, "polytope oracle equivalence", polytope_oracles);
  report(4, "documented-discrepancy flags", discrepancy_flags);
  suite = load_suite();
  report(5, "empirical covering soundness", [&] { return soundness(suite, data); });
  report(6, "grid nesting", [&] { return nesting(suite, data); });
  report(7, "union-find vs flood fill", [&] { return union_find(suite); });
  report(8, "section component checks", [&] { return gabrielov(suite); });
  report(9, "CLI determinism and exit codes", determinism);
  return failures == 0 ? 0 : 1;
}
