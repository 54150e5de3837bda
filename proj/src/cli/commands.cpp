#include "vitushkin/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vitushkin/errors.hpp"

namespace vitushkin::cli {

namespace {

std::string axes_label(const std::vector<std::size_t>& axes) {
  std::string out;
  for (auto a : axes) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a + 1);
  }
  return out;
}

std::string coords_label(const LatticePoint& p) {
  std::string out;
  for (auto c : p.coords) {
    if (!out.empty()) out += ' ';
    out += std::to_string(c);
  }
  return out;
}

std::string read_all(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

CommandResult cmd_bound(const ProblemDocument& doc) {
  const AssembledBound bound = assemble(build_profile(doc));
  CommandResult r;
  r.csv = "epsilon,bound_paper,bound_safe\n";
  for (const auto& row : bound_table(bound, doc.epsilons)) {
    r.csv += to_string(row.epsilon) + ',' + to_string(row.paper) + ',' + to_string(row.safe) + '\n';
  }
  return r;
}

CommandResult cmd_polytope(const ProblemDocument& doc) {
  if (doc.cls != FunctionClass::Polynomial && doc.cls != FunctionClass::MultiDegree &&
      doc.cls != FunctionClass::Laurent) {
    throw InputError("field 'class': polytope reports need a polynomial, multidegree or laurent document");
  }
  const LatticePolytope p = document_polytope(doc);
  const bool clip = default_clip(doc);
  CommandResult r;
  r.csv = "record,s,axes,value\n";
  for (const auto& v : p.vertices()) r.csv += "vertex,,," + coords_label(v) + '\n';
  const Volume vol = volume(p);
  r.csv += "volume," + std::to_string(vol.dim) + ",," + to_string(vol.value) + '\n';
  for (std::size_t s = 1; s <= p.ambient_dim(); ++s) {
    const ShiftedProfile prof = c_s_profile(p, s, clip);
    r.csv += "c_s," + std::to_string(s) + ',' + axes_label(prof.axes) + ',' + to_string(prof.value) + '\n';
  }
  return r;
}

CommandResult cmd_verify(const ProblemDocument& doc, std::size_t threads) {
  const RealFunction f = build_function(doc);
  const BoundProfile profile = build_profile(doc);
  CommandResult r;
  r.csv = "epsilon,interior,boundary,occupied,bound_paper,bound_safe,flag\n";
  for (const auto& rep : verify(f, profile, doc.epsilons, doc.samples_per_axis, threads)) {
    r.csv += to_string(rep.epsilon) + ',' + std::to_string(rep.counts.interior) + ',' +
             std::to_string(rep.counts.boundary) + ',' + std::to_string(rep.counts.occupied) + ',' +
             to_string(rep.paper_bound) + ',' + to_string(rep.safe_bound) + ',' +
             (rep.violation ? "violation" : "") + '\n';
    r.violation = r.violation || rep.violation;
  }
  return r;
}

CommandResult cmd_gabrielov(const ProblemDocument& doc, std::size_t threads) {
  const RealFunction f = build_function(doc);
  const BoundProfile profile = build_profile(doc);
  CommandResult r;
  r.csv = "section,s,mode,resolution,components,chat_paper,chat_safe,flag\n";
  for (const auto& req : doc.sections) {
    const BoundPair& chat = profile.chat.at(req.spec.s());
    const ComponentReport rep = req.mode == SectionMode::Boundary
                                    ? count_components_boundary(f, req.spec, req.resolution, chat, threads)
                                    : count_components_sublevel(f, req.spec, req.resolution, chat, threads);
    r.csv += rep.section.label() + ',' + std::to_string(rep.section.s()) + ',' +
             (rep.mode == SectionMode::Boundary ? "boundary" : "sublevel") + ',' + std::to_string(rep.resolution) +
             ',' + std::to_string(rep.components) + ',' + to_string(rep.chat_paper) + ',' +
             to_string(rep.chat_safe) + ',' + (rep.violation ? "violation" : "") + '\n';
    r.violation = r.violation || rep.violation;
  }
  return r;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covering-number bounds and empirical checks for sub-level sets", "vitushkin"};
  std::string mode = "bound";
  std::string output = "stdout";
  std::size_t threads = 1;
  std::string input;
  app.add_option("--mode", mode, "bound, polytope, verify, gabrielov or normalize")
      ->check(CLI::IsMember({"bound", "polytope", "verify", "gabrielov", "normalize"}));
  app.add_option("--output", output, "output file, or stdout");
  app.add_option("--threads", threads, "worker threads (speed only)")->check(CLI::Range(1, 256));
  app.add_option("input", input, "problem document path, or - for standard input")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    std::string text;
    if (input == "-") {
      text = read_all(in);
    } else {
      std::ifstream file(input, std::ios::binary);
      if (!file) throw InputError("cannot open input file '" + input + "'");
      text = read_all(file);
    }
    const ProblemDocument doc = parse_document(text);
    CommandResult result;
    if (mode == "bound") {
      result = cmd_bound(doc);
    } else if (mode == "polytope") {
      result = cmd_polytope(doc);
    } else if (mode == "verify") {
      result = cmd_verify(doc, threads);
    } else if (mode == "gabrielov") {
      result = cmd_gabrielov(doc, threads);
    } else {
      result.csv = normalize(doc);
    }

    if (output == "stdout" || output == "-") {
      out << result.csv;
      out.flush();
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file) throw InputError("cannot open output file '" + output + "'");
      file << result.csv;
    }
    return result.violation ? kExitViolation : kExitPass;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const std::length_error& e) {
    err << "input error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace vitushkin::cli
