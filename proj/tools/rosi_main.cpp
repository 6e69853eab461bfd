#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rosi/builtins.hpp"
#include "rosi/error.hpp"
#include "rosi/pipeline.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw rosi::Error(rosi::Err::ParseError, "cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

rosi::Group load_group(const std::string& builtin, const std::string& groupFile,
                       std::string& name) {
  if (!builtin.empty()) {
    name = builtin;
    return rosi::make_builtin(builtin);
  }
  if (groupFile.empty())
    throw rosi::Error(rosi::Err::ParseError, "need --builtin or --group");
  name = groupFile;
  rosi::GroupText gt = rosi::parse_group_text(read_file(groupFile));
  return rosi::Group::closure(gt.degree, gt.generators);
}

int emit(const rosi::Outcome& out, const std::string& jsonOut) {
  std::string text = out.report.dump(2);
  std::cout << text << "\n";
  if (!jsonOut.empty()) {
    std::ofstream f(jsonOut);
    f << text << "\n";
  }
  std::cerr << "overall: " << out.report.value("overall", std::string("?")) << "\n";
  return out.exitCode;
}

int exit_code_for(const rosi::Error& e) {
  switch (e.kind) {
    case rosi::Err::ParseError:
    case rosi::Err::UnknownBuiltin:
      return 2;
    case rosi::Err::OrderBoundExceeded:
      return 3;
    case rosi::Err::BoundaryNotSquareZero:
      return 4;
    default:
      return 1;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"verifier for sphere actions with rank one isotropy"};
  app.require_subcommand(1);

  std::string builtin, groupFile, characterFile, complexFile, nbarFile, jsonOut,
      tableFile;
  int onlyPrime = 0, localPrime = 0;
  bool autoIsotropy = false;

  auto* check = app.add_subcommand("check", "run the verification pipeline");
  check->add_option("--builtin", builtin, "builtin group name (A6, S5, Qd3, ...)");
  check->add_option("--group", groupFile, "group file (degree + generators)");
  check->add_option("--p", onlyPrime, "restrict the analysis to one prime");
  check->add_option("--character-file", characterFile,
                    "JSON fixed-dimension tables per prime");
  check->add_flag("--auto-isotropy", autoIsotropy,
                  "construct characters avoiding classes that fail the rank "
                  "condition");
  check->add_option("--json-out", jsonOut, "also write the report here");

  auto* cplx = app.add_subcommand("complex", "check a cell complex");
  cplx->add_option("--builtin", builtin, "builtin group name");
  cplx->add_option("--group", groupFile, "group file");
  cplx->add_option("--complex", complexFile, "cell complex JSON")->required();
  cplx->add_option("--nbar", nbarFile, "dimension function JSON");
  cplx->add_option("--local", localPrime, "report homology p-locally");
  cplx->add_option("--json-out", jsonOut, "also write the report here");

  auto* gold = app.add_subcommand("goldens", "recompute the reference fact table");
  gold->add_option("--table", tableFile, "expected fact table JSON");
  gold->add_option("--json-out", jsonOut, "also write the report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      std::string name;
      rosi::Group g = load_group(builtin, groupFile, name);
      rosi::CheckOptions opt;
      if (onlyPrime > 0) opt.onlyPrime = onlyPrime;
      opt.autoIsotropy = autoIsotropy;
      if (!characterFile.empty()) opt.characterFileJson = read_file(characterFile);
      return emit(rosi::run_check(g, name, opt), jsonOut);
    }
    if (cplx->parsed()) {
      std::string name;
      rosi::Group g = load_group(builtin, groupFile, name);
      std::string nbarJson = nbarFile.empty() ? "" : read_file(nbarFile);
      std::optional<int> local;
      if (localPrime > 0) local = localPrime;
      return emit(rosi::run_complex(g, read_file(complexFile), nbarJson, local),
                  jsonOut);
    }
    if (gold->parsed()) {
      std::string table = tableFile.empty() ? "" : read_file(tableFile);
      return emit(rosi::run_goldens(table), jsonOut);
    }
  } catch (const rosi::Error& e) {
    nlohmann::json err;
    err["error"] = rosi::err_name(e.kind);
    err["message"] = e.what();
    std::cout << err.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
