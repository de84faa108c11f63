// bspoly: command-line front end for the BS-convexity checkers.
//
//   bspoly check <axiom> <file>
//   bspoly decompose <file> --p 0,0 --q 1,1
//   bspoly enumerate <file> [--box lo,hi | --lo l1,..,ld --hi h1,..,hd]
//   bspoly fuzz --dim D (--exhaustive --range R | --count N --seed S)
//
// Exit status: 0 pass, 1 fail, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bspoly/axioms.h"
#include "bspoly/bisubmod.h"
#include "bspoly/exchange.h"
#include "bspoly/json_io.h"
#include "bspoly/oracle.h"

namespace {

using bspoly::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

struct Options {
  bool pretty = false;

  std::string axiom;
  std::string file;

  std::string p, q;

  std::string box, lo, hi;

  bspoly::HarnessConfig fuzz;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void Emit(const Json& doc, const Options& opt) {
  std::cout << (opt.pretty ? doc.dump(2) : doc.dump()) << "\n";
}

const bspoly::PointSet& RequireSet(const bspoly::Instance& inst) {
  if (const auto* set = std::get_if<bspoly::PointSet>(&inst)) return *set;
  throw UsageError("this command needs a \"set\" instance");
}

const bspoly::BisubFunction& RequireFunction(const bspoly::Instance& inst) {
  if (const auto* f = std::get_if<bspoly::BisubFunction>(&inst)) return *f;
  throw UsageError("this command needs a \"function\" instance");
}

int RunCheck(const Options& opt) {
  const bspoly::Instance inst = bspoly::LoadInstance(opt.file);
  Json doc;
  bool pass = false;
  if (opt.axiom == "bisubmodular") {
    const bspoly::Verdict v = bspoly::CheckBisubmodular(RequireFunction(inst));
    doc = bspoly::ToJson(v);
    pass = v.pass;
  } else if (opt.axiom == "bs-convex") {
    const bspoly::OracleResult r = bspoly::IsBsConvex(RequireSet(inst));
    doc = bspoly::ToJson(r);
    pass = r.bs_convex;
  } else {
    const bspoly::PointSet& set = RequireSet(inst);
    bspoly::Verdict v;
    if (opt.axiom == "delta-exc") {
      v = bspoly::CheckDeltaExc(set);
    } else if (opt.axiom == "bs-exc") {
      v = bspoly::CheckBsExc(set);
    } else if (opt.axiom == "jump") {
      v = bspoly::CheckJumpSystem(set);
    } else if (opt.axiom == "hole-free") {
      v = bspoly::CheckHoleFree(set);
    } else {
      throw UsageError("unknown axiom \"" + opt.axiom + "\"");
    }
    doc = bspoly::ToJson(v);
    pass = v.pass;
  }
  doc["axiom"] = opt.axiom;
  Emit(doc, opt);
  return pass ? kPass : kFail;
}

int RunDecompose(const Options& opt) {
  const bspoly::Instance inst = bspoly::LoadInstance(opt.file);
  const bspoly::PointSet& set = RequireSet(inst);
  const bspoly::IntPoint p = bspoly::ParsePointList(opt.p);
  const bspoly::IntPoint q = bspoly::ParsePointList(opt.q);
  if (p.dim() != set.dim() || q.dim() != set.dim()) {
    throw UsageError("--p and --q must have dimension " +
                     std::to_string(set.dim()));
  }
  if (!set.contains(p) || !set.contains(q)) {
    throw UsageError("--p and --q must be members of the set");
  }
  const bspoly::DecomposeResult r = bspoly::Decompose(set, p, q);
  if (const auto* d = std::get_if<bspoly::Decomposition>(&r)) {
    Json doc = bspoly::ToJson(*d);
    doc["status"] = "found";
    Emit(doc, opt);
    return kPass;
  }
  Json doc = {{"status", "no-decomposition"},
              {"p", bspoly::ToJson(p)},
              {"q", bspoly::ToJson(q)},
              {"reason", bspoly::ToString(
                             std::get<bspoly::NoDecomposition>(r).reason)}};
  Emit(doc, opt);
  return kFail;
}

int RunEnumerate(const Options& opt) {
  const bspoly::Instance inst = bspoly::LoadInstance(opt.file);
  const bspoly::BisubFunction& f = RequireFunction(inst);
  std::optional<bspoly::Box> box;
  if (!opt.box.empty()) {
    const bspoly::IntPoint bounds = bspoly::ParsePointList(opt.box);
    if (bounds.dim() != 2) throw UsageError("--box takes lo,hi");
    box = bspoly::Box{bspoly::IntPoint(f.dim()), bspoly::IntPoint(f.dim())};
    for (bspoly::Coord u = 0; u < f.dim(); ++u) {
      box->lower[u] = bounds[0];
      box->upper[u] = bounds[1];
    }
  } else if (!opt.lo.empty() || !opt.hi.empty()) {
    if (opt.lo.empty() || opt.hi.empty()) {
      throw UsageError("--lo and --hi go together");
    }
    box = bspoly::Box{bspoly::ParsePointList(opt.lo),
                      bspoly::ParsePointList(opt.hi)};
    if (box->lower.dim() != f.dim() || box->upper.dim() != f.dim()) {
      throw UsageError("box corners must have dimension " +
                       std::to_string(f.dim()));
    }
  }
  const auto points = bspoly::EnumerateIntegerPoints(f, box);
  Emit(bspoly::PointsToJson(f.dim(), points), opt);
  return kPass;
}

int RunFuzz(const Options& opt) {
  const bspoly::EquivalenceReport report =
      bspoly::RunEquivalenceHarness(opt.fuzz);
  const Json doc = bspoly::ToJson(report);
  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    if (!out) throw UsageError("cannot write " + opt.out);
    out << (opt.pretty ? doc.dump(2) : doc.dump()) << "\n";
  } else {
    Emit(doc, opt);
  }
  return report.disagreements.empty() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide BS-convexity of finite integer point sets"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--pretty", opt.pretty, "Indent JSON output");

  auto* check = app.add_subcommand("check", "Run one checker on an instance");
  check->add_option("axiom", opt.axiom,
                    "delta-exc | bs-exc | jump | hole-free | bisubmodular | "
                    "bs-convex")
      ->required();
  check->add_option("file", opt.file, "Instance JSON")->required();

  auto* decompose =
      app.add_subcommand("decompose", "Half-integral exchange decomposition");
  decompose->add_option("file", opt.file, "Set instance JSON")->required();
  decompose->add_option("--p", opt.p, "Source point, e.g. 0,0")->required();
  decompose->add_option("--q", opt.q, "Target point, e.g. 1,1")->required();

  auto* enumerate =
      app.add_subcommand("enumerate", "Integer points of P(f)");
  enumerate->add_option("file", opt.file, "Function instance JSON")
      ->required();
  enumerate->add_option("--box", opt.box, "Cube bounds lo,hi");
  enumerate->add_option("--lo", opt.lo, "Lower box corner");
  enumerate->add_option("--hi", opt.hi, "Upper box corner");

  auto* fuzz = app.add_subcommand("fuzz", "Three-way equivalence harness");
  fuzz->add_option("--dim", opt.fuzz.dim, "Dimension")->required();
  fuzz->add_flag("--exhaustive", opt.fuzz.exhaustive,
                 "All nonempty subsets of {0..range-1}^dim");
  fuzz->add_option("--range", opt.fuzz.range, "Grid side for --exhaustive");
  fuzz->add_option("--count", opt.fuzz.count, "Random instances");
  fuzz->add_option("--seed", opt.fuzz.seed, "Seed of the first instance");
  fuzz->add_option("--radius", opt.fuzz.radius, "Random box radius");
  fuzz->add_option("--density", opt.fuzz.density, "Inclusion probability");
  fuzz->add_option("--out", opt.out, "Write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*check) return RunCheck(opt);
    if (*decompose) return RunDecompose(opt);
    if (*enumerate) return RunEnumerate(opt);
    if (*fuzz) {
      if (opt.fuzz.exhaustive && opt.fuzz.range < 1) {
        throw UsageError("--exhaustive needs --range >= 1");
      }
      return RunFuzz(opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "bspoly: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
