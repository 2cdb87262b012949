// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "divflag/cli.h"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "divflag/catalog.h"
#include "divflag/freeness.h"
#include "divflag/json_io.h"
#include "divflag/lattice.h"
#include "divflag/multi.h"
#include "divflag/random.h"

namespace divflag {
namespace {

struct Options {
  std::string input;
  std::string catalog;
  CatalogParams params;
  std::string json_out;
  std::string certificate;
  std::string emit;
  std::string cert_path;
  int hyperplane = 0;
  std::int64_t budget = kDefaultIFBudget;
  int threads = 0;
  std::uint64_t seed = 1;
  int random = 0;
  bool list = false;
};

Arrangement LoadInput(const Options& o) {
  if (!o.catalog.empty() && !o.input.empty()) {
    throw std::invalid_argument("give either an arrangement file or --catalog, not both");
  }
  if (!o.catalog.empty()) return LookupCatalog(o.catalog, o.params).arrangement;
  if (o.input.empty()) {
    throw std::invalid_argument("no input: give an arrangement file or --catalog NAME");
  }
  const Json j = ReadJsonFile(o.input);
  try {
    return ArrangementFromJson(j);
  } catch (const JsonFormatError& e) {
    throw JsonFormatError(o.input + ": " + e.what());
  }
}

std::string Join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::string Join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::string Join(const std::vector<mpz_class>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i].get_str();
  return out;
}

Json BigListToJson(const std::vector<mpz_class>& v) {
  Json out = Json::array();
  for (const mpz_class& x : v) {
    out.push_back(x.fits_slong_p() ? Json(static_cast<std::int64_t>(x.get_si()))
                                   : Json(x.get_str()));
  }
  return out;
}

std::string Describe(const Arrangement& a) {
  return a.field().ToString() + ", dim " + std::to_string(a.dim()) + ", " +
         std::to_string(a.size()) + " hyperplanes";
}

void CheckHyperplane(const Arrangement& a, int h) {
  if (h < 0 || h >= a.size()) {
    throw std::invalid_argument("--hyperplane " + std::to_string(h) + " is out of range [0, " +
                                std::to_string(a.size()) + ")");
  }
}

// Each command fills `report` and returns an exit code.
using Command = std::function<int(const Options&, std::ostream&, Json&)>;

int CmdCharpoly(const Options& o, std::ostream& out, Json& report) {
  const Arrangement a = LoadInput(o);
  const CharData cd = ComputeCharData(a);
  const auto roots = LinearRoots(cd.chi);
  out << "arrangement: " << Describe(a) << "\n";
  out << "chi: " << cd.chi.ToString() << "\n";
  out << "chi0: " << (cd.chi0 ? cd.chi0->ToString() : "undefined") << "\n";
  out << "roots: " << (roots ? Join(*roots) : "not split over Z") << "\n";
  out << "betti: " << Join(cd.betti) << "\n";
  out << "poincare: " << cd.poincare.ToString() << "\n";
  report["chi"] = PolyToJson(cd.chi);
  report["chi0"] = cd.chi0 ? PolyToJson(*cd.chi0) : Json(nullptr);
  report["roots"] = roots ? Json(*roots) : Json(nullptr);
  report["betti"] = BigListToJson(cd.betti);
  report["poincare"] = PolyToJson(cd.poincare);
  return kExitCertified;
}

int CmdLattice(const Options& o, std::ostream& out, Json& report) {
  const Arrangement a = LoadInput(o);
  const IntersectionLattice lat = BuildLattice(a);
  const CharData cd = ComputeCharData(lat);
  out << "arrangement: " << Describe(a) << "\n";
  Json levels = Json::array();
  for (std::size_t i = 0; i < lat.levels.size(); ++i) {
    out << "L" << i << ": " << lat.levels[i].size() << " flats\n";
    Json level = Json::array();
    for (std::size_t j = 0; j < lat.levels[i].size(); ++j) {
      level.push_back(Json{{"members", lat.levels[i][j].members}, {"mobius", lat.mobius[i][j]}});
    }
    levels.push_back(std::move(level));
  }
  out << "chi: " << cd.chi.ToString() << "\n";
  report["level_sizes"] = lat.LevelSizes();
  report["levels"] = std::move(levels);
  report["chi"] = PolyToJson(cd.chi);
  return kExitCertified;
}

int CmdDfCheck(const Options& o, std::ostream& out, Json& report) {
  const Arrangement a = LoadInput(o);
  const auto flag = DivisionalFlagSearch(a);
  out << "arrangement: " << Describe(a) << "\n";
  if (!flag) {
    out << "divisionally free: no (exhaustive flag search)\n";
    report["divisionally_free"] = false;
    return kExitRefuted;
  }
  out << "divisionally free: yes\n";
  for (std::size_t i = 0; i < flag->flats.size(); ++i) {
    out << "  X" << i << " = {" << Join(flag->flats[i]) << "}  chi = "
        << flag->charpolys[i].ToString() << "\n";
  }
  if (flag->exponents) out << "exponents: " << Join(*flag->exponents) << "\n";
  report["divisionally_free"] = true;
  report["certificate"] = FlagToJson(*flag);
  if (!o.certificate.empty()) WriteJsonFile(o.certificate, FlagToJson(*flag));
  return kExitCertified;
}

int CmdIfCheck(const Options& o, std::ostream& out, Json& report) {
  const Arrangement a = LoadInput(o);
  const IFResult r = InductivelyFree(a, o.budget);
  out << "arrangement: " << Describe(a) << "\n";
  report["nodes"] = r.nodes;
  switch (r.outcome) {
    case IFOutcome::kCertified:
      out << "inductively free: yes (" << r.nodes << " nodes)\n";
      out << "addition order: ";
      for (std::size_t i = 0; i < r.certificate->steps.size(); ++i) {
        out << (i ? " " : "") << r.certificate->steps[i].hyperplane;
      }
      out << "\n";
      report["outcome"] = "certified";
      report["certificate"] = IFCertificateToJson(*r.certificate);
      if (!o.certificate.empty()) {
        WriteJsonFile(o.certificate, IFCertificateToJson(*r.certificate));
      }
      return kExitCertified;
    case IFOutcome::kNotIF:
      out << "inductively free: no (exhaustive, " << r.nodes << " nodes)\n";
      report["outcome"] = "refuted";
      return kExitRefuted;
    case IFOutcome::kExhausted:
      out << "inductively free: undecided (budget of " << o.budget << " nodes exhausted)\n";
      report["outcome"] = "exhausted";
      return kExitRefuted;
  }
  return kExitError;
}

int CmdHdfCheck(const Options& o, std::ostream& out, Json& report) {
  const Arrangement a = LoadInput(o);
  const HdfReport r = HereditarilyDf(a);
  out << "arrangement: " << Describe(a) << "\n";
  out << "hereditarily divisionally free: " << (r.ok ? "yes" : "no") << "\n";
  for (const auto& f : r.failing) out << "  fails at X = {" << Join(f) << "}\n";
  report["hereditarily_divisionally_free"] = r.ok;
  report["failing"] = r.failing;
  return r.ok ? kExitCertified : kExitRefuted;
}

int CmdFree3(const Options& o, std::ostream& out, Json& report) {
  const Arrangement a = LoadInput(o);
  CheckHyperplane(a, o.hyperplane);
  const Rank3FreenessReport r = Free3Decide(a, o.hyperplane);
  out << "arrangement: " << Describe(a) << "\n";
  out << "b2 gap at hyperplane " << r.witness_h << ": " << r.gap << "\n";
  report["free"] = r.free;
  report["gap"] = r.gap;
  report["hyperplane"] = r.witness_h;
  if (r.free) {
    out << "free: yes, exponents " << Join(*r.exponents) << "\n";
    report["exponents"] = *r.exponents;
    return kExitCertified;
  }
  out << "not free\n";
  report["exponents"] = nullptr;
  return kExitRefuted;
}

int CmdZiegler(const Options& o, std::ostream& out, Json& report) {
  const Arrangement a = LoadInput(o);
  CheckHyperplane(a, o.hyperplane);
  const MultiArrangement z = ZieglerRestriction(a, o.hyperplane);
  out << "restriction: " << Describe(z.base) << "\n";
  for (int i = 0; i < z.base.size(); ++i) {
    out << "  " << VectorToString(z.base.hyperplane(i)) << "  m = " << z.mult[i] << "\n";
  }
  const std::int64_t b2 = B2Multi(z);
  out << "|m| = " << z.Total() << "\n";
  out << "b2(A^H, m^H) = " << b2 << "\n";
  report["restriction"] = ArrangementToJson(z.base);
  report["multiplicity"] = z.mult;
  report["total"] = z.Total();
  report["b2_multi"] = b2;
  if (a.dim() >= 3) {
    const std::int64_t b2d = B2Deconed(a);
    out << "b2(dA) = " << b2d << "\n";
    report["b2_deconed"] = b2d;
  }
  return kExitCertified;
}

int CmdRemainder(const Options& o, std::ostream& out, Json& report) {
  const Arrangement a = LoadInput(o);
  CheckHyperplane(a, o.hyperplane);
  const RemainderReport r = RemainderDivision(a, o.hyperplane);
  out << "chi0(A) = (t - " << r.quotient_root << ") chi0(A^H) + r(t)\n";
  out << "r(t) = " << r.r.ToString() << "\n";
  out << "r_i: " << Join(r.alternating) << "\n";
  out << "r0 = " << r.r0.get_str() << "\n";
  report["hyperplane"] = r.pivot;
  report["quotient_root"] = r.quotient_root;
  report["r"] = PolyToJson(r.r);
  report["r_i"] = BigListToJson(r.alternating);
  return kExitCertified;
}

int CmdSameEq(const Options& o, std::ostream& out, Json& report) {
  const Arrangement a = LoadInput(o);
  CheckHyperplane(a, o.hyperplane);
  const SameEqReport r = SameEquivalences(a, o.hyperplane);
  auto show = [](const std::optional<bool>& v) {
    return v ? (*v ? "true" : "false") : "undefined";
  };
  auto json = [](const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); };
  out << "(4) chi(A^H) | chi(A):        " << (r.c4 ? "true" : "false") << "\n";
  out << "(5) chi(A^H) | chi(A'):       " << (r.c5 ? "true" : "false") << "\n";
  out << "(6) deg gcd(chi(A), chi(A')): " << (r.c6 ? "true" : "false") << "\n";
  out << "(7) r0 = 0:                   " << show(r.c7) << "\n";
  out << "(8) r0' = 0:                  " << show(r.c8) << "\n";
  out << "A^H free: " << show(r.restriction_free) << "\n";
  report["c4"] = r.c4;
  report["c5"] = r.c5;
  report["c6"] = r.c6;
  report["c7"] = json(r.c7);
  report["c8"] = json(r.c8);
  report["restriction_free"] = json(r.restriction_free);
  return kExitCertified;
}

int CmdCatalog(const Options& o, std::ostream& out, Json& report) {
  if (o.list || o.input.empty()) {
    for (const std::string& n : CatalogNames()) out << n << "\n";
    report["names"] = CatalogNames();
    return kExitCertified;
  }
  const CatalogEntry e = LookupCatalog(o.input, o.params);
  out << e.name << ": " << Describe(e.arrangement) << "\n";
  for (const Vector& v : e.arrangement.hyperplanes()) out << "  " << VectorToString(v) << "\n";
  if (e.expected_chi) out << "expected chi: " << e.expected_chi->ToString() << "\n";
  if (!e.note.empty()) out << "note: " << e.note << "\n";
  report["arrangement"] = ArrangementToJson(e.arrangement);
  report["expected_chi"] = e.expected_chi ? PolyToJson(*e.expected_chi) : Json(nullptr);
  report["note"] = e.note;
  if (!o.emit.empty()) WriteJsonFile(o.emit, ArrangementToJson(e.arrangement));
  return kExitCertified;
}

// Checks Möbius χ against the subset expansion and point counts. Returns
// false on any disagreement.
bool VerifyOracles(const Arrangement& a, std::mt19937_64& rng, std::ostream& out,
                   Json& report) {
  bool ok = true;
  const IntPoly chi = CharPoly(a);
  report["chi"] = PolyToJson(chi);
  if (a.size() <= kWhitneyCap) {
    const bool same = WhitneyOracle(a) == chi;
    out << "subset expansion: " << (same ? "agrees" : "DISAGREES") << "\n";
    report["whitney"] = same;
    ok &= same;
  } else {
    out << "subset expansion: skipped (" << a.size() << " hyperplanes)\n";
    report["whitney"] = nullptr;
  }
  std::vector<std::uint64_t> candidates;
  if (a.field().is_rational()) {
    for (std::uint64_t q = 2; q < 200; ++q) {
      if (IsPrime(q)) candidates.push_back(q);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
  } else {
    candidates.push_back(a.field().modulus());
  }
  Json counts = Json::array();
  int done = 0;
  for (std::uint64_t q : candidates) {
    if (done == 2) break;
    mpz_class count;
    try {
      count = PointCountOracle(a, q);
    } catch (const std::invalid_argument&) {
      continue;  // bad prime or too many points
    }
    const mpz_class expected = chi.Evaluate(mpz_class(static_cast<unsigned long>(q)));
    const bool same = count == expected;
    out << "point count over F_" << q << ": " << count.get_str() << " vs chi(" << q
        << ") = " << expected.get_str() << (same ? "  agrees" : "  DISAGREES") << "\n";
    counts.push_back(Json{{"q", q}, {"count", count.get_str()}, {"agrees", same}});
    ok &= same;
    ++done;
  }
  if (done == 0) out << "point count: skipped (no usable prime)\n";
  report["point_counts"] = std::move(counts);
  return ok;
}

int CmdOracleVerify(const Options& o, std::ostream& out, Json& report) {
  std::mt19937_64 rng(o.seed);
  report["seed"] = o.seed;
  if (o.random > 0) {
    if (!o.input.empty() || !o.catalog.empty()) {
      throw std::invalid_argument("--random cannot be combined with an input arrangement");
    }
    int bad = 0;
    Json runs = Json::array();
    for (int i = 0; i < o.random; ++i) {
      const Arrangement a = RandomArrangement(rng, RandomSpec{});
      std::ostringstream sink;
      Json sub;
      sub["arrangement"] = ArrangementToJson(a);
      if (!VerifyOracles(a, rng, sink, sub)) {
        ++bad;
        out << "disagreement on " << a.ToString() << "\n" << sink.str();
      }
      runs.push_back(std::move(sub));
    }
    out << o.random << " random arrangements, " << bad << " disagreements\n";
    report["runs"] = std::move(runs);
    report["disagreements"] = bad;
    return bad == 0 ? kExitCertified : kExitRefuted;
  }
  const Arrangement a = LoadInput(o);
  out << "arrangement: " << Describe(a) << "\n";
  out << "chi: " << CharPoly(a).ToString() << "\n";
  const bool ok = VerifyOracles(a, rng, out, report);
  out << (ok ? "all oracles agree" : "oracles disagree") << "\n";
  report["agree"] = ok;
  return ok ? kExitCertified : kExitRefuted;
}

int CmdVerifyCert(const Options& o, std::ostream& out, Json& report) {
  if (o.cert_path.empty()) throw std::invalid_argument("no certificate file given");
  const Arrangement a = LoadInput(o);
  const Json j = ReadJsonFile(o.cert_path);
  const Json* kind = j.is_object() && j.contains("kind") ? &j["kind"] : nullptr;
  if (kind == nullptr || !kind->is_string()) {
    throw JsonFormatError(o.cert_path + ": kind: missing or not a string");
  }
  bool valid = false;
  try {
    if (*kind == "divisional-flag") {
      valid = VerifyFlag(a, FlagFromJson(j));
    } else if (*kind == "inductive") {
      valid = VerifyIFCertificate(a, IFCertificateFromJson(j));
    } else {
      throw JsonFormatError("kind: unknown certificate kind " + kind->dump());
    }
  } catch (const JsonFormatError& e) {
    throw JsonFormatError(o.cert_path + ": " + e.what());
  }
  out << "certificate (" << kind->get<std::string>() << "): "
      << (valid ? "valid" : "INVALID") << "\n";
  report["kind"] = *kind;
  report["valid"] = valid;
  return valid ? kExitCertified : kExitRefuted;
}

void AddInputOptions(CLI::App* sub, Options& o, bool positional_input = true) {
  if (positional_input) sub->add_option("input", o.input, "arrangement JSON file");
  sub->add_option("--catalog", o.catalog, "catalog entry instead of a file");
  sub->add_option("--l", o.params.l, "rank parameter for catalog entries");
  sub->add_option("--k", o.params.k, "k parameter (Shi level, coordinate count)");
  sub->add_option("--r", o.params.r, "r parameter (order of the root of unity)");
  sub->add_option("--p", o.params.p, "prime for catalog entries over F_p");
  sub->add_option("--type", o.params.type, "root system type A, B, C or D");
  sub->add_option("--json", o.json_out, "write a JSON report here");
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Combinatorial freeness certificates for hyperplane arrangements", "divflag"};
  app.require_subcommand(1);
  app.add_option("--threads", o.threads,
                 "worker threads for lattice construction (default: DIVFLAG_THREADS or 1)");

  std::vector<std::pair<CLI::App*, Command>> commands;
  auto add = [&](const std::string& name, const std::string& help, Command cmd) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(cmd));
    return sub;
  };

  AddInputOptions(add("charpoly", "characteristic polynomial and Betti numbers", CmdCharpoly), o);
  AddInputOptions(add("lattice", "intersection lattice and Möbius function", CmdLattice), o);
  {
    CLI::App* s = add("df-check", "search for a divisional flag", CmdDfCheck);
    AddInputOptions(s, o);
    s->add_option("--certificate", o.certificate, "write the flag certificate here");
  }
  {
    CLI::App* s = add("if-check", "search for an inductive chain", CmdIfCheck);
    AddInputOptions(s, o);
    s->add_option("--budget", o.budget, "node budget for the search");
    s->add_option("--certificate", o.certificate, "write the certificate here");
  }
  AddInputOptions(add("hdf-check", "divisional freeness of every restriction", CmdHdfCheck), o);
  for (auto [name, help, cmd] :
       std::vector<std::tuple<std::string, std::string, Command>>{
           {"free3", "exact freeness test in rank 3", CmdFree3},
           {"ziegler", "Ziegler restriction and its b2", CmdZiegler},
           {"remainder", "remainder of chi0(A) divided along a restriction", CmdRemainder},
           {"same-eq", "the five divisibility conditions of a triple", CmdSameEq}}) {
    CLI::App* s = add(name, help, cmd);
    AddInputOptions(s, o);
    s->add_option("--hyperplane", o.hyperplane, "index of the hyperplane H (default 0)");
  }
  {
    CLI::App* s = add("catalog", "print or emit a catalog entry", CmdCatalog);
    s->add_option("name", o.input, "entry name; omit to list names");
    AddInputOptions(s, o, false);
    s->add_option("--emit", o.emit, "write the arrangement JSON here");
    s->add_flag("--list", o.list, "list entry names");
  }
  {
    CLI::App* s = add("oracle-verify", "compare χ with independent oracles", CmdOracleVerify);
    AddInputOptions(s, o);
    s->add_option("--seed", o.seed, "seed for prime choice and random inputs");
    s->add_option("--random", o.random, "check this many random arrangements instead");
  }
  {
    CLI::App* s = add("verify-cert", "re-check a certificate", CmdVerifyCert);
    s->add_option("certificate", o.cert_path, "certificate JSON")->required();
    AddInputOptions(s, o);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitCertified : kExitError;
  }

  if (o.threads > 0) {
    SetThreadCount(o.threads);
  } else if (const char* env = std::getenv("DIVFLAG_THREADS")) {
    SetThreadCount(std::max(1, std::atoi(env)));
  }

  for (auto& [sub, cmd] : commands) {
    if (!sub->parsed()) continue;
    try {
      Json report;
      report["command"] = sub->get_name();
      const int code = cmd(o, out, report);
      report["exit_code"] = code;
      if (!o.json_out.empty()) WriteJsonFile(o.json_out, report);
      return code;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitError;
    }
  }
  return kExitError;
}

}  // namespace divflag
