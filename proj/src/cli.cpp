#include "modva/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "modva/forms.hpp"
#include "modva/hopf.hpp"
#include "modva/verify.hpp"

namespace modva {
namespace {

struct RunConfig {
  std::string command;
  std::string carrier;
  uint32_t p = 0;
  long long level = 1;   // affine level
  long long charge = 0;  // Virasoro central charge
  long long maxDegree = 4;
  std::string format = "text";
  std::string suite = "all";
  int bound = 3;
  uint64_t seed = 1;
  int workers = 1;
  std::string expr;  // normal-form input
};

long long centralOf(const RunConfig& cfg) {
  return cfg.carrier == "virasoro" ? cfg.charge : cfg.level;
}

// text output renders residues symmetrically; json/csv keep canonical [0, p)
long long symRes(uint32_t v, uint32_t p) {
  return 2ull * v <= p ? static_cast<long long>(v) : static_cast<long long>(v) - p;
}

nlohmann::ordered_json configEcho(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["command"] = cfg.command;
  if (!cfg.carrier.empty()) {
    j["carrier"] = cfg.carrier;
    j["central"] = centralOf(cfg);
  }
  j["p"] = cfg.p;
  j["maxDegree"] = cfg.maxDegree;
  j["seed"] = cfg.seed;
  j["workers"] = cfg.workers;
  return j;
}

std::string matrixText(const std::vector<std::vector<uint32_t>>& m, uint32_t p) {
  size_t width = 1;
  for (auto& row : m)
    for (auto v : row) width = std::max(width, std::to_string(symRes(v, p)).size());
  std::ostringstream os;
  for (auto& row : m) {
    os << "  [";
    for (auto v : row) os << " " << std::setw(static_cast<int>(width)) << symRes(v, p);
    os << " ]\n";
  }
  return os.str();
}

// Gram rows for every degree in the window; degree-parallel when asked, with
// the assembly order fixed so the report never depends on the worker count.
std::vector<GramRow> allGramRows(const BilinearForm& form, long long N, int workers) {
  std::vector<GramRow> rows(static_cast<size_t>(N) + 1);
  if (workers <= 1 || N == 0) {
    for (long long d = 0; d <= N; ++d) rows[d] = form.gramRow(d);
    return rows;
  }
  std::atomic<long long> next{0};
  std::mutex mu;
  std::exception_ptr bad;
  std::vector<std::thread> pool;
  int w = static_cast<int>(std::min<long long>(workers, N + 1));
  for (int i = 0; i < w; ++i)
    pool.emplace_back([&]() {
      for (;;) {
        long long d = next.fetch_add(1);
        if (d > N) return;
        try {
          rows[d] = form.gramRow(d);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!bad) bad = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (bad) std::rethrow_exception(bad);
  return rows;
}

int cmdGram(const RunConfig& cfg, std::ostream& out) {
  auto c = makeCarrier(cfg.carrier, cfg.p, centralOf(cfg), cfg.maxDegree);
  BilinearForm form(*c);
  auto rows = allGramRows(form, c->truncation(), cfg.workers);
  if (cfg.format == "json") {
    nlohmann::ordered_json j = configEcho(cfg);
    j["rows"] = nlohmann::ordered_json::array();
    for (auto& row : rows)
      j["rows"].push_back(nlohmann::ordered_json(gramRowToJson(*c, row)));
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    for (auto& row : rows) out << gramRowToCsv(row);
  } else {
    for (auto& row : rows) {
      out << "degree " << row.degree << "  dim " << row.matrix.size() << "  rank " << row.rank
          << "  radical " << row.radical.size() << "\n";
      out << matrixText(row.matrix, cfg.p);
    }
  }
  return 0;
}

int cmdDims(const RunConfig& cfg, std::ostream& out) {
  auto c = makeCarrier(cfg.carrier, cfg.p, centralOf(cfg), cfg.maxDegree);
  BilinearForm form(*c);
  auto dims = simpleQuotientDims(form);
  if (cfg.format == "json") {
    nlohmann::ordered_json j = configEcho(cfg);
    j["dims"] = nlohmann::ordered_json::array();
    for (auto& [d, r] : dims) j["dims"].push_back({{"degree", d}, {"dim", r}});
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    for (auto& [d, r] : dims) out << d << "," << r << "\n";
  } else {
    for (auto& [d, r] : dims) out << "degree " << d << "  dim " << r << "\n";
  }
  return 0;
}

int cmdFormspace(const RunConfig& cfg, std::ostream& out) {
  auto c = makeCarrier(cfg.carrier, cfg.p, centralOf(cfg), cfg.maxDegree);
  FormSpaceResult r = formSpaceDim(*c);
  if (cfg.format == "json") {
    nlohmann::ordered_json j = configEcho(cfg);
    j["dim"] = r.dim;
    j["stabilized"] = r.stabilized;
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << r.dim << "," << (r.stabilized ? 1 : 0) << "\n";
  } else {
    out << r.dim << "\n";
    out << "stabilized: " << (r.stabilized ? "yes" : "no (truncation-limited)") << "\n";
  }
  return 0;
}

int cmdNormalForm(const RunConfig& cfg, std::ostream& out) {
  Hopf H(cfg.p);
  HElement x = H.parse(cfg.expr);
  if (cfg.format == "json") {
    nlohmann::ordered_json j = configEcho(cfg);
    j["input"] = cfg.expr;
    j["normalForm"] = Hopf::print(x, false);
    j["terms"] = nlohmann::ordered_json::array();
    for (auto& [m, coeff] : x.terms())
      j["terms"].push_back({{"i", m.i}, {"j", m.j}, {"k", m.k}, {"c", coeff}});
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    for (auto& [m, coeff] : x.terms())
      out << m.i << "," << m.j << "," << m.k << "," << coeff << "\n";
  } else {
    out << Hopf::print(x) << "\n";
  }
  return 0;
}

int cmdVerify(const RunConfig& cfg, std::ostream& out) {
  SuiteParams P;
  P.carrier = cfg.carrier.empty() ? "affine:sl2" : cfg.carrier;
  P.p = cfg.p;
  P.central = centralOf(cfg);
  P.maxDegree = static_cast<int>(cfg.maxDegree);
  P.bound = cfg.bound;
  P.seed = cfg.seed;
  P.workers = cfg.workers;
  std::vector<SuiteReport> reports;
  if (cfg.suite == "all")
    reports = runAllSuites(P);
  else
    reports.push_back(runSuite(cfg.suite, P));

  bool failed = false;
  for (auto& r : reports) failed = failed || !r.failures.empty();

  if (cfg.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (auto& r : reports) j.push_back(nlohmann::ordered_json(suiteReportToJson(r)));
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    for (auto& r : reports)
      out << r.suite << "," << r.attempted << "," << r.passed << "," << r.failures.size()
          << "\n";
  } else {
    size_t w = 0;
    for (auto& r : reports) w = std::max(w, r.suite.size());
    for (auto& r : reports) {
      out << std::left << std::setw(static_cast<int>(w)) << r.suite << std::right
          << "  attempted " << r.attempted << "  passed " << r.passed;
      if (!r.failures.empty()) out << "  FAILURES " << r.failures.size();
      out << "\n";
      for (auto& f : r.failures) {
        out << "  at " << f.inputs << "\n";
        out << "     lhs " << f.lhs << "\n";
        out << "     rhs " << f.rhs << "\n";
      }
    }
  }
  return failed ? 1 : 0;
}

int cmdDualCheck(const RunConfig& cfg, std::ostream& out) {
  auto c = makeCarrier(cfg.carrier, cfg.p, centralOf(cfg), cfg.maxDegree);
  long long N = c->truncation();
  BilinearForm form(*c);
  DualCarrier dual(*c, N);
  uint32_t p = cfg.p;

  // the form as a map into the contragredient dual, degree by degree
  auto gramMap = [&](const GradedVector& u, long long degree) {
    DualVector f = dual.zero(degree);
    auto& b = c->basis(degree);
    for (size_t j = 0; j < b.size(); ++j) {
      GradedVector v = c->zero();
      v.add(b[j], 1);
      f.coords[j] = form.pair(u, v);
    }
    return f;
  };

  auto rows = allGramRows(form, N, cfg.workers);
  long long attempted = 0;
  std::vector<std::string> mismatches;
  // the map intertwines generator modes with their contragredient primes
  for (long long d = 0; d <= N; ++d)
    for (int g = 0; g < c->numGens(); ++g)
      for (long long m = -2; m <= 2; ++m) {
        long long dt = d - m;
        if (dt < 0 || dt > N) continue;
        for (auto& uw : c->basis(d)) {
          GradedVector u = c->zero();
          u.add(uw, 1);
          ++attempted;
          DualVector lhs = gramMap(c->applyMode(g, m, u), dt);
          DualVector rhs = dual.generatorPrimeMode(g, m, gramMap(u, d));
          if (!dual.equal(lhs, rhs)) {
            std::ostringstream os;
            os << "degree " << d << " x" << g << "(" << m << ") on " << c->wordStr(uw);
            mismatches.push_back(os.str());
          }
        }
      }

  if (cfg.format == "json") {
    nlohmann::ordered_json j = configEcho(cfg);
    j["degrees"] = nlohmann::ordered_json::array();
    for (auto& row : rows)
      j["degrees"].push_back({{"degree", row.degree},
                              {"dim", row.matrix.size()},
                              {"rank", row.rank},
                              {"radical", row.radical.size()}});
    j["intertwining"] = {{"attempted", attempted},
                         {"failures", static_cast<long long>(mismatches.size())}};
    j["ok"] = mismatches.empty();
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    for (auto& row : rows)
      out << row.degree << "," << row.matrix.size() << "," << row.rank << ","
          << row.radical.size() << "\n";
  } else {
    for (auto& row : rows)
      out << "degree " << row.degree << "  dim " << row.matrix.size() << "  rank " << row.rank
          << "  radical " << row.radical.size() << "\n";
    out << "intertwining checks: " << attempted << ", failures " << mismatches.size() << "\n";
    for (auto& s : mismatches) out << "  at " << s << "\n";
  }
  (void)p;
  return mismatches.empty() ? 0 : 1;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact modular vertex-algebra toolkit", "modva"};
  app.require_subcommand(1);
  RunConfig cfg;
  bool listSuites = false;

  auto addCommon = [&](CLI::App* s, bool carrierRequired) {
    auto* carrier =
        s->add_option("--carrier", cfg.carrier,
                      "module family: affine:<name-or-path> or virasoro");
    if (carrierRequired) carrier->required();
    s->add_option("--p", cfg.p, "odd prime modulus")->required();
    s->add_option("--level", cfg.level, "level of an affine carrier");
    s->add_option("--c", cfg.charge, "central charge of a Virasoro carrier");
    s->add_option("--max-degree", cfg.maxDegree, "truncation window")
        ->check(CLI::NonNegativeNumber);
    s->add_option("--format", cfg.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    s->add_option("--seed", cfg.seed, "seed for randomized checks");
    s->add_option("--workers", cfg.workers, "worker threads (default $MODVA_WORKERS or 1)");
  };

  addCommon(app.add_subcommand("gram", "per-degree Gram matrices of the invariant form"),
            true);
  addCommon(app.add_subcommand("dims", "graded dimensions of the quotient by the radical"),
            true);
  addCommon(app.add_subcommand("formspace", "dimension of the space of invariant forms"),
            true);
  addCommon(app.add_subcommand("dual-check", "contragredient pairing report"), true);

  CLI::App* nf = app.add_subcommand("normal-form", "straighten an expression into the PBW basis");
  nf->add_option("expr", cfg.expr, "expression like \"E^(1) D^(1)\"")->required();
  nf->add_option("--p", cfg.p, "odd prime modulus")->required();
  nf->add_option("--format", cfg.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  CLI::App* vf = app.add_subcommand("verify", "run verification suites");
  addCommon(vf, false);
  vf->add_option("--suite", cfg.suite, "catalog name, or all");
  vf->add_option("--bound", cfg.bound, "order/mode cap inside suites")
      ->check(CLI::NonNegativeNumber);
  vf->add_flag("--list", listSuites, "print the suite catalog and exit");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    auto given = [&](const std::string& name) {
      const CLI::Option* o = sub->get_option_no_throw(name);
      return o != nullptr && o->count() > 0;
    };

    if (!given("--workers")) {
      if (const char* env = std::getenv("MODVA_WORKERS")) {
        size_t pos = 0;
        cfg.workers = std::stoi(env, &pos);
        if (pos != std::string(env).size()) throw std::invalid_argument("bad MODVA_WORKERS");
      }
    }
    if (cfg.workers < 1) throw std::invalid_argument("worker count must be at least 1");
    bool vir = cfg.carrier == "virasoro";
    if (given("--level") && vir)
      throw std::invalid_argument("--level applies to affine carriers; use --c");
    if (given("--c") && !vir && given("--carrier"))
      throw std::invalid_argument("--c applies to the Virasoro carrier; use --level");

    if (cfg.command == "gram") return cmdGram(cfg, out);
    if (cfg.command == "dims") return cmdDims(cfg, out);
    if (cfg.command == "formspace") return cmdFormspace(cfg, out);
    if (cfg.command == "normal-form") return cmdNormalForm(cfg, out);
    if (cfg.command == "dual-check") return cmdDualCheck(cfg, out);
    // verify
    if (listSuites) {
      for (auto& name : suiteCatalog()) out << name << "\n";
      return 0;
    }
    return cmdVerify(cfg, out);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace modva
