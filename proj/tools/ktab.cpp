#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ktab/io.hpp"
#include "ktab/irsk.hpp"
#include "ktab/jdt.hpp"
#include "ktab/parallel.hpp"
#include "ktab/polyomino.hpp"
#include "ktab/rewrite.hpp"
#include "ktab/shifts.hpp"
#include "ktab/suite.hpp"
#include "ktab/word.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

ktab::MoonPolyomino loadBoard(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open board file: " + path);
  return ktab::boardFromStream(in);
}

struct Options {
  // correspond
  std::string word;
  std::string seed = "minimal";
  bool trace = false;
  bool json = false;
  // shift
  bool row = false;
  bool col = false;
  // irsk
  bool steps = false;
  // equiv
  std::string left, right, system;
  int maxLen = 0;
  long maxStates = 0;
  // count / verify
  std::string boardPath;
  int ones = 0;
  std::string rowsSpec;
  int nMax = 0;
  // suite
  bool all = false;
  std::string suiteName;
  int alphabet = 4;
  int suiteMaxLen = 6;
  int jobs = 0;
  // render
  std::string tableauPath;
  std::string named;
};

int runCorrespond(const Options& opt) {
  ktab::Word w = ktab::Word::parse(opt.word);
  ktab::Seed seed = opt.seed == "superstandard" ? ktab::Seed::superstandard : ktab::Seed::minimal;
  if (opt.seed != "minimal" && opt.seed != "superstandard")
    throw std::invalid_argument("--seed takes minimal or superstandard");
  ktab::CorrespondencePair pair = ktab::correspondence(w, seed);
  if (opt.json) {
    std::cout << ktab::toJson(pair) << "\n";
    return kExitPass;
  }
  if (opt.trace && seed == ktab::Seed::minimal) {
    ktab::IntermediateTrace trace = ktab::wIntermediates(w);
    for (size_t j = 0; j < trace.dotted.size(); ++j) {
      std::cout << "stage " << j << ":\n" << ktab::render(trace.stages[j]) << "\n";
      for (size_t k = 0; k < trace.dotted[j].size(); ++k) {
        std::cout << "stage " << j << ", after value " << k << ":\n"
                  << ktab::render(trace.dotted[j][k]) << "\n";
      }
    }
    std::cout << "stage " << trace.stages.size() - 1 << ":\n"
              << ktab::render(trace.stages.back()) << "\n";
  }
  std::cout << "W:\n" << ktab::render(pair.w) << "M:\n" << ktab::render(pair.m);
  return kExitPass;
}

int runShift(const Options& opt) {
  if (opt.row == opt.col) throw std::invalid_argument("pick exactly one of --row/--col");
  ktab::Word w = ktab::Word::parse(opt.word);
  if (opt.trace && opt.col && w.size() >= 3) {
    ktab::GTriple triple = ktab::gvDecompose(w);
    std::cout << "W:\n" << ktab::render(triple.w) << "strip:\n" << ktab::render(triple.strip)
              << "M:\n" << ktab::render(triple.m);
    ktab::SkewTableau h = ktab::phi(triple.strip, w.size(), triple.w.outer());
    std::cout << "strip after the corner bijection:\n" << ktab::render(h);
    if (!triple.m.empty())
      std::cout << "M shifted down-left:\n" << ktab::render(ktab::shiftedDownLeft(triple.m));
  }
  if (opt.trace && opt.row && w.size() >= 2) {
    ktab::Standardized st = ktab::standardize(w);
    ktab::CorrespondencePair pair = ktab::correspondence(st.word);
    std::cout << "W:\n" << ktab::render(pair.w) << "M:\n" << ktab::render(pair.m)
              << "promoted W:\n" << ktab::render(ktab::promoted(pair.w));
  }
  ktab::Word out = opt.row ? ktab::rowShift(w) : ktab::colShift(w);
  if (opt.json)
    std::cout << "{\"word\":\"" << out.str() << "\"}\n";
  else
    std::cout << out.str() << "\n";
  return kExitPass;
}

int runIrsk(const Options& opt) {
  ktab::Word w = ktab::Word::parse(opt.word);
  std::vector<ktab::IrskPair> steps;
  ktab::IrskPair pair = ktab::irsk(w, opt.steps ? &steps : nullptr);
  if (opt.json) {
    std::cout << ktab::toJson(pair) << "\n";
    return kExitPass;
  }
  if (opt.steps) {
    for (size_t j = 0; j < steps.size(); ++j) {
      ktab::Word prefix(std::vector<int>(w.letters.begin(),
                                         w.letters.begin() + static_cast<long>(j) + 1));
      std::cout << prefix.str() << "\nP:\n" << ktab::render(steps[j].p) << "Q:\n"
                << ktab::render(steps[j].q) << "\n";
    }
  } else {
    std::cout << "P:\n" << ktab::render(pair.p) << "Q:\n" << ktab::render(pair.q);
  }
  return kExitPass;
}

int runEquiv(const Options& opt) {
  ktab::Word u = ktab::Word::parse(opt.left);
  ktab::Word w = ktab::Word::parse(opt.right);
  ktab::RewriteSystem sys = ktab::parseRewriteSystem(opt.system);
  ktab::EquivBudget budget;
  budget.maxLen = opt.maxLen;
  budget.maxStates = opt.maxStates;
  ktab::EquivalenceResult res = ktab::equivalent(u, w, sys, budget);
  if (opt.json) {
    std::ostringstream cert;
    cert << "[";
    for (size_t i = 0; i < res.certificate.size(); ++i)
      cert << (i ? "," : "") << "\"" << res.certificate[i].str() << "\"";
    cert << "]";
    std::cout << "{\"verdict\":\""
              << (res.verdict == ktab::Verdict::yes
                      ? "yes"
                      : res.verdict == ktab::Verdict::no ? "no" : "unknown")
              << "\",\"certificate\":" << cert.str() << ",\"separating\":\"" << res.separating
              << "\"}\n";
  } else {
    switch (res.verdict) {
      case ktab::Verdict::yes: {
        std::cout << "yes\n";
        for (const ktab::Word& step : res.certificate) std::cout << "  " << step.str() << "\n";
        break;
      }
      case ktab::Verdict::no:
        std::cout << "no (" << res.separating << ")\n";
        break;
      case ktab::Verdict::unknown:
        std::cout << "unknown (budget exhausted after " << res.statesVisited << " states)\n";
        break;
    }
  }
  return res.verdict == ktab::Verdict::unknown ? kExitBudget : kExitPass;
}

int runCount(const Options& opt) {
  ktab::MoonPolyomino board = loadBoard(opt.boardPath);
  auto table = ktab::countTable(board, opt.ones);
  if (opt.json) {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (auto [uv, count] : table) {
      if (!first) out << ",";
      first = false;
      out << "{\"ne\":" << uv.first << ",\"se\":" << uv.second << ",\"count\":" << count << "}";
    }
    out << "]";
    std::cout << out.str() << "\n";
    return kExitPass;
  }
  std::cout << "ne,se,count\n";
  for (auto [uv, count] : table)
    std::cout << uv.first << "," << uv.second << "," << count << "\n";
  return kExitPass;
}

int runVerify(const Options& opt) {
  std::vector<int> multiset;
  {
    std::string norm = opt.rowsSpec;
    std::replace(norm.begin(), norm.end(), ',', ' ');
    std::istringstream in(norm);
    int v;
    while (in >> v) multiset.push_back(v);
  }
  if (multiset.empty()) throw std::invalid_argument("--rows needs a comma-separated multiset");
  int nMax = opt.nMax;
  if (nMax <= 0) nMax = std::min(*std::max_element(multiset.begin(), multiset.end()), 4);
  ktab::InvarianceReport report = ktab::verifyInvariance(multiset, nMax);
  if (opt.json) {
    std::cout << "{\"pass\":" << (report.pass ? "true" : "false")
              << ",\"arrangements\":" << report.arrangements << "}\n";
  } else {
    std::cout << report.arrangements << " arrangements, n <= " << nMax << "\n";
    for (auto [key, count] : report.table) {
      auto [n, u, v] = key;
      std::cout << "n=" << n << " ne=" << u << " se=" << v << ": " << count << "\n";
    }
    std::cout << (report.pass ? "PASS" : "FAIL: " + report.detail) << "\n";
  }
  return report.pass ? kExitPass : kExitFail;
}

int runSuiteVerb(const Options& opt) {
  ktab::SuiteConfig cfg;
  cfg.alphabet = opt.alphabet;
  cfg.maxLen = opt.suiteMaxLen;
  cfg.jobs = opt.jobs;
  bool allPass = true;
  std::vector<ktab::SuiteResult> results;
  if (opt.all) {
    for (const ktab::SuiteEntry& entry : ktab::allSuites()) results.push_back(entry.run(cfg));
  } else if (!opt.suiteName.empty()) {
    results.push_back(ktab::runSuite(opt.suiteName, cfg));
  } else {
    throw std::invalid_argument("suite: pass --all or --name");
  }
  for (const ktab::SuiteResult& res : results) {
    allPass = allPass && res.pass;
    if (opt.json) continue;
    std::cout << (res.pass ? "PASS" : "FAIL") << " " << res.name << " (" << res.checks
              << " checks, " << res.seconds << "s)\n";
    for (const std::string& note : res.notes) std::cout << "    " << note << "\n";
  }
  if (opt.json) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < results.size(); ++i) {
      if (i) out << ",";
      out << "{\"name\":\"" << results[i].name << "\",\"pass\":"
          << (results[i].pass ? "true" : "false") << ",\"checks\":" << results[i].checks << "}";
    }
    out << "]";
    std::cout << out.str() << "\n";
  }
  return allPass ? kExitPass : kExitFail;
}

int runRender(const Options& opt) {
  if (!opt.named.empty()) {
    // forms like M4, I3, S5, N4
    if (opt.named.size() < 2) throw std::invalid_argument("--named takes e.g. M4");
    int n = std::stoi(opt.named.substr(1));
    ktab::NamedKind kind;
    switch (opt.named[0]) {
      case 'M': kind = ktab::NamedKind::minimal; break;
      case 'I': kind = ktab::NamedKind::column; break;
      case 'S': kind = ktab::NamedKind::superstandard; break;
      case 'N': kind = ktab::NamedKind::concatenated; break;
      default: throw std::invalid_argument("--named takes M/I/S/N followed by n");
    }
    std::cout << ktab::render(ktab::namedTableau(kind, n));
    return kExitPass;
  }
  if (!opt.tableauPath.empty()) {
    std::ifstream in(opt.tableauPath);
    if (!in) throw std::invalid_argument("cannot open " + opt.tableauPath);
    std::stringstream buf;
    buf << in.rdbuf();
    std::cout << ktab::render(ktab::tableauFromJson(buf.str()));
    return kExitPass;
  }
  if (!opt.boardPath.empty()) {
    std::cout << ktab::render(loadBoard(opt.boardPath));
    return kExitPass;
  }
  if (!opt.word.empty()) {
    std::cout << ktab::render(ktab::embedDiagonal(ktab::Word::parse(opt.word)));
    return kExitPass;
  }
  throw std::invalid_argument("render: pass --named, --tableau, --board or --word");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bijective toolkit for words, increasing tableaux and moon-board fillings"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* correspond = app.add_subcommand("correspond", "compute the pair (W, M) of a word");
  correspond->add_option("word", opt.word)->required();
  correspond->add_option("--seed", opt.seed, "minimal|superstandard");
  correspond->add_flag("--trace", opt.trace, "print every intermediate dotted stage");
  correspond->add_flag("--json", opt.json);

  CLI::App* shift = app.add_subcommand("shift", "row/column shift of a word");
  shift->add_option("word", opt.word)->required();
  shift->add_flag("--row", opt.row);
  shift->add_flag("--col", opt.col);
  shift->add_flag("--trace", opt.trace, "print the intermediate tableaux");
  shift->add_flag("--json", opt.json);

  CLI::App* irskCmd = app.add_subcommand("irsk", "inflated insertion of a word");
  irskCmd->add_option("word", opt.word)->required();
  irskCmd->add_flag("--steps", opt.steps, "print the P/Q table per prefix");
  irskCmd->add_flag("--json", opt.json);

  CLI::App* equiv = app.add_subcommand("equiv", "bounded rewriting equivalence");
  equiv->add_option("u", opt.left)->required();
  equiv->add_option("w", opt.right)->required();
  equiv->add_option("--system", opt.system, "knuth|kknuth|iknuth")->required();
  equiv->add_option("--max-len", opt.maxLen);
  equiv->add_option("--max-states", opt.maxStates);
  equiv->add_flag("--json", opt.json);

  CLI::App* count = app.add_subcommand("count", "chain-count table of a board file");
  count->add_option("--board", opt.boardPath)->required();
  count->add_option("--n", opt.ones, "number of ones")->required();
  count->add_flag("--json", opt.json);

  CLI::App* verify = app.add_subcommand("verify", "row-multiset invariance of chain counts");
  verify->add_option("--rows", opt.rowsSpec, "comma-separated row lengths")->required();
  verify->add_option("--n-max", opt.nMax);
  verify->add_flag("--json", opt.json);

  CLI::App* suite = app.add_subcommand("suite", "run the verification suites");
  suite->add_flag("--all", opt.all);
  suite->add_option("--name", opt.suiteName);
  suite->add_option("--alphabet", opt.alphabet);
  suite->add_option("--max-len", opt.suiteMaxLen);
  suite->add_option("--jobs", opt.jobs);
  suite->add_flag("--json", opt.json);

  CLI::App* render = app.add_subcommand("render", "ASCII rendering of tableaux and boards");
  render->add_option("--named", opt.named, "M4, I3, S5, N4, ...");
  render->add_option("--tableau", opt.tableauPath, "tableau JSON file");
  render->add_option("--board", opt.boardPath, "board file");
  render->add_option("--word", opt.word, "render the diagonal embedding");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (correspond->parsed()) return runCorrespond(opt);
    if (shift->parsed()) return runShift(opt);
    if (irskCmd->parsed()) return runIrsk(opt);
    if (equiv->parsed()) return runEquiv(opt);
    if (count->parsed()) return runCount(opt);
    if (verify->parsed()) return runVerify(opt);
    if (suite->parsed()) return runSuiteVerb(opt);
    if (render->parsed()) return runRender(opt);
  } catch (const ktab::BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
