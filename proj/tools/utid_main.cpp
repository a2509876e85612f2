// Command-line front end: decide instances from a JSON file, optionally
// re-verify witnesses and cross-check against breadth-first search.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "utid/io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kBadInput = 2;
constexpr int kDiscrepancy = 3;

using nlohmann::json;

int emit(const json& doc, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  std::ofstream out(output);
  if (!out) {
    std::cerr << "cannot write " << output << "\n";
    return kBadInput;
  }
  out << doc.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide identity, U2 and U10 reachability for sets of 4x4 unitriangular integer matrices"};
  std::string input, output, problem = "all", check;
  bool witness = false, verify = false, trace = false;
  std::optional<std::size_t> oracle_maxlen, lemma_trials;
  std::uint64_t seed = 1;

  app.add_option("--input", input, "JSON instance file");
  app.add_option("--problem", problem, "identity|u2|u10|all")
      ->check(CLI::IsMember({"identity", "u2", "u10", "all"}));
  app.add_flag("--witness", witness, "include witness words (1-based generator indices)");
  app.add_flag("--verify", verify, "re-multiply witnesses before emitting");
  app.add_option("--oracle-maxlen", oracle_maxlen, "also run breadth-first search up to this word length")
      ->check(CLI::PositiveNumber);
  app.add_flag("--trace", trace, "include the full case tree");
  app.add_option("--output", output, "output path (default stdout)");
  app.add_option("--seed", seed, "seed for randomized self-tests");
  app.add_option("--check", check, "re-verify the witnesses in a verdict file");
  app.add_option("--lemma-suite", lemma_trials, "run the randomized lemma suite with this many trials")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kBadInput;
  }

  if (input.empty() && check.empty() && !lemma_trials) {
    std::cerr << "one of --input, --check or --lemma-suite is required\n" << app.help();
    return kBadInput;
  }

  try {
    if (lemma_trials) {
      bool failed = false;
      std::ostringstream lines;
      for (const auto& r : utid::check_lemma_suite(seed, *lemma_trials)) {
        lines << r.line() << "\n";
        failed = failed || r.failures > 0;
      }
      if (output.empty() || output == "-") std::cout << lines.str();
      else std::ofstream(output) << lines.str();
      return failed ? kDiscrepancy : kOk;
    }

    if (!check.empty()) {
      std::ifstream in(check);
      if (!in) throw utid::InputError("cannot open " + check);
      json doc;
      try {
        in >> doc;
      } catch (const json::exception& e) {
        throw utid::InputError(std::string("invalid JSON: ") + e.what());
      }
      const auto failures = utid::check_verdicts(doc);
      for (const auto& f : failures) std::cerr << f << "\n";
      std::cout << (failures.empty() ? "ok" : "failed") << "\n";
      return failures.empty() ? kOk : kDiscrepancy;
    }

    const auto instances = utid::load_instances(input);
    utid::RecordOptions opt;
    opt.identity = problem == "all" || problem == "identity";
    opt.u2 = problem == "all" || problem == "u2";
    opt.u10 = problem == "all" || problem == "u10";
    opt.witness = witness;
    opt.trace = trace;

    bool discrepancy = false;
    json results = json::array();
    for (const auto& inst : instances) {
      const auto start = std::chrono::steady_clock::now();
      const utid::DecisionTriple d = utid::decide(inst.generators);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      json rec = utid::verdict_record(inst, d, opt, ms);

      if (verify) {
        bool ok = utid::verify_decision(inst.generators, d);
        rec["verified"] = ok;
        if (!ok) {
          discrepancy = true;
          std::cerr << inst.name << ": witness verification failed\n";
        }
      }
      if (oracle_maxlen) {
        utid::SearchBudget budget;
        budget.max_len = *oracle_maxlen;
        json o;
        o["max_len"] = *oracle_maxlen;
        utid::SearchResult res;
        try {
          res = utid::bfs_search(inst.generators, budget);
        } catch (const std::overflow_error&) {
          o["skipped"] = "entries too large for 64-bit search";
          rec["oracle"] = std::move(o);
          results.push_back(std::move(rec));
          continue;
        }
        o["exhaustive"] = res.exhaustive;
        o["states"] = res.states;
        bool agree = true;
        for (auto t : {utid::Target::identity, utid::Target::u2, utid::Target::u10}) {
          o[utid::name(t)] = res[t] ? "hit" : "none";
          if (res[t] && !d[t].reachable) agree = false;
        }
        o["agree"] = agree;
        if (!agree) {
          discrepancy = true;
          std::cerr << inst.name << ": breadth-first search contradicts a no verdict\n";
        }
        rec["oracle"] = std::move(o);
      }
      results.push_back(std::move(rec));
    }
    json doc;
    doc["results"] = std::move(results);
    const int rc = emit(doc, output);
    if (rc != kOk) return rc;
    return discrepancy ? kDiscrepancy : kOk;
  } catch (const utid::InputError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
