// Command-line front end: replay, generate, benchmark, sort-demo and the
// trade-log conformance checker. See README.md for the file formats.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cda/checker.hpp"
#include "cda/engine.hpp"
#include "cda/errors.hpp"
#include "cda/logio.hpp"
#include "cda/reference.hpp"
#include "cda/toolkit.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

cda::EngineKind parse_engine(const std::string& name) {
  if (name == "tree") return cda::EngineKind::Tree;
  if (name == "list") return cda::EngineKind::List;
  throw CLI::ValidationError("--engine", "must be 'tree' or 'list'");
}

cda::OrderBook load_order_book(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return cda::parse_order_book(in);
}

cda::TradeBook load_trade_book(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return cda::parse_trade_book(in);
}

// Writes to the file when a path is given, else to stdout.
void emit(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << payload;
}

struct CheckArgs {
  std::string orders, trades;
  std::string mode = "set";
  std::string engine = "tree";
  bool fail_fast = false;
};

struct RunArgs {
  std::string orders;
  std::string engine = "tree";
  std::string trades_out;
  bool audit = false;
};

struct GenArgs {
  cda::toolkit::GenParams params;
  std::string out;
};

struct BenchArgs {
  std::vector<std::size_t> sizes;
  std::vector<std::string> engines{"tree", "list"};
  std::uint64_t seed = 1;
  bool adversarial = false;
};

int do_check(const CheckArgs& a) {
  const cda::OrderBook orders = load_order_book(a.orders);
  const cda::TradeBook trades = load_trade_book(a.trades);
  cda::CheckOptions opts;
  opts.mode = a.mode == "ordered" ? cda::CompareMode::Ordered
                                  : cda::CompareMode::Set;
  opts.fail_fast = a.fail_fast;
  opts.engine = parse_engine(a.engine);
  const cda::MismatchReport report = cda::check_logs(orders, trades, opts);
  for (const cda::Mismatch& entry : report.entries)
    std::cout << cda::describe(entry) << '\n';
  return report.ok() ? kExitOk : kExitMismatch;
}

int do_run(const RunArgs& a) {
  const cda::OrderBook orders = load_order_book(a.orders);
  const cda::EngineKind engine = parse_engine(a.engine);
  std::vector<cda::Matching> matchings;
  if (a.audit) {
    const cda::toolkit::AuditResult result =
        cda::toolkit::audited_run(orders, engine);
    if (result.failed_step) {
      std::cerr << "audit: " << result.failed_check
                << " violated at step " << *result.failed_step << '\n';
      return kExitMismatch;
    }
    matchings = result.matchings;
  } else {
    matchings = engine == cda::EngineKind::Tree
                    ? cda::engine::run_book(orders)
                    : cda::reference::run_book(orders);
  }
  std::ostringstream os;
  cda::write_trade_book(matchings, os);
  emit(a.trades_out, os.str());
  return kExitOk;
}

int do_gen(const GenArgs& a) {
  const cda::OrderBook book = cda::toolkit::gen_book(a.params);
  std::ostringstream os;
  cda::write_order_book(book, os);
  emit(a.out, os.str());
  return kExitOk;
}

int do_bench(const BenchArgs& a) {
  std::vector<cda::EngineKind> engines;
  engines.reserve(a.engines.size());
  for (const std::string& name : a.engines) engines.push_back(parse_engine(name));
  const auto rows =
      cda::toolkit::run_bench(a.sizes, engines, a.seed, a.adversarial);
  cda::toolkit::write_bench_csv(rows, std::cout);
  return kExitOk;
}

int do_sortdemo(const std::vector<cda::Price>& values) {
  const std::vector<cda::Price> sorted = cda::toolkit::sort_via_cda(values);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) std::cout << ',';
    std::cout << sorted[i];
  }
  std::cout << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous double auction matching engine and trade log checker"};
  app.require_subcommand(1);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check", "Replay an order book and compare against a trade book");
  check->add_option("--orders", check_args.orders, "Order book file")->required();
  check->add_option("--trades", check_args.trades, "Trade book file")->required();
  check->add_option("--mode", check_args.mode, "Comparison mode: set | ordered")
      ->check(CLI::IsMember({"set", "ordered"}));
  check->add_option("--engine", check_args.engine, "Replay engine: tree | list")
      ->check(CLI::IsMember({"tree", "list"}));
  check->add_flag("--fail-fast", check_args.fail_fast,
                  "Stop at the first mismatch");

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "Replay an order book");
  run->add_option("--orders", run_args.orders, "Order book file")->required();
  run->add_option("--engine", run_args.engine, "Engine: tree | list")
      ->check(CLI::IsMember({"tree", "list"}));
  run->add_option("--trades-out", run_args.trades_out,
                  "Trade book output file (stdout when omitted)");
  run->add_flag("--audit", run_args.audit,
                "Check the exchange rules on every step while replaying");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random order book");
  gen->add_option("--n", gen_args.params.n, "Number of instructions")->required();
  gen->add_option("--seed", gen_args.params.seed, "RNG seed")->required();
  gen->add_option("--price-lo", gen_args.params.price_lo, "Lowest price (cents)");
  gen->add_option("--price-hi", gen_args.params.price_hi, "Highest price (cents)");
  gen->add_option("--qty-lo", gen_args.params.qty_lo, "Smallest quantity");
  gen->add_option("--qty-hi", gen_args.params.qty_hi, "Largest quantity");
  gen->add_option("--delete-frac", gen_args.params.delete_fraction,
                  "Fraction of Delete instructions");
  gen->add_option("--buy-frac", gen_args.params.buy_fraction,
                  "Fraction of Buy instructions");
  gen->add_option("--out", gen_args.out, "Output file (stdout when omitted)");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Time full replays per engine");
  bench->add_option("--sizes", bench_args.sizes, "Book sizes, e.g. 1000,10000")
      ->required()
      ->delimiter(',');
  bench->add_option("--engines", bench_args.engines, "Engines: tree,list")
      ->delimiter(',');
  bench->add_option("--seed", bench_args.seed, "RNG seed for the books");
  bench->add_flag("--adversarial", bench_args.adversarial,
                  "Use all-resident descending-price books");

  std::vector<cda::Price> sort_values;
  CLI::App* sortdemo = app.add_subcommand(
      "sortdemo", "Sort distinct positive integers by trading them");
  sortdemo->add_option("--values", sort_values, "Values, e.g. 3,1,2")
      ->required()
      ->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return do_check(check_args);
    if (*run) return do_run(run_args);
    if (*gen) return do_gen(gen_args);
    if (*bench) return do_bench(bench_args);
    if (*sortdemo) return do_sortdemo(sort_values);
  } catch (const cda::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
