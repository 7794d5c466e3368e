#include "cda/toolkit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "cda/engine.hpp"
#include "cda/errors.hpp"
#include "cda/logio.hpp"
#include "cda/reference.hpp"
#include "cda/spec_props.hpp"

namespace cda::toolkit {

namespace {

// Tracks which order ids are currently resident, with O(1) uniform draws.
// Fed from the matchings the generator's internal engine produces.
class LiveSet {
 public:
  bool empty() const noexcept { return ids_.empty(); }

  OrderId pick(std::uint64_t r) const { return ids_[r % ids_.size()]; }

  void insert(OrderId id, Qty remaining) {
    pos_[id] = ids_.size();
    ids_.push_back(id);
    qty_[id] = remaining;
  }

  void reduce(OrderId id, Qty traded) {
    auto it = qty_.find(id);
    if (it == qty_.end()) return;
    it->second -= traded;
    if (it->second <= 0) erase(id);
  }

  void erase(OrderId id) {
    auto it = pos_.find(id);
    if (it == pos_.end()) return;
    const std::size_t idx = it->second;
    ids_[idx] = ids_.back();
    pos_[ids_[idx]] = idx;
    ids_.pop_back();
    pos_.erase(id);
    qty_.erase(id);
  }

 private:
  std::vector<OrderId> ids_;
  std::unordered_map<OrderId, std::size_t> pos_;
  std::unordered_map<OrderId, Qty> qty_;
};

void check_params(const GenParams& p) {
  if (p.price_lo < 0 || p.price_lo > p.price_hi)
    throw ContractViolation("gen_book: invalid price range");
  if (p.qty_lo < 1 || p.qty_lo > p.qty_hi)
    throw ContractViolation("gen_book: invalid qty range");
  if (p.delete_fraction < 0.0 || p.delete_fraction > 1.0 ||
      p.buy_fraction < 0.0 || p.buy_fraction > 1.0 ||
      p.delete_fraction + p.buy_fraction > 1.0)
    throw ContractViolation("gen_book: invalid fractions");
}

std::vector<Order> snapshot(const reference::ListBook& book) {
  return {book.orders.begin(), book.orders.end()};
}

}  // namespace

OrderBook gen_book(const GenParams& p) {
  check_params(p);
  std::mt19937_64 rng(p.seed);
  auto draw = [&rng](std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
  };
  auto draw_unit = [&rng]() {
    return std::ldexp(static_cast<double>(rng() >> 11), -53);  // [0, 1)
  };

  OrderBook book;
  book.instructions.reserve(p.n);
  engine::EngineState state;
  LiveSet live;
  OrderId next_id = 1;

  for (std::size_t k = 1; k <= p.n; ++k) {
    const Timestamp ts = k;
    const double u = draw_unit();
    Instruction instr;
    if (u < p.delete_fraction) {
      instr = live.empty() ? Instruction::del(p.n + 1, ts)
                           : Instruction::del(live.pick(rng()), ts);
    } else {
      Order o;
      o.id = next_id++;
      o.timestamp = ts;
      o.price = static_cast<Price>(
          draw(static_cast<std::uint64_t>(p.price_lo),
               static_cast<std::uint64_t>(p.price_hi)));
      o.qty = static_cast<Qty>(draw(static_cast<std::uint64_t>(p.qty_lo),
                                    static_cast<std::uint64_t>(p.qty_hi)));
      instr = u < p.delete_fraction + p.buy_fraction ? Instruction::buy(o)
                                                     : Instruction::sell(o);
    }

    const Matching m = engine::process_instruction(state, instr);
    if (instr.kind == InstrKind::Del) {
      live.erase(instr.order.id);
    } else {
      Qty traded = 0;
      for (const Transaction& tx : m) {
        traded += tx.qty;
        live.reduce(instr.kind == InstrKind::Buy ? tx.ask_id : tx.bid_id,
                    tx.qty);
      }
      if (traded < instr.order.qty)
        live.insert(instr.order.id, instr.order.qty - traded);
    }
    book.instructions.push_back(instr);
  }
  return book;
}

OrderBook gen_adversarial_book(std::size_t n) {
  OrderBook book;
  book.instructions.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Order o{k + 1, k + 1, static_cast<Price>(n - k), 1};
    book.instructions.push_back(Instruction::buy(o));
  }
  return book;
}

std::vector<Price> sort_via_cda(const std::vector<Price>& values) {
  std::unordered_set<Price> seen;
  for (Price v : values) {
    if (v < 1) throw std::invalid_argument("sort_via_cda: values must be positive");
    if (!seen.insert(v).second)
      throw std::invalid_argument("sort_via_cda: values must be distinct");
  }

  const std::size_t n = values.size();
  OrderBook book;
  book.instructions.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    book.instructions.push_back(
        Instruction::buy(Order{i + 1, i + 1, values[i], 1}));
  for (std::size_t i = 0; i < n; ++i)
    book.instructions.push_back(
        Instruction::sell(Order{n + i + 1, n + i + 1, 0, 1}));

  std::vector<Price> out;
  out.reserve(n);
  for (const Matching& m : engine::run_book(book))
    for (const Transaction& tx : m)
      out.push_back(values[tx.bid_id - 1]);
  return out;
}

AuditResult audited_run(const OrderBook& book, EngineKind engine_kind) {
  if (auto violation = validate_structured(book))
    throw std::invalid_argument("order book is not structured: " +
                                violation->to_string());

  AuditResult result;
  result.matchings.reserve(book.instructions.size());

  engine::EngineState tree;
  reference::RefState list;
  std::vector<Order> bids_before, asks_before;

  for (std::size_t k = 1; k <= book.instructions.size(); ++k) {
    const Instruction& instr = book.instructions[k - 1];
    Matching m;
    std::vector<Order> bids_after, asks_after;
    if (engine_kind == EngineKind::Tree) {
      m = engine::process_instruction(tree, instr);
      bids_after = tree.bids.to_sorted_list();
      asks_after = tree.asks.to_sorted_list();
    } else {
      m = reference::process_instruction(list, instr);
      bids_after = snapshot(list.bids);
      asks_after = snapshot(list.asks);
    }

    if (!result.failed_step) {
      spec_props::Transition t{std::move(bids_before), std::move(asks_before),
                               instr, bids_after, asks_after, m};
      if (!spec_props::check_positive_spread(t.after_bids, t.after_asks)) {
        result.failed_step = k;
        result.failed_check = "positive-spread";
      } else if (!spec_props::check_priority(t)) {
        result.failed_step = k;
        result.failed_check = "priority";
      } else if (!spec_props::check_conservation(t)) {
        result.failed_step = k;
        result.failed_check = "conservation";
      }
    }

    bids_before = std::move(bids_after);
    asks_before = std::move(asks_after);
    result.matchings.push_back(std::move(m));
  }
  return result;
}

double time_run_book(EngineKind engine_kind, const OrderBook& book) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Matching> out = engine_kind == EngineKind::Tree
                                        ? engine::run_book(book)
                                        : reference::run_book(book);
  const auto stop = std::chrono::steady_clock::now();
  static volatile std::size_t sink = 0;
  sink = sink + out.size();
  return std::chrono::duration<double>(stop - start).count();
}

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes,
                                const std::vector<EngineKind>& engines,
                                std::uint64_t seed, bool adversarial) {
  std::vector<BenchRow> rows;
  std::map<std::pair<std::string, std::size_t>, double> timed;
  for (std::size_t n : sizes) {
    const OrderBook book = adversarial
                               ? gen_adversarial_book(n)
                               : gen_book(GenParams{.n = n, .seed = seed});
    for (EngineKind engine_kind : engines) {
      BenchRow row;
      row.n = n;
      row.engine = engine_kind == EngineKind::Tree ? "tree" : "list";
      row.seconds = time_run_book(engine_kind, book);
      if (n % 10 == 0) {
        auto it = timed.find({row.engine, n / 10});
        if (it != timed.end() && it->second > 0.0)
          row.ratio_vs_tenth = row.seconds / it->second;
      }
      timed[{row.engine, n}] = row.seconds;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "n,engine,seconds,ratio_vs_tenth\n";
  for (const BenchRow& row : rows) {
    out << row.n << ',' << row.engine << ',' << row.seconds << ',';
    if (row.ratio_vs_tenth) out << *row.ratio_vs_tenth;
    out << '\n';
  }
}

}  // namespace cda::toolkit
