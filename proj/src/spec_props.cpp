#include "cda/spec_props.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

namespace cda::spec_props {

namespace {

void insert_competitive(std::vector<Order>& book, const Order& o, Side side) {
  auto it = std::find_if(book.begin(), book.end(), [&](const Order& r) {
    return more_competitive(o, r, side);
  });
  book.insert(it, o);
}

void erase_id(std::vector<Order>& book, OrderId id) {
  std::erase_if(book, [id](const Order& o) { return o.id == id; });
}

std::unordered_map<OrderId, Qty> traded_quantities(const Matching& m,
                                                   bool by_bid_id) {
  std::unordered_map<OrderId, Qty> traded;
  for (const Transaction& tx : m)
    traded[by_bid_id ? tx.bid_id : tx.ask_id] += tx.qty;
  return traded;
}

// One side of the conservation check: the after-book must be exactly the
// augmented book minus traded quantities, with exhausted orders gone.
bool side_conserved(const std::vector<Order>& augmented,
                    const std::vector<Order>& after,
                    const std::unordered_map<OrderId, Qty>& traded) {
  std::vector<Order> expected;
  expected.reserve(augmented.size());
  std::size_t traded_ids_seen = 0;
  for (const Order& o : augmented) {
    Qty q = 0;
    if (auto it = traded.find(o.id); it != traded.end()) {
      q = it->second;
      ++traded_ids_seen;
    }
    if (q < 0 || q > o.qty) return false;
    if (q < o.qty)
      expected.push_back(Order{o.id, o.timestamp, o.price, o.qty - q});
  }
  // Every traded id must name a resident of the augmented book.
  if (traded_ids_seen != traded.size()) return false;

  std::vector<Order> got = after;
  auto full_order = [](const Order& x, const Order& y) {
    return std::tie(x.id, x.timestamp, x.price, x.qty) <
           std::tie(y.id, y.timestamp, y.price, y.qty);
  };
  std::sort(expected.begin(), expected.end(), full_order);
  std::sort(got.begin(), got.end(), full_order);
  return expected == got;
}

}  // namespace

std::pair<std::vector<Order>, std::vector<Order>> augmented_books(
    const Transition& t) {
  std::vector<Order> bids = t.before_bids;
  std::vector<Order> asks = t.before_asks;
  switch (t.instr.kind) {
    case InstrKind::Buy:
      insert_competitive(bids, t.instr.order, Side::Bid);
      break;
    case InstrKind::Sell:
      insert_competitive(asks, t.instr.order, Side::Ask);
      break;
    case InstrKind::Del:
      erase_id(bids, t.instr.order.id);
      erase_id(asks, t.instr.order.id);
      break;
  }
  return {std::move(bids), std::move(asks)};
}

bool check_positive_spread(const std::vector<Order>& after_bids,
                           const std::vector<Order>& after_asks) {
  if (after_bids.empty() || after_asks.empty()) return true;
  Price best_bid = after_bids.front().price;
  for (const Order& b : after_bids) best_bid = std::max(best_bid, b.price);
  Price best_ask = after_asks.front().price;
  for (const Order& a : after_asks) best_ask = std::min(best_ask, a.price);
  return best_bid < best_ask;
}

bool check_priority(const Transition& t) {
  if (t.matching.empty() || t.instr.kind == InstrKind::Del) return true;

  const bool incoming_is_bid = t.instr.kind == InstrKind::Buy;
  auto [bids, asks] = augmented_books(t);
  const std::vector<Order>& counter = incoming_is_bid ? asks : bids;
  const Side counter_side = incoming_is_bid ? Side::Ask : Side::Bid;
  const auto traded = traded_quantities(t.matching, /*by_bid_id=*/!incoming_is_bid);

  // Locate the least competitive counterparty that traded; every traded id
  // must be a resident of the counter book at step start.
  const Order* least = nullptr;
  std::size_t traded_ids_seen = 0;
  for (const Order& o : counter) {
    if (!traded.contains(o.id)) continue;
    ++traded_ids_seen;
    if (least == nullptr || more_competitive(*least, o, counter_side))
      least = &o;
  }
  if (traded_ids_seen != traded.size() || least == nullptr) return false;

  // Everyone strictly ahead of it must be fully consumed in this step.
  for (const Order& o : counter) {
    if (!more_competitive(o, *least, counter_side)) continue;
    auto it = traded.find(o.id);
    if (it == traded.end() || it->second != o.qty) return false;
  }
  return true;
}

bool check_conservation(const Transition& t) {
  for (const Transaction& tx : t.matching)
    if (tx.qty < 1) return false;
  auto [bids, asks] = augmented_books(t);
  return side_conserved(bids, t.after_bids,
                        traded_quantities(t.matching, /*by_bid_id=*/true)) &&
         side_conserved(asks, t.after_asks,
                        traded_quantities(t.matching, /*by_bid_id=*/false));
}

}  // namespace cda::spec_props
