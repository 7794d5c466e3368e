#include "cda/dualbook.hpp"

#include <algorithm>
#include <string>

#include "cda/errors.hpp"

namespace cda {

void DualBook::insert(const Order& o) {
  const CompetitiveKey key = competitive_key(o, side_);
  try {
    by_comp_.add(key, o);
  } catch (const DuplicateKeyError&) {
    throw ContractViolation(
        "DualBook::insert: duplicate (price, timestamp) for order " +
        std::to_string(o.id));
  }
  try {
    by_id_.add(o.id, o);
  } catch (const DuplicateKeyError&) {
    by_comp_.remove(key);  // keep the trees in sync
    throw ContractViolation("DualBook::insert: duplicate order id " +
                            std::to_string(o.id));
  }
}

std::optional<Order> DualBook::delete_by_id(OrderId id) {
  // The id tree is searched first: it yields the price and timestamp that
  // address the competitiveness tree.
  std::optional<Order> found = by_id_.find(id);
  if (!found) return std::nullopt;
  by_id_.remove(id);
  by_comp_.remove(competitive_key(*found, side_));
  return found;
}

std::optional<Order> DualBook::extract_most_competitive() {
  std::optional<Order> best = by_comp_.extract_min();
  if (!best) return std::nullopt;
  by_id_.remove(best->id);
  return best;
}

std::optional<Order> DualBook::peek_most_competitive() const {
  return by_comp_.peek_min();
}

std::vector<Order> DualBook::to_sorted_list() const {
  return by_comp_.elements();
}

bool DualBook::validate() const {
  if (!by_comp_.validate() || !by_id_.validate()) return false;
  if (by_comp_.size() != by_id_.size()) return false;
  std::vector<Order> a = by_comp_.elements();
  std::vector<Order> b = by_id_.elements();
  auto by_order_id = [](const Order& x, const Order& y) { return x.id < y.id; };
  std::sort(a.begin(), a.end(), by_order_id);
  std::sort(b.begin(), b.end(), by_order_id);
  return a == b;
}

}  // namespace cda
