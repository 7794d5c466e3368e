#pragma once

#include <optional>
#include <vector>

#include "cda/rbtree.hpp"
#include "cda/types.hpp"

namespace cda {

// One side of the resident book. The same set of orders lives in two
// always-synchronized trees: by_comp_ answers "most competitive" queries,
// by_id_ answers delete-by-id lookups. Every operation is a constant number
// of O(log n) tree calls.
class DualBook {
 public:
  explicit DualBook(Side side) : side_(side) {}

  Side side() const noexcept { return side_; }
  std::size_t size() const noexcept { return by_id_.size(); }
  bool empty() const noexcept { return by_id_.empty(); }

  // Adds a resident order. The id and the (price, timestamp) pair must both
  // be fresh; a collision throws ContractViolation and leaves the book
  // untouched.
  void insert(const Order& o);

  // Removes the order with this id from both trees; nullopt when absent.
  std::optional<Order> delete_by_id(OrderId id);

  // Removes and returns the most competitive order; nullopt when empty.
  std::optional<Order> extract_most_competitive();

  // Read-only variant of extract_most_competitive.
  std::optional<Order> peek_most_competitive() const;

  // Snapshot in competitiveness order, most competitive first.
  std::vector<Order> to_sorted_list() const;

  // Both trees valid and holding the same set of orders.
  bool validate() const;

 private:
  OrderedMap<CompetitiveKey, Order> by_comp_;
  OrderedMap<OrderId, Order> by_id_;
  Side side_;
};

}  // namespace cda
