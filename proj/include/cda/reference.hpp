#pragma once

#include <list>
#include <optional>
#include <vector>

#include "cda/types.hpp"

namespace cda::reference {

// One side of the book as a competitiveness-sorted list, most competitive at
// the head. Insertion scans linearly, deletion scans linearly, head
// extraction is O(1). This is the quadratic baseline and the differential
// oracle; it stays deliberately naive.
struct ListBook {
  Side side = Side::Bid;
  std::list<Order> orders;
};

// Inserts o behind every strictly more competitive resident.
void insert_sorted(ListBook& book, const Order& o);

std::optional<Order> remove_by_id(ListBook& book, OrderId id);

struct RefState {
  ListBook bids{Side::Bid, {}};
  ListBook asks{Side::Ask, {}};
};

Matching process_instruction(RefState& s, const Instruction& instr);

// Same contract as engine::run_book, over sorted lists.
std::vector<Matching> run_book(const OrderBook& book);

}  // namespace cda::reference
