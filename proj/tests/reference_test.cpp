#include "cda/reference.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"

using namespace cda;
using reference::ListBook;
using reference::RefState;

namespace {

std::vector<Order> as_vector(const ListBook& book) {
  return {book.orders.begin(), book.orders.end()};
}

bool is_sorted_by_competitiveness(const ListBook& book) {
  return std::is_sorted(book.orders.begin(), book.orders.end(),
                        [&](const Order& a, const Order& b) {
                          return more_competitive(a, b, book.side);
                        });
}

}  // namespace

TEST_CASE("reference: the shared worked examples match the tree engine's") {
  RefState s;
  CHECK(reference::process_instruction(s, Instruction::buy(Order{1, 1, 100, 5}))
            .empty());
  CHECK(as_vector(s.bids) == std::vector<Order>{Order{1, 1, 100, 5}});

  auto m = reference::process_instruction(s, Instruction::sell(Order{2, 2, 90, 3}));
  CHECK(m == Matching{Transaction{1, 2, 3}});
  CHECK(as_vector(s.bids) == std::vector<Order>{Order{1, 1, 100, 2}});
  CHECK(s.asks.orders.empty());

  CHECK(reference::process_instruction(s, Instruction::del(42, 3)).empty());
  CHECK(as_vector(s.bids) == std::vector<Order>{Order{1, 1, 100, 2}});
}

TEST_CASE("reference: non-matching ask lands between resident price levels") {
  RefState s;
  reference::process_instruction(s, Instruction::sell(Order{1, 1, 90, 1}));
  reference::process_instruction(s, Instruction::sell(Order{2, 2, 110, 1}));
  reference::process_instruction(s, Instruction::sell(Order{3, 3, 100, 1}));
  auto asks = as_vector(s.asks);
  REQUIRE(asks.size() == 3);
  CHECK(asks[0].price == 90);
  CHECK(asks[1].price == 100);
  CHECK(asks[2].price == 110);
}

TEST_CASE("reference: deleting the middle order keeps the rest in order") {
  ListBook book{Side::Ask, {}};
  reference::insert_sorted(book, Order{1, 1, 90, 1});
  reference::insert_sorted(book, Order{2, 2, 100, 1});
  reference::insert_sorted(book, Order{3, 3, 110, 1});
  auto removed = reference::remove_by_id(book, 2);
  REQUIRE(removed.has_value());
  CHECK(removed->id == 2);
  CHECK(as_vector(book) == std::vector<Order>{Order{1, 1, 90, 1}, Order{3, 3, 110, 1}});
  CHECK(!reference::remove_by_id(book, 2));
}

TEST_CASE("reference: books stay sorted under random operations") {
  std::mt19937_64 rng(31);
  RefState s;
  Timestamp ts = 1;
  OrderId next_id = 1;
  for (int op = 0; op < 400; ++op) {
    const std::uint64_t roll = rng() % 100;
    Instruction instr;
    if (roll < 10) {
      instr = Instruction::del(rng() % (next_id + 1) + 1, ts);
    } else {
      Order o{next_id++, ts, static_cast<Price>(rng() % 40 + 80),
              static_cast<Qty>(rng() % 9 + 1)};
      instr = roll < 55 ? Instruction::buy(o) : Instruction::sell(o);
    }
    ++ts;
    reference::process_instruction(s, instr);
    CHECK(is_sorted_by_competitiveness(s.bids));
    CHECK(is_sorted_by_competitiveness(s.asks));
  }
}
