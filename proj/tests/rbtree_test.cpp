#include "cda/rbtree.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"

using cda::DuplicateKeyError;
using cda::OrderedMap;

namespace {

// Independent oracle: a key-sorted vector of (key, element) pairs kept in
// sync by plain linear/binary-search bookkeeping.
template <typename K, typename E>
class SortedListOracle {
 public:
  bool add(K k, E e) {
    auto it = lower_bound(k);
    if (it != items_.end() && it->first == k) return false;
    items_.insert(it, {k, e});
    return true;
  }

  std::optional<E> remove(K k) {
    auto it = lower_bound(k);
    if (it == items_.end() || it->first != k) return std::nullopt;
    E out = it->second;
    items_.erase(it);
    return out;
  }

  std::optional<E> find(K k) const {
    auto it = lower_bound(k);
    if (it == items_.end() || it->first != k) return std::nullopt;
    return it->second;
  }

  std::optional<E> extract_min() {
    if (items_.empty()) return std::nullopt;
    E out = items_.front().second;
    items_.erase(items_.begin());
    return out;
  }

  std::vector<E> elements() const {
    std::vector<E> out;
    out.reserve(items_.size());
    for (const auto& [k, e] : items_) out.push_back(e);
    return out;
  }

  std::size_t size() const { return items_.size(); }
  bool contains(K k) const { return find(k).has_value(); }

  K key_at(std::size_t i) const { return items_[i].first; }

 private:
  typename std::vector<std::pair<K, E>>::const_iterator lower_bound(K k) const {
    return std::lower_bound(items_.begin(), items_.end(), k,
                            [](const auto& p, K key) { return p.first < key; });
  }
  typename std::vector<std::pair<K, E>>::iterator lower_bound(K k) {
    return std::lower_bound(items_.begin(), items_.end(), k,
                            [](const auto& p, K key) { return p.first < key; });
  }

  std::vector<std::pair<K, E>> items_;
};

bool height_within_bound(int height, std::size_t n) {
  if (n == 0) return height == 0;
  return height <= 2.0 * std::log2(static_cast<double>(n) + 1.0) + 1e-9;
}

}  // namespace

TEST_CASE("rbtree: empty map") {
  OrderedMap<int, std::string> m;
  CHECK(m.size() == 0);
  CHECK(m.empty());
  CHECK(m.elements().empty());
  CHECK(!m.find(7));
  CHECK(!m.peek_min());
  CHECK(!m.extract_min());
  CHECK(m.validate());
}

TEST_CASE("rbtree: add keeps elements and key order") {
  OrderedMap<int, std::string> m;
  m.add(5, "e5");
  CHECK(m.size() == 1);
  CHECK(m.elements() == std::vector<std::string>{"e5"});

  m.add(3, "e3");
  CHECK(m.elements() == std::vector<std::string>{"e3", "e5"});

  m.add(4, "e4");
  m.add(1, "e1");
  CHECK(m.elements() == std::vector<std::string>{"e1", "e3", "e4", "e5"});
  CHECK(m.validate());
}

TEST_CASE("rbtree: duplicate add is rejected, map unchanged") {
  OrderedMap<int, std::string> m;
  m.add(5, "e5");
  CHECK_THROWS_AS(m.add(5, "other"), DuplicateKeyError);
  CHECK(m.size() == 1);
  CHECK(m.find(5) == "e5");
  CHECK(m.validate());
}

TEST_CASE("rbtree: remove returns the element or absent") {
  OrderedMap<int, std::string> m;
  m.add(5, "e5");
  auto out = m.remove(5);
  REQUIRE(out.has_value());
  CHECK(*out == "e5");
  CHECK(m.empty());

  CHECK(!m.remove(5));
  CHECK(m.validate());
}

TEST_CASE("rbtree: find present and absent") {
  OrderedMap<int, std::string> m;
  m.add(5, "e5");
  CHECK(m.find(5) == "e5");
  CHECK(!m.find(6));
}

TEST_CASE("rbtree: extract_min drains in ascending key order") {
  OrderedMap<int, int> m;
  m.add(5, 50);
  m.add(3, 30);
  auto first = m.extract_min();
  REQUIRE(first.has_value());
  CHECK(*first == 30);
  CHECK(m.elements() == std::vector<int>{50});

  std::mt19937_64 rng(7);
  OrderedMap<std::uint64_t, std::uint64_t> big;
  SortedListOracle<std::uint64_t, std::uint64_t> oracle;
  while (oracle.size() < 100) {
    std::uint64_t k = rng();
    if (oracle.add(k, k * 2 + 1)) big.add(k, k * 2 + 1);
  }
  std::vector<std::uint64_t> drained;
  while (auto e = big.extract_min()) drained.push_back(*e);
  CHECK(drained == oracle.elements());
  CHECK(big.empty());
  CHECK(big.validate());
}

TEST_CASE("rbtree: random adds agree with the sorted-list oracle") {
  std::mt19937_64 rng(11);
  OrderedMap<std::uint64_t, std::uint64_t> m;
  SortedListOracle<std::uint64_t, std::uint64_t> oracle;
  while (oracle.size() < 100) {
    std::uint64_t k = rng() % 1000;
    std::uint64_t e = rng();
    if (oracle.add(k, e)) m.add(k, e);
  }
  CHECK(m.size() == 100);
  CHECK(m.elements() == oracle.elements());
  CHECK(m.validate());

  // find agrees with a linear scan for hits and misses alike
  for (std::uint64_t k = 0; k < 1000; ++k)
    CHECK(m.find(k) == oracle.find(k));
}

TEST_CASE("rbtree: element-level add and remove semantics") {
  // fresh-key add: the element set afterwards is exactly before + {x}
  std::mt19937_64 rng(13);
  OrderedMap<std::uint64_t, std::uint64_t> m;
  SortedListOracle<std::uint64_t, std::uint64_t> oracle;
  for (int i = 0; i < 200; ++i) {
    std::uint64_t k = rng() % 500;
    std::uint64_t e = rng();
    if (!oracle.contains(k)) {
      auto before = oracle.elements();
      oracle.add(k, e);
      m.add(k, e);
      auto after = m.elements();
      // after == before with e spliced in at the key's rank
      CHECK(after == oracle.elements());
      CHECK(after.size() == before.size() + 1);
      CHECK(std::count(after.begin(), after.end(), e) >= 1);
    }
  }
  // removal: exactly the keyed element disappears
  while (oracle.size() > 0) {
    std::uint64_t k = oracle.key_at(rng() % oracle.size());
    auto want = oracle.remove(k);
    auto got = m.remove(k);
    CHECK(got == want);
    CHECK(m.elements() == oracle.elements());
  }
  CHECK(m.validate());
}

TEST_CASE("rbtree: interleaved add/remove fuzz keeps all invariants") {
  std::mt19937_64 rng(17);
  OrderedMap<std::uint64_t, std::uint64_t> m;
  SortedListOracle<std::uint64_t, std::uint64_t> oracle;
  for (int op = 0; op < 2000; ++op) {
    const std::uint64_t roll = rng() % 100;
    if (roll < 55) {
      std::uint64_t k = rng() % 4096;
      std::uint64_t e = rng();
      if (oracle.add(k, e)) {
        m.add(k, e);
      } else {
        CHECK_THROWS_AS(m.add(k, e), DuplicateKeyError);
      }
    } else if (roll < 80) {
      std::uint64_t k = (oracle.size() > 0 && roll % 2 == 0)
                            ? oracle.key_at(rng() % oracle.size())
                            : rng() % 4096;
      CHECK(m.remove(k) == oracle.remove(k));
    } else if (roll < 90) {
      CHECK(m.extract_min() == oracle.extract_min());
    } else {
      std::uint64_t k = rng() % 4096;
      CHECK(m.find(k) == oracle.find(k));
    }
    CHECK(m.validate());
    CHECK(m.size() == oracle.size());
    CHECK(height_within_bound(m.height(), m.size()));
  }
  CHECK(m.elements() == oracle.elements());
}

TEST_CASE("rbtree: height stays within twice the balanced log") {
  OrderedMap<int, int> m;
  for (int i = 0; i < 4096; ++i) {
    m.add(i, i);  // ascending keys: the degenerate case for plain BSTs
    CHECK(height_within_bound(m.height(), m.size()));
  }
  CHECK(m.validate());
}

TEST_CASE("rbtree: copies are deep and independent") {
  OrderedMap<int, int> a;
  for (int i = 0; i < 64; ++i) a.add(i, i * 10);
  OrderedMap<int, int> b = a;
  b.remove(10);
  CHECK(a.find(10) == 100);
  CHECK(!b.find(10));
  CHECK(a.validate());
  CHECK(b.validate());

  OrderedMap<int, int> c = std::move(a);
  CHECK(c.find(10) == 100);
  CHECK(c.validate());
}

TEST_CASE("rbtree: operation counter tracks public calls") {
  auto& stats = cda::rb_stats();
  stats.reset();
  OrderedMap<int, int> m;
  m.add(1, 1);
  m.add(2, 2);
  m.find(1);
  m.remove(2);
  m.extract_min();
  m.peek_min();
  m.elements();
  CHECK(stats.adds == 2);
  CHECK(stats.finds == 1);
  CHECK(stats.removes == 1);
  CHECK(stats.extract_mins == 1);
  CHECK(stats.peeks == 1);
  CHECK(stats.lists == 1);
  CHECK(stats.total() == 7);
  stats.reset();
}
