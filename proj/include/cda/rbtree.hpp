#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cda/errors.hpp"

namespace cda {

// Running count of public OrderedMap calls on this thread. The engine's
// complexity argument is phrased in tree operations, so tests assert on these
// numbers rather than on wall time.
struct RbStats {
  std::uint64_t adds = 0;
  std::uint64_t removes = 0;
  std::uint64_t finds = 0;
  std::uint64_t extract_mins = 0;
  std::uint64_t peeks = 0;
  std::uint64_t lists = 0;

  std::uint64_t total() const noexcept {
    return adds + removes + finds + extract_mins + peeks + lists;
  }
  void reset() noexcept { *this = RbStats{}; }
};

inline RbStats& rb_stats() noexcept {
  thread_local RbStats stats;
  return stats;
}

// Ordered key -> element map backed by a red-black tree (CLRS insert/delete
// rebalancing, sentinel nil node). Keys are unique and are not the elements:
// the element is stored alongside its key and returned by value. add() on a
// key that is already present throws DuplicateKeyError instead of silently
// overwriting; every layer above guarantees fresh keys, so a duplicate means
// a bug that must surface immediately.
//
// Not thread safe; a map may be handed between threads but never mutated
// concurrently.
template <typename Key, typename Elem, typename Compare = std::less<Key>>
class OrderedMap {
 public:
  OrderedMap() : OrderedMap(Compare{}) {}

  explicit OrderedMap(Compare cmp) : cmp_(std::move(cmp)) {
    nil_ = new Node{};
    nil_->color = Color::Black;
    nil_->left = nil_->right = nil_->parent = nil_;
    root_ = nil_;
  }

  OrderedMap(const OrderedMap& other) : OrderedMap(other.cmp_) {
    root_ = clone(other.root_, other.nil_, nil_);
    size_ = other.size_;
  }

  OrderedMap(OrderedMap&& other) noexcept(false) : OrderedMap(other.cmp_) {
    swap(other);
  }

  OrderedMap& operator=(const OrderedMap& other) {
    if (this != &other) {
      OrderedMap copy(other);
      swap(copy);
    }
    return *this;
  }

  OrderedMap& operator=(OrderedMap&& other) noexcept {
    swap(other);
    return *this;
  }

  ~OrderedMap() {
    for (Node* block : blocks_) delete[] block;
    delete nil_;
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  // Inserts an element under a fresh key. Throws DuplicateKeyError when the
  // key is already present; the map is left unchanged in that case.
  void add(const Key& key, const Elem& elem) {
    ++rb_stats().adds;
    Node* parent = nil_;
    Node* cur = root_;
    while (cur != nil_) {
      parent = cur;
      if (cmp_(key, cur->key)) {
        cur = cur->left;
      } else if (cmp_(cur->key, key)) {
        cur = cur->right;
      } else {
        throw DuplicateKeyError("OrderedMap::add: key already present");
      }
    }
    Node* z = make_node(key, elem, parent);
    if (parent == nil_) {
      root_ = z;
    } else if (cmp_(key, parent->key)) {
      parent->left = z;
    } else {
      parent->right = z;
    }
    ++size_;
    insert_fixup(z);
  }

  // Removes the element keyed k and returns it; nullopt when absent.
  std::optional<Elem> remove(const Key& key) {
    ++rb_stats().removes;
    Node* z = find_node(key);
    if (z == nil_) return std::nullopt;
    std::optional<Elem> out(std::move(z->elem));
    erase_node(z);
    return out;
  }

  std::optional<Elem> find(const Key& key) const {
    ++rb_stats().finds;
    Node* z = find_node(key);
    if (z == nil_) return std::nullopt;
    return z->elem;
  }

  // Removes and returns the element with the smallest key; nullopt if empty.
  std::optional<Elem> extract_min() {
    ++rb_stats().extract_mins;
    if (root_ == nil_) return std::nullopt;
    Node* z = minimum(root_);
    std::optional<Elem> out(std::move(z->elem));
    erase_node(z);
    return out;
  }

  std::optional<Elem> peek_min() const {
    ++rb_stats().peeks;
    if (root_ == nil_) return std::nullopt;
    return minimum(root_)->elem;
  }

  // All elements in strictly increasing key order.
  std::vector<Elem> elements() const {
    ++rb_stats().lists;
    std::vector<Elem> out;
    out.reserve(size_);
    collect(root_, out);
    return out;
  }

  // Structural self-check: strict BST order on keys, no red node with a red
  // child, equal black count on every root-to-leaf path, consistent parent
  // links and node count. Diagnostic only; not counted in rb_stats.
  bool validate() const {
    if (nil_->color != Color::Black) return false;
    if (root_ == nil_) return size_ == 0;
    if (root_->color != Color::Black) return false;
    if (root_->parent != nil_) return false;
    std::size_t count = 0;
    const Key* prev = nullptr;
    if (!check_order(root_, prev, count)) return false;
    if (count != size_) return false;
    if (!check_links_and_colors(root_)) return false;
    return black_height(root_) >= 0;
  }

  // Number of nodes on the longest root-to-leaf path; 0 when empty.
  int height() const { return height_of(root_); }

 private:
  enum class Color : unsigned char { Red, Black };

  // Key and child pointers lead so a search touches one cache line per
  // level; elem and parent are only read once a node is found.
  struct Node {
    Key key;
    Node* left;
    Node* right;
    Color color;
    Node* parent;
    Elem elem;
  };

  void swap(OrderedMap& other) noexcept {
    std::swap(root_, other.root_);
    std::swap(nil_, other.nil_);
    std::swap(free_, other.free_);
    std::swap(blocks_, other.blocks_);
    std::swap(next_slot_, other.next_slot_);
    std::swap(size_, other.size_);
    std::swap(cmp_, other.cmp_);
  }

  // Nodes come from per-tree arena blocks and erased nodes go onto a free
  // list for reuse. The match loop churns through extract/insert pairs, so
  // reuse keeps hot nodes hot, and block allocation keeps long-lived
  // residents clustered instead of scattered across the heap.
  Node* make_node(const Key& key, const Elem& elem, Node* parent) {
    Node* z = free_;
    if (z != nullptr) {
      free_ = z->right;
    } else {
      if (next_slot_ == kBlockSize) {
        blocks_.push_back(new Node[kBlockSize]);
        next_slot_ = 0;
      }
      z = &blocks_.back()[next_slot_++];
    }
    z->key = key;
    z->elem = elem;
    z->color = Color::Red;
    z->left = z->right = nil_;
    z->parent = parent;
    return z;
  }

  void release_node(Node* z) {
    z->right = free_;
    free_ = z;
  }

  Node* clone(Node* node, Node* other_nil, Node* parent) {
    if (node == other_nil) return nil_;
    Node* copy = make_node(node->key, node->elem, parent);
    copy->color = node->color;
    copy->left = clone(node->left, other_nil, copy);
    copy->right = clone(node->right, other_nil, copy);
    return copy;
  }

  Node* find_node(const Key& key) const {
    Node* cur = root_;
    while (cur != nil_) {
      if (cmp_(key, cur->key)) {
        cur = cur->left;
      } else if (cmp_(cur->key, key)) {
        cur = cur->right;
      } else {
        return cur;
      }
    }
    return nil_;
  }

  Node* minimum(Node* node) const {
    while (node->left != nil_) node = node->left;
    return node;
  }

  void rotate_left(Node* x) {
    Node* y = x->right;
    x->right = y->left;
    if (y->left != nil_) y->left->parent = x;
    y->parent = x->parent;
    if (x->parent == nil_)
      root_ = y;
    else if (x == x->parent->left)
      x->parent->left = y;
    else
      x->parent->right = y;
    y->left = x;
    x->parent = y;
  }

  void rotate_right(Node* x) {
    Node* y = x->left;
    x->left = y->right;
    if (y->right != nil_) y->right->parent = x;
    y->parent = x->parent;
    if (x->parent == nil_)
      root_ = y;
    else if (x == x->parent->right)
      x->parent->right = y;
    else
      x->parent->left = y;
    y->right = x;
    x->parent = y;
  }

  void insert_fixup(Node* z) {
    while (z->parent->color == Color::Red) {
      if (z->parent == z->parent->parent->left) {
        Node* uncle = z->parent->parent->right;
        if (uncle->color == Color::Red) {
          z->parent->color = Color::Black;
          uncle->color = Color::Black;
          z->parent->parent->color = Color::Red;
          z = z->parent->parent;
        } else {
          if (z == z->parent->right) {
            z = z->parent;
            rotate_left(z);
          }
          z->parent->color = Color::Black;
          z->parent->parent->color = Color::Red;
          rotate_right(z->parent->parent);
        }
      } else {
        Node* uncle = z->parent->parent->left;
        if (uncle->color == Color::Red) {
          z->parent->color = Color::Black;
          uncle->color = Color::Black;
          z->parent->parent->color = Color::Red;
          z = z->parent->parent;
        } else {
          if (z == z->parent->left) {
            z = z->parent;
            rotate_right(z);
          }
          z->parent->color = Color::Black;
          z->parent->parent->color = Color::Red;
          rotate_left(z->parent->parent);
        }
      }
    }
    root_->color = Color::Black;
  }

  // Replaces the subtree rooted at u with the one rooted at v. v may be nil;
  // its parent pointer is set regardless, which erase_fixup relies on.
  void transplant(Node* u, Node* v) {
    if (u->parent == nil_)
      root_ = v;
    else if (u == u->parent->left)
      u->parent->left = v;
    else
      u->parent->right = v;
    v->parent = u->parent;
  }

  void erase_node(Node* z) {
    Node* y = z;
    Color y_original = y->color;
    Node* x = nullptr;
    if (z->left == nil_) {
      x = z->right;
      transplant(z, z->right);
    } else if (z->right == nil_) {
      x = z->left;
      transplant(z, z->left);
    } else {
      y = minimum(z->right);
      y_original = y->color;
      x = y->right;
      if (y->parent == z) {
        x->parent = y;
      } else {
        transplant(y, y->right);
        y->right = z->right;
        y->right->parent = y;
      }
      transplant(z, y);
      y->left = z->left;
      y->left->parent = y;
      y->color = z->color;
    }
    release_node(z);
    --size_;
    if (y_original == Color::Black) erase_fixup(x);
  }

  void erase_fixup(Node* x) {
    while (x != root_ && x->color == Color::Black) {
      if (x == x->parent->left) {
        Node* w = x->parent->right;
        if (w->color == Color::Red) {
          w->color = Color::Black;
          x->parent->color = Color::Red;
          rotate_left(x->parent);
          w = x->parent->right;
        }
        if (w->left->color == Color::Black && w->right->color == Color::Black) {
          w->color = Color::Red;
          x = x->parent;
        } else {
          if (w->right->color == Color::Black) {
            w->left->color = Color::Black;
            w->color = Color::Red;
            rotate_right(w);
            w = x->parent->right;
          }
          w->color = x->parent->color;
          x->parent->color = Color::Black;
          w->right->color = Color::Black;
          rotate_left(x->parent);
          x = root_;
        }
      } else {
        Node* w = x->parent->left;
        if (w->color == Color::Red) {
          w->color = Color::Black;
          x->parent->color = Color::Red;
          rotate_right(x->parent);
          w = x->parent->left;
        }
        if (w->right->color == Color::Black && w->left->color == Color::Black) {
          w->color = Color::Red;
          x = x->parent;
        } else {
          if (w->left->color == Color::Black) {
            w->right->color = Color::Black;
            w->color = Color::Red;
            rotate_left(w);
            w = x->parent->left;
          }
          w->color = x->parent->color;
          x->parent->color = Color::Black;
          w->left->color = Color::Black;
          rotate_right(x->parent);
          x = root_;
        }
      }
    }
    x->color = Color::Black;
  }

  void collect(Node* node, std::vector<Elem>& out) const {
    if (node == nil_) return;
    collect(node->left, out);
    out.push_back(node->elem);
    collect(node->right, out);
  }

  bool check_order(Node* node, const Key*& prev, std::size_t& count) const {
    if (node == nil_) return true;
    if (!check_order(node->left, prev, count)) return false;
    if (prev != nullptr && !cmp_(*prev, node->key)) return false;
    prev = &node->key;
    ++count;
    return check_order(node->right, prev, count);
  }

  bool check_links_and_colors(Node* node) const {
    if (node == nil_) return true;
    if (node->left != nil_ && node->left->parent != node) return false;
    if (node->right != nil_ && node->right->parent != node) return false;
    if (node->color == Color::Red &&
        (node->left->color == Color::Red || node->right->color == Color::Red))
      return false;
    return check_links_and_colors(node->left) &&
           check_links_and_colors(node->right);
  }

  // Black nodes on every path from node to a leaf, or -1 on mismatch.
  int black_height(Node* node) const {
    if (node == nil_) return 1;
    int lh = black_height(node->left);
    int rh = black_height(node->right);
    if (lh < 0 || rh < 0 || lh != rh) return -1;
    return lh + (node->color == Color::Black ? 1 : 0);
  }

  int height_of(Node* node) const {
    if (node == nil_) return 0;
    return 1 + std::max(height_of(node->left), height_of(node->right));
  }

  static constexpr std::size_t kBlockSize = 256;

  Node* root_ = nullptr;
  Node* nil_ = nullptr;
  Node* free_ = nullptr;
  std::vector<Node*> blocks_;
  std::size_t next_slot_ = kBlockSize;
  std::size_t size_ = 0;
  [[no_unique_address]] Compare cmp_;
};

}  // namespace cda
