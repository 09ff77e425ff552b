#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace cartbicat {

// Characters that may not appear in user labels. Pair labels are built as
// "(a,b)", so parentheses and commas are reserved for the library; ':' and
// whitespace are reserved by the text format.
inline bool is_valid_atom_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == '(' || c == ')' || c == ',' || c == ':' || c == '#' || c == ' ' || c == '\t' ||
        c == '\n' || c == '\r')
      return false;
  }
  return true;
}

inline std::string pair_label(std::string_view a, std::string_view b) {
  std::string s;
  s.reserve(a.size() + b.size() + 3);
  s += '(';
  s += a;
  s += ',';
  s += b;
  s += ')';
  return s;
}

// A finite set: an ordered list of distinct labels. Copies share storage.
class FinSet {
 public:
  FinSet() : rep_(empty_rep()) {}

  explicit FinSet(std::vector<std::string> labels) {
    auto r = std::make_shared<Rep>();
    r->labels = std::move(labels);
    r->build_index();
    require(r->index.size() == r->labels.size(), ErrorKind::invalid_config,
            "duplicate label in finite set");
    r->indexed = true;
    rep_ = std::move(r);
  }

  FinSet(std::initializer_list<std::string> labels) : FinSet(std::vector<std::string>(labels)) {}

  // Skips the distinctness check. Only for labels that are distinct by construction.
  static FinSet trusted(std::vector<std::string> labels) {
    FinSet s;
    auto r = std::make_shared<Rep>();
    r->labels = std::move(labels);
    s.rep_ = std::move(r);
    return s;
  }

  // {"0", "1", ..., "n-1"} prefixed.
  static FinSet range(std::size_t n, std::string_view prefix = "e") {
    std::vector<std::string> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(std::string(prefix) + std::to_string(i));
    return trusted(std::move(v));
  }

  std::size_t size() const { return rep_->labels.size(); }
  bool empty() const { return rep_->labels.empty(); }
  const std::string& operator[](std::size_t i) const { return rep_->labels[i]; }
  const std::vector<std::string>& labels() const { return rep_->labels; }

  std::optional<std::size_t> index_of(std::string_view label) const {
    const Rep& r = *rep_;
    std::call_once(r.once, [&r] {
      if (!r.indexed) r.build_index();
    });
    auto it = r.index.find(std::string(label));
    if (it == r.index.end()) return std::nullopt;
    return it->second;
  }

  bool same_storage(const FinSet& o) const { return rep_ == o.rep_; }

  friend bool operator==(const FinSet& a, const FinSet& b) {
    return a.rep_ == b.rep_ || a.rep_->labels == b.rep_->labels;
  }

 private:
  struct Rep {
    std::vector<std::string> labels;
    mutable std::unordered_map<std::string, std::size_t> index;
    mutable std::once_flag once;
    bool indexed = false;
    void build_index() const {
      index.reserve(labels.size());
      for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
    }
  };

  static std::shared_ptr<const Rep> empty_rep() {
    static const auto e = std::make_shared<const Rep>();
    return e;
  }

  std::shared_ptr<const Rep> rep_;
};

// Cartesian product with labels "(x,y)", ordered x-major.
inline FinSet product(const FinSet& x, const FinSet& y) {
  std::vector<std::string> v;
  v.reserve(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) v.push_back(pair_label(x[i], y[j]));
  return FinSet::trusted(std::move(v));
}

inline std::size_t product_index(const FinSet&, const FinSet& y, std::size_t i, std::size_t j) {
  return i * y.size() + j;
}

// The terminal set {*}.
inline const FinSet& unit_set() {
  static const FinSet s = FinSet::trusted({"*"});
  return s;
}

// A total function between finite sets, stored as an index table.
class SetFn {
 public:
  SetFn() = default;
  SetFn(FinSet dom, FinSet cod, std::vector<std::size_t> image)
      : dom_(std::move(dom)), cod_(std::move(cod)), image_(std::move(image)) {
    require(image_.size() == dom_.size(), ErrorKind::invalid_config, "function table size differs from domain");
    for (std::size_t v : image_)
      require(v < cod_.size(), ErrorKind::invalid_config, "function value outside codomain");
  }

  static SetFn identity(const FinSet& x) {
    std::vector<std::size_t> v(x.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return SetFn(x, x, std::move(v));
  }

  static SetFn constant(const FinSet& x, const FinSet& y, std::size_t value) {
    return SetFn(x, y, std::vector<std::size_t>(x.size(), value));
  }

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<std::size_t>& table() const { return image_; }
  std::size_t operator()(std::size_t i) const { return image_[i]; }

  bool is_identity() const {
    if (!(dom_ == cod_)) return false;
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] != i) return false;
    return true;
  }

  bool is_injective() const {
    std::vector<char> seen(cod_.size(), 0);
    for (std::size_t v : image_) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  bool is_bijective() const { return dom_.size() == cod_.size() && is_injective(); }

  std::optional<SetFn> inverse() const {
    if (!is_bijective()) return std::nullopt;
    std::vector<std::size_t> v(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) v[image_[i]] = i;
    return SetFn(cod_, dom_, std::move(v));
  }

  friend bool operator==(const SetFn& a, const SetFn& b) {
    return a.image_ == b.image_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
  }

 private:
  FinSet dom_, cod_;
  std::vector<std::size_t> image_;
};

// g after f.
inline SetFn compose(const SetFn& g, const SetFn& f) {
  require(f.cod() == g.dom(), ErrorKind::boundary_mismatch, "function composition: codomain/domain differ");
  std::vector<std::size_t> v(f.dom().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g(f(i));
  return SetFn(f.dom(), g.cod(), std::move(v));
}

inline SetFn proj1(const FinSet& x, const FinSet& y) {
  std::vector<std::size_t> v;
  v.reserve(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) v.push_back(i);
  return SetFn(product(x, y), x, std::move(v));
}

inline SetFn proj2(const FinSet& x, const FinSet& y) {
  std::vector<std::size_t> v;
  v.reserve(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) v.push_back(j);
  return SetFn(product(x, y), y, std::move(v));
}

// a |-> (f a, g a)
inline SetFn fn_pair(const SetFn& f, const SetFn& g) {
  require(f.dom() == g.dom(), ErrorKind::boundary_mismatch, "pairing functions with different domains");
  std::vector<std::size_t> v(f.dom().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(i) * g.cod().size() + g(i);
  return SetFn(f.dom(), product(f.cod(), g.cod()), std::move(v));
}

// (x,y) |-> (f x, g y)
inline SetFn fn_times(const SetFn& f, const SetFn& g) {
  return fn_pair(compose(f, proj1(f.dom(), g.dom())), compose(g, proj2(f.dom(), g.dom())));
}

// Calls visit(table) for every function dom -> cod, in lexicographic order.
template <class Visit>
void for_each_function(std::size_t dom_size, std::size_t cod_size, Visit&& visit) {
  std::vector<std::size_t> t(dom_size, 0);
  if (dom_size > 0 && cod_size == 0) return;
  while (true) {
    visit(static_cast<const std::vector<std::size_t>&>(t));
    std::size_t k = dom_size;
    while (k > 0 && ++t[k - 1] == cod_size) t[--k] = 0;
    if (k == 0) return;
  }
}

}  // namespace cartbicat
