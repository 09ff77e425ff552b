#pragma once

// Line-based text format for instance data.
//
//   # comment
//   #!check <property-id>
//   set  <name> <label>...
//   fn   <name> <dom-set> <cod-set> <x>:<a>...
//   span <name> <src-set> <tgt-set> <apex>:<x>:<a>...
//   rel  <name> <src-set> <tgt-set> <x>:<a>...
//   cell <name> <dom-arrow> <cod-arrow> <s>:<t>...
//
// Span apexes are the listed elements, in order. A cell between relations
// has no entries. Names are unique across all kinds.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "finset.hpp"
#include "rel.hpp"
#include "span.hpp"

namespace cartbicat {

inline bool is_valid_format_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == ':' || c == '#' || c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
  return true;
}

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<std::string> split_colon(std::string_view tok) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (true) {
    auto j = tok.find(':', i);
    out.emplace_back(tok.substr(i, j == std::string_view::npos ? std::string_view::npos : j - i));
    if (j == std::string_view::npos) break;
    i = j + 1;
  }
  return out;
}

// One statement, before validation.
struct RawLine {
  std::string kind;  // set fn span rel cell
  std::string name;
  std::vector<std::string> args;
  std::vector<std::string> entries;
};

struct RawDocument {
  std::vector<std::string> directives;
  std::vector<RawLine> lines;
};

inline RawDocument parse_raw(std::string_view text) {
  RawDocument doc;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++lineno;
    if (line.rfind("#!", 0) == 0) {
      doc.directives.emplace_back(line.substr(2));
      continue;
    }
    if (!line.empty() && line[0] == '#') continue;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    RawLine r;
    r.kind = toks[0];
    std::size_t nargs = 0;
    if (r.kind == "set") nargs = 0;
    else if (r.kind == "fn" || r.kind == "span" || r.kind == "rel" || r.kind == "cell") nargs = 2;
    else fail(ErrorKind::parse_error, "line " + std::to_string(lineno) + ": unknown statement '" + r.kind + "'");
    require(toks.size() >= 2 + nargs, ErrorKind::parse_error, "line " + std::to_string(lineno) + ": too few fields");
    r.name = toks[1];
    r.args.assign(toks.begin() + 2, toks.begin() + 2 + static_cast<std::ptrdiff_t>(nargs));
    r.entries.assign(toks.begin() + 2 + static_cast<std::ptrdiff_t>(nargs), toks.end());
    doc.lines.push_back(std::move(r));
  }
  return doc;
}

inline std::string print_raw(const RawDocument& doc) {
  std::string out;
  for (const auto& d : doc.directives) out += "#!" + d + "\n";
  for (const auto& l : doc.lines) {
    out += l.kind + " " + l.name;
    for (const auto& a : l.args) out += " " + a;
    for (const auto& e : l.entries) out += " " + e;
    out += "\n";
  }
  return out;
}

class Document {
 public:
  std::vector<std::string> directives;

  // ---- building

  void add_set(const std::string& name, const FinSet& s) {
    claim(name);
    for (const auto& l : s.labels())
      require(is_valid_format_label(l), ErrorKind::invalid_config, "label '" + l + "' cannot be written");
    sets_.emplace_back(name, s);
  }

  // Name of a registered set equal to s, registering it under a fresh name if absent.
  std::string set_name(const FinSet& s) {
    for (const auto& [n, v] : sets_)
      if (v == s) return n;
    std::string n;
    for (std::size_t i = sets_.size();; ++i) {
      n = "set" + std::to_string(i);
      if (!has(n)) break;
    }
    add_set(n, s);
    return n;
  }

  void add_fn(const std::string& name, const SetFn& f) {
    set_name(f.dom());
    set_name(f.cod());
    claim(name);
    fns_.emplace_back(name, f);
  }

  void add(const std::string& name, const Span& s) {
    set_name(s.source());
    set_name(s.target());
    for (const auto& l : s.apex().labels())
      require(is_valid_format_label(l), ErrorKind::invalid_config, "label '" + l + "' cannot be written");
    claim(name);
    spans_.emplace_back(name, s);
  }

  void add(const std::string& name, const Rel& r) {
    set_name(r.source());
    set_name(r.target());
    claim(name);
    rels_.emplace_back(name, r);
  }

  // Registers the boundary arrows under `name`.dom / `name`.cod unless an
  // equal arrow is already present.
  void add(const std::string& name, const SpanCell& c) {
    arrow_name(c.dom(), name + ".dom");
    arrow_name(c.cod(), name + ".cod");
    claim(name);
    span_cells_.emplace_back(name, c);
  }

  void add(const std::string& name, const RelCell& c) {
    arrow_name(c.dom(), name + ".dom");
    arrow_name(c.cod(), name + ".cod");
    claim(name);
    rel_cells_.emplace_back(name, c);
  }

  // ---- access

  bool has(const std::string& name) const { return kinds_.count(name) != 0; }

  const FinSet& set(const std::string& name) const { return lookup(sets_, name, "set"); }
  const SetFn& fn(const std::string& name) const { return lookup(fns_, name, "fn"); }
  const Span& span(const std::string& name) const { return lookup(spans_, name, "span"); }
  const Rel& rel(const std::string& name) const { return lookup(rels_, name, "rel"); }
  const SpanCell& span_cell(const std::string& name) const { return lookup(span_cells_, name, "span cell"); }
  const RelCell& rel_cell(const std::string& name) const { return lookup(rel_cells_, name, "relation cell"); }

  template <class B>
  typename B::Arr arrow(const std::string& name) const {
    if constexpr (std::is_same_v<typename B::Arr, Span>) return span(name);
    else return rel(name);
  }

  template <class B>
  typename B::Cell cell(const std::string& name) const {
    if constexpr (std::is_same_v<typename B::Cell, SpanCell>) return span_cell(name);
    else return rel_cell(name);
  }

  // ---- text

  std::string print() const {
    std::ostringstream os;
    for (const auto& d : directives) os << "#!" << d << "\n";
    for (const auto& [n, s] : sets_) {
      os << "set " << n;
      for (const auto& l : s.labels()) os << " " << l;
      os << "\n";
    }
    for (const auto& [n, f] : fns_) {
      os << "fn " << n << " " << name_of_set(f.dom()) << " " << name_of_set(f.cod());
      for (std::size_t i = 0; i < f.dom().size(); ++i) os << " " << f.dom()[i] << ":" << f.cod()[f(i)];
      os << "\n";
    }
    for (const auto& [n, s] : spans_) {
      os << "span " << n << " " << name_of_set(s.source()) << " " << name_of_set(s.target());
      for (std::size_t i = 0; i < s.apex().size(); ++i)
        os << " " << s.apex()[i] << ":" << s.source()[s.left()(i)] << ":" << s.target()[s.right()(i)];
      os << "\n";
    }
    for (const auto& [n, r] : rels_) {
      os << "rel " << n << " " << name_of_set(r.source()) << " " << name_of_set(r.target());
      for (auto [x, a] : r.pairs()) os << " " << r.source()[x] << ":" << r.target()[a];
      os << "\n";
    }
    for (const auto& [n, c] : span_cells_) {
      os << "cell " << n << " " << name_of_span(c.dom()) << " " << name_of_span(c.cod());
      for (std::size_t i = 0; i < c.dom().apex().size(); ++i)
        os << " " << c.dom().apex()[i] << ":" << c.cod().apex()[c.map()(i)];
      os << "\n";
    }
    for (const auto& [n, c] : rel_cells_)
      os << "cell " << n << " " << name_of_rel(c.dom()) << " " << name_of_rel(c.cod()) << "\n";
    return os.str();
  }

  static Document parse(std::string_view text) { return from_raw(parse_raw(text)); }

  static Document from_raw(const RawDocument& raw) {
    Document d;
    d.directives = raw.directives;
    for (const auto& l : raw.lines) {
      const std::string where = l.kind + " " + l.name + ": ";
      if (l.kind == "set") {
        for (const auto& e : l.entries)
          require(is_valid_format_label(e), ErrorKind::parse_error, where + "bad label '" + e + "'");
        std::vector<std::string> labels = l.entries;
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorKind::parse_error,
                where + "duplicate label");
        d.checked_claim(l.name);
        d.sets_.emplace_back(l.name, FinSet::trusted(std::move(labels)));
      } else if (l.kind == "fn") {
        const FinSet& x = d.set_ref(l.args[0], where);
        const FinSet& a = d.set_ref(l.args[1], where);
        std::vector<std::size_t> table(x.size());
        std::vector<char> seen(x.size(), 0);
        for (const auto& e : l.entries) {
          auto parts = split_colon(e);
          require(parts.size() == 2, ErrorKind::parse_error, where + "entry '" + e + "' is not x:a");
          auto xi = index_in(x, parts[0], where);
          require(!seen[xi], ErrorKind::parse_error, where + "element listed twice");
          seen[xi] = 1;
          table[xi] = index_in(a, parts[1], where);
        }
        require(std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; }), ErrorKind::parse_error,
                where + "function is not total");
        d.checked_claim(l.name);
        d.fns_.emplace_back(l.name, SetFn(x, a, std::move(table)));
      } else if (l.kind == "span") {
        const FinSet& x = d.set_ref(l.args[0], where);
        const FinSet& a = d.set_ref(l.args[1], where);
        std::vector<std::string> apex;
        std::vector<std::size_t> left, right;
        for (const auto& e : l.entries) {
          auto parts = split_colon(e);
          require(parts.size() == 3, ErrorKind::parse_error, where + "entry '" + e + "' is not s:x:a");
          require(is_valid_format_label(parts[0]), ErrorKind::parse_error, where + "bad apex label");
          apex.push_back(parts[0]);
          left.push_back(index_in(x, parts[1], where));
          right.push_back(index_in(a, parts[2], where));
        }
        auto sorted = apex;
        std::sort(sorted.begin(), sorted.end());
        require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorKind::parse_error,
                where + "duplicate apex element");
        FinSet s = FinSet::trusted(std::move(apex));
        d.checked_claim(l.name);
        d.spans_.emplace_back(l.name, Span(SetFn(s, x, std::move(left)), SetFn(s, a, std::move(right))));
      } else if (l.kind == "rel") {
        const FinSet& x = d.set_ref(l.args[0], where);
        const FinSet& a = d.set_ref(l.args[1], where);
        Rel r(x, a);
        for (const auto& e : l.entries) {
          auto parts = split_colon(e);
          require(parts.size() == 2, ErrorKind::parse_error, where + "entry '" + e + "' is not x:a");
          r.set(index_in(x, parts[0], where), index_in(a, parts[1], where));
        }
        d.checked_claim(l.name);
        d.rels_.emplace_back(l.name, std::move(r));
      } else if (l.kind == "cell") {
        auto k0 = d.kind_of(l.args[0]);
        auto k1 = d.kind_of(l.args[1]);
        require(k0 == k1 && (k0 == "span" || k0 == "rel"), ErrorKind::parse_error,
                where + "boundary must be two spans or two relations");
        if (k0 == "span") {
          const Span& dom = d.span(l.args[0]);
          const Span& cod = d.span(l.args[1]);
          std::vector<std::size_t> m(dom.apex().size());
          std::vector<char> seen(m.size(), 0);
          for (const auto& e : l.entries) {
            auto parts = split_colon(e);
            require(parts.size() == 2, ErrorKind::parse_error, where + "entry '" + e + "' is not s:t");
            auto si = index_in(dom.apex(), parts[0], where);
            require(!seen[si], ErrorKind::parse_error, where + "element listed twice");
            seen[si] = 1;
            m[si] = index_in(cod.apex(), parts[1], where);
          }
          require(std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; }), ErrorKind::parse_error,
                  where + "cell map is not total");
          d.checked_claim(l.name);
          // Validity is a property of the data, not of the syntax; checks test it.
          d.span_cells_.emplace_back(l.name, SpanCell::unchecked(dom, cod, SetFn(dom.apex(), cod.apex(), std::move(m))));
        } else {
          require(l.entries.empty(), ErrorKind::parse_error, where + "a relation cell has no entries");
          d.checked_claim(l.name);
          d.rel_cells_.emplace_back(l.name, RelCell::unchecked(d.rel(l.args[0]), d.rel(l.args[1])));
        }
      }
    }
    return d;
  }

  friend bool operator==(const Document& a, const Document& b) {
    return a.directives == b.directives && a.sets_ == b.sets_ && a.fns_ == b.fns_ && a.spans_ == b.spans_ &&
           a.rels_ == b.rels_ && a.span_cells_ == b.span_cells_ && a.rel_cells_ == b.rel_cells_;
  }

 private:
  template <class T>
  using Named = std::vector<std::pair<std::string, T>>;

  Named<FinSet> sets_;
  Named<SetFn> fns_;
  Named<Span> spans_;
  Named<Rel> rels_;
  Named<SpanCell> span_cells_;
  Named<RelCell> rel_cells_;
  std::unordered_map<std::string, std::string> kinds_;

  void claim(const std::string& name) {
    require(is_valid_format_label(name), ErrorKind::invalid_config, "bad name '" + name + "'");
    require(!has(name), ErrorKind::invalid_config, "name '" + name + "' used twice");
    kinds_[name] = "";
  }

  void checked_claim(const std::string& name) {
    require(is_valid_format_label(name) && !has(name), ErrorKind::parse_error, "bad or repeated name '" + name + "'");
    kinds_[name] = "";
  }

  std::string kind_of(const std::string& name) const {
    for (const auto& [n, v] : spans_)
      if (n == name) return "span";
    for (const auto& [n, v] : rels_)
      if (n == name) return "rel";
    return "";
  }

  const FinSet& set_ref(const std::string& name, const std::string& where) const {
    for (const auto& [n, v] : sets_)
      if (n == name) return v;
    fail(ErrorKind::parse_error, where + "unknown set '" + name + "'");
  }

  static std::size_t index_in(const FinSet& s, const std::string& label, const std::string& where) {
    auto i = s.index_of(label);
    require(i.has_value(), ErrorKind::parse_error, where + "unknown element '" + label + "'");
    return *i;
  }

  template <class T>
  static const T& lookup(const Named<T>& v, const std::string& name, const char* what) {
    for (const auto& [n, x] : v)
      if (n == name) return x;
    fail(ErrorKind::invalid_config, std::string("no ") + what + " named '" + name + "'");
  }

  std::string name_of_set(const FinSet& s) const {
    for (const auto& [n, v] : sets_)
      if (v == s) return n;
    fail(ErrorKind::invalid_config, "unregistered set");
  }
  std::string name_of_span(const Span& s) const {
    for (const auto& [n, v] : spans_)
      if (v == s) return n;
    fail(ErrorKind::invalid_config, "unregistered span");
  }
  std::string name_of_rel(const Rel& r) const {
    for (const auto& [n, v] : rels_)
      if (v == r) return n;
    fail(ErrorKind::invalid_config, "unregistered relation");
  }

  void arrow_name(const Span& s, const std::string& fresh) {
    for (const auto& [n, v] : spans_)
      if (v == s) return;
    add(fresh, s);
  }
  void arrow_name(const Rel& r, const std::string& fresh) {
    for (const auto& [n, v] : rels_)
      if (v == r) return;
    add(fresh, r);
  }
};

inline Document read_document(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::io_error, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return Document::parse(ss.str());
}

// Every document obtained by deleting one element: a set label (with the
// entries that mention it as a source) or one span/relation entry (with the
// cell entries on that apex element). Candidates that no longer parse are
// dropped.
inline std::vector<std::string> one_element_deletions(const std::string& text) {
  const RawDocument raw = parse_raw(text);
  std::vector<std::string> out;
  auto emit = [&](const RawDocument& r) {
    try {
      auto printed = print_raw(r);
      Document::parse(printed);
      out.push_back(std::move(printed));
    } catch (const Error&) {
    }
  };
  // Drops cell entries s:t on apex element `elem` of span `span_name`.
  auto cascade = [](RawDocument& r, const std::string& span_name, const std::string& elem) {
    for (auto& l : r.lines) {
      if (l.kind != "cell" || l.args[0] != span_name) continue;
      std::erase_if(l.entries, [&](const std::string& e) { return split_colon(e)[0] == elem; });
    }
  };
  for (std::size_t li = 0; li < raw.lines.size(); ++li) {
    const auto& line = raw.lines[li];
    if (line.kind == "span" || line.kind == "rel") {
      for (std::size_t ei = 0; ei < line.entries.size(); ++ei) {
        RawDocument r = raw;
        const std::string elem = split_colon(line.entries[ei])[0];
        r.lines[li].entries.erase(r.lines[li].entries.begin() + static_cast<std::ptrdiff_t>(ei));
        if (line.kind == "span") cascade(r, line.name, elem);
        emit(r);
      }
    }
    if (line.kind == "set") {
      for (std::size_t ei = 0; ei < line.entries.size(); ++ei) {
        RawDocument r = raw;
        const std::string label = line.entries[ei];
        r.lines[li].entries.erase(r.lines[li].entries.begin() + static_cast<std::ptrdiff_t>(ei));
        for (auto& l : r.lines) {
          if (l.kind == "fn" && l.args[0] == line.name)
            std::erase_if(l.entries, [&](const std::string& e) { return split_colon(e)[0] == label; });
          if (l.kind == "rel") {
            std::erase_if(l.entries, [&](const std::string& e) {
              auto p = split_colon(e);
              return (l.args[0] == line.name && p[0] == label) || (l.args[1] == line.name && p[1] == label);
            });
          }
          if (l.kind == "span") {
            std::vector<std::string> dropped;
            std::erase_if(l.entries, [&](const std::string& e) {
              auto p = split_colon(e);
              bool hit = p.size() == 3 &&
                         ((l.args[0] == line.name && p[1] == label) || (l.args[1] == line.name && p[2] == label));
              if (hit) dropped.push_back(p[0]);
              return hit;
            });
            for (const auto& d : dropped) cascade(r, l.name, d);
          }
        }
        emit(r);
      }
    }
  }
  return out;
}

}  // namespace cartbicat
