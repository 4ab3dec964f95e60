#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "term.hpp"

namespace longray {

/// Which factor the coordinates of a term live on.
enum class Domain {
  LongRay,   // R^n: atoms x<i>
  LongLine,  // L^n: atoms p<i> and n<i>
};

/// Constants are kept below this bound so that the numeric diagonal probes
/// at 10^3 and 10^6 always dominate them.
inline const Rational kConstantBound{1000};

namespace detail {

// term := "max(" term ("," term)+ ")" | "min(" term ("," term)+ ")" | atom
// atom := "x" INT | "p" INT | "n" INT | DECIMAL
class TermParser {
 public:
  TermParser(std::string_view text, int n, Domain domain) : text_(text), n_(n), domain_(domain) {}

  MapTerm parse_term() {
    skip_space();
    const std::size_t start = pos_;
    if (consume_word("max")) return parse_node(true, start);
    if (consume_word("min")) return parse_node(false, start);
    if (at_end()) fail("expected a term, found end of input");
    const char c = text_[pos_];
    if (c == 'x' || c == 'p' || c == 'n') return parse_atom(c);
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_constant();
    if (c == '-') fail("negative constants are not allowed");
    fail(std::string("unexpected character '") + c + "'");
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) return false;
    std::size_t after = pos_ + w.size();
    while (after < text_.size() && std::isspace(static_cast<unsigned char>(text_[after]))) ++after;
    if (after >= text_.size() || text_[after] != '(') return false;
    pos_ = after + 1;
    return true;
  }

  MapTerm parse_node(bool is_max, std::size_t start) {
    std::vector<MapTerm> children;
    children.push_back(parse_term());
    while (peek() == ',') {
      ++pos_;
      children.push_back(parse_term());
    }
    if (children.size() < 2) {
      pos_ = start;
      fail(std::string(is_max ? "max" : "min") + " needs at least two arguments");
    }
    expect(')');
    return is_max ? MapTerm::max(std::move(children)) : MapTerm::min(std::move(children));
  }

  MapTerm parse_atom(char letter) {
    const std::size_t start = pos_;
    ++pos_;
    std::size_t digits = 0;
    long index = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (++digits > 6) {
        pos_ = start;
        fail("coordinate index too long");
      }
      index = index * 10 + (text_[pos_++] - '0');
    }
    if (digits == 0) fail(std::string("expected an index after '") + letter + "'");
    pos_ = start;
    if (index < 1 || index > n_) {
      fail("index " + std::to_string(index) + " out of range 1.." + std::to_string(n_));
    }
    const bool signed_atom = letter != 'x';
    if (signed_atom && domain_ != Domain::LongLine) {
      fail(std::string("signed atom '") + letter + "' needs the long line domain");
    }
    if (!signed_atom && domain_ != Domain::LongRay) {
      fail("coordinate atom 'x' is not a real-valued map on the long line; use p<i>/n<i>");
    }
    pos_ += 1 + digits;
    const int i = static_cast<int>(index);
    switch (letter) {
      case 'x': return MapTerm::coord(i);
      case 'p': return MapTerm::pos_part(i);
      default: return MapTerm::neg_part(i);
    }
  }

  MapTerm parse_constant() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    Rational q;
    const bool ok = parse_decimal(text_.substr(start, pos_ - start), q);
    pos_ = start;
    if (!ok) fail("malformed decimal constant");
    if (q >= kConstantBound) fail("constant must be below 1000");
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    return MapTerm::constant(q);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int n_;
  Domain domain_;
};

}  // namespace detail

/// Parses a single term whose coordinate indices must lie in 1..n.
inline MapTerm parse_term(std::string_view text, int n, Domain domain = Domain::LongRay) {
  if (n < 1) throw InvalidInput("dimension must be positive");
  detail::TermParser p(text, n, domain);
  MapTerm t = p.parse_term();
  if (!p.at_end()) p.fail("trailing input");
  return t;
}

/// Parses exactly n ';'-separated component terms.
inline VectorTerm parse_vector_term(std::string_view text, int n, Domain domain = Domain::LongRay) {
  if (n < 1) throw InvalidInput("dimension must be positive");
  detail::TermParser p(text, n, domain);
  VectorTerm v;
  v.components.push_back(p.parse_term());
  while (p.peek() == ';') {
    p.expect(';');
    v.components.push_back(p.parse_term());
  }
  if (!p.at_end()) p.fail("expected ';' or end of input");
  if (static_cast<int>(v.size()) != n) {
    p.fail("expected " + std::to_string(n) + " components, found " + std::to_string(v.size()));
  }
  return v;
}

inline std::string print_term(const MapTerm& t) {
  switch (t.kind()) {
    case TermKind::Coord: return "x" + std::to_string(t.index());
    case TermKind::PosPart: return "p" + std::to_string(t.index());
    case TermKind::NegPart: return "n" + std::to_string(t.index());
    case TermKind::Const: return to_string(t.value());
    case TermKind::Max:
    case TermKind::Min: break;
  }
  std::string out = t.kind() == TermKind::Max ? "max(" : "min(";
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i) out += ',';
    out += print_term(t.children()[i]);
  }
  return out + ')';
}

inline std::string print_vector_term(const VectorTerm& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += print_term(v.components[i]);
  }
  return out;
}

}  // namespace longray
