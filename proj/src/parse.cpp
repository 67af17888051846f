#include "conekit/parse.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "conekit/error.hpp"

namespace conekit {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

SourcePos advance(SourcePos origin, std::size_t offset) {
  return {origin.line, origin.column + offset};
}

[[noreturn]] void fail(const std::string& code, const std::string& message, SourcePos pos) {
  throw ParseError(code, message, pos.line, pos.column);
}

struct Token {
  std::string text;
  std::size_t offset;
};

std::vector<Token> split_words(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back({std::string(text.substr(start, i - start)), start});
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  for (char c : s)
    if (!is_ident_char(c)) return false;
  return true;
}

template <class F>
class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text, SourcePos origin)
      : ring_(ring), field_(field_of<F>(*ring)), text_(text), origin_(origin) {}

  Polynomial<F> parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty-polynomial", "expected a polynomial", here());
    Polynomial<F> p = expression();
    skip_space();
    if (pos_ != text_.size()) unexpected();
    return p;
  }

 private:
  SourcePos here() const { return advance(origin_, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void unexpected() {
    char c = text_[pos_];
    if (c == '/') fail("division-unsupported", "division is not supported", here());
    fail("malformed-token", std::string("unexpected character '") + c + "'", here());
  }

  Polynomial<F> expression() {
    Polynomial<F> acc(ring_);
    bool first = true;
    while (true) {
      char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial<F> t = product();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  bool starts_factor(char c) const { return is_digit(c) || is_ident_start(c) || c == '('; }

  Polynomial<F> product() {
    Polynomial<F> acc = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (starts_factor(c)) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  std::uint32_t exponent() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) fail("malformed-token", "expected an exponent after '^'", here());
    std::uint64_t e = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, e);
    if (ec != std::errc() || e > kMaxExponent)
      fail("exponent-overflow", "exponent exceeds 16-bit limit", advance(origin_, start));
    (void)ptr;
    return static_cast<std::uint32_t>(e);
  }

  Polynomial<F> power() {
    SourcePos at = here();
    Polynomial<F> base = primary();
    if (peek() == '^') {
      ++pos_;
      std::uint32_t e = exponent();
      try {
        return base.pow(e);
      } catch (const DomainError& err) {
        fail(err.code(), err.what(), at);
      }
    }
    return base;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial<F> primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial<F> inner = expression();
      if (peek() != ')') fail("malformed-token", "expected ')'", here());
      ++pos_;
      return inner;
    }
    if (is_digit(c)) {
      SourcePos at = here();
      std::string num = digits();
      std::string den = "1";
      if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1])) {
        ++pos_;
        den = digits();
      }
      try {
        return Polynomial<F>::constant(ring_, field_.from_literal(num, den));
      } catch (const DomainError& err) {
        fail(err.code(), err.what(), at);
      }
    }
    if (is_ident_start(c)) return variable();
    if (pos_ >= text_.size()) fail("malformed-token", "unexpected end of polynomial", here());
    unexpected();
  }

  Polynomial<F> variable() {
    std::size_t best = 0;
    int best_index = -1;
    for (std::size_t i = 0; i < ring_->num_vars(); ++i) {
      const std::string& name = ring_->names()[i];
      if (name.size() > best && text_.substr(pos_, name.size()) == name) {
        best = name.size();
        best_index = static_cast<int>(i);
      }
    }
    if (best_index < 0) {
      std::size_t end = pos_;
      while (end < text_.size() && is_ident_char(text_[end])) ++end;
      fail("unknown-variable", "unknown variable '" + std::string(text_.substr(pos_, end - pos_)) + "'",
           here());
    }
    pos_ += best;
    return Polynomial<F>::variable(ring_, static_cast<std::size_t>(best_index));
  }

  const RingPtr& ring_;
  F field_;
  std::string_view text_;
  SourcePos origin_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool is_blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

std::size_t first_nonspace(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

std::string trim(std::string_view s) {
  std::size_t a = first_nonspace(s);
  std::size_t b = s.size();
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

RingPtr parse_ring(std::string_view text, CoefficientField field, SourcePos origin) {
  auto words = split_words(text);
  if (words.empty() || words[0].text != "ring")
    fail("malformed-token", "expected 'ring'", advance(origin, words.empty() ? 0 : words[0].offset));
  std::vector<std::string> names;
  std::vector<std::uint32_t> weights;
  std::size_t i = 1;
  for (; i < words.size() && words[i].text != "weights"; ++i) {
    const auto& w = words[i];
    if (!is_identifier(w.text))
      fail("malformed-token", "invalid variable name '" + w.text + "'", advance(origin, w.offset));
    for (const auto& n : names)
      if (n == w.text)
        fail("duplicate-variable", "duplicate variable '" + w.text + "'", advance(origin, w.offset));
    names.push_back(w.text);
  }
  if (names.empty()) fail("malformed-token", "ring needs at least one variable", advance(origin, text.size()));
  if (i < words.size()) {
    std::size_t kw = words[i].offset;
    for (++i; i < words.size(); ++i) {
      const auto& w = words[i];
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(w.text.data(), w.text.data() + w.text.size(), v);
      if (ec != std::errc() || ptr != w.text.data() + w.text.size())
        fail("malformed-token", "invalid weight '" + w.text + "'", advance(origin, w.offset));
      if (v <= 0)
        fail("non-positive-weight", "weights must be positive, got " + w.text, advance(origin, w.offset));
      if (v > 0xFFFF) fail("malformed-token", "weight too large: " + w.text, advance(origin, w.offset));
      weights.push_back(static_cast<std::uint32_t>(v));
    }
    if (weights.size() != names.size())
      fail("weight-count",
           "expected " + std::to_string(names.size()) + " weights, got " + std::to_string(weights.size()),
           advance(origin, kw));
  } else {
    weights.assign(names.size(), 1);
  }
  try {
    return make_ring(std::move(names), std::move(weights), field);
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    fail(e.code(), e.what(), origin);
  }
}

template <class F>
ParsedPoly<F> parse_poly(const RingPtr& ring, std::string_view text, SourcePos origin) {
  PolyParser<F> parser(ring, text, origin);
  ParsedPoly<F> out{parser.parse(), 0, true};
  out.degree = out.poly.degree();
  out.homogeneous = out.poly.is_homogeneous();
  return out;
}

template <class F>
std::vector<Polynomial<F>> parse_ideal_block(const RingPtr& ring, const IdealBlock& block,
                                             bool require_homogeneous) {
  std::vector<Polynomial<F>> gens;
  for (const auto& src : block.generators) {
    auto parsed = parse_poly<F>(ring, src.text, src.pos);
    if (require_homogeneous && !parsed.homogeneous)
      fail("inhomogeneous", "generator is not homogeneous for the ring's grading", src.pos);
    gens.push_back(std::move(parsed.poly));
  }
  return gens;
}

Document parse_document(std::string_view text, CoefficientField field) {
  Document doc;
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }

  enum class State { Top, Ideal, Matrix } state = State::Top;
  SourcePos block_start;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string_view line = strip_comment(lines[ln]);
    if (is_blank(line)) continue;
    std::size_t col0 = first_nonspace(line);
    SourcePos pos{ln + 1, col0 + 1};
    std::string content = trim(line);
    auto words = split_words(content);

    if (state == State::Top) {
      const std::string& kw = words[0].text;
      if (!doc.ring) {
        if (kw != "ring") fail("missing-ring", "input must start with a ring declaration", pos);
        doc.ring = parse_ring(line, field, {ln + 1, 1});
        continue;
      }
      if (kw == "ring") fail("duplicate-ring", "only one ring declaration is allowed", pos);
      if (kw == "ideal") {
        if (words.size() != 1) fail("malformed-token", "unexpected text after 'ideal'", pos);
        doc.ideals.emplace_back();
        state = State::Ideal;
        block_start = pos;
      } else if (kw == "skewmatrix") {
        std::size_t n = 0;
        if (words.size() != 2) fail("malformed-token", "expected 'skewmatrix <size>'", pos);
        auto [ptr, ec] = std::from_chars(words[1].text.data(), words[1].text.data() + words[1].text.size(), n);
        if (ec != std::errc() || ptr != words[1].text.data() + words[1].text.size() || n < 1 || n > 16)
          fail("malformed-token", "invalid matrix size '" + words[1].text + "'", pos);
        doc.matrices.push_back(MatrixBlock{n, {}});
        state = State::Matrix;
        block_start = pos;
      } else {
        fail("malformed-token", "unexpected '" + kw + "'", pos);
      }
      continue;
    }

    if (content == "end") {
      if (state == State::Ideal && doc.ideals.back().generators.empty())
        fail("empty-ideal", "ideal block has no generators", block_start);
      if (state == State::Matrix) {
        const auto& m = doc.matrices.back();
        std::size_t want = m.size * (m.size - 1) / 2;
        if (m.entries.size() != want)
          fail("matrix-entries",
               "skew matrix of size " + std::to_string(m.size) + " needs " + std::to_string(want) +
                   " entries, got " + std::to_string(m.entries.size()),
               block_start);
      }
      state = State::Top;
      continue;
    }

    if (state == State::Ideal) {
      doc.ideals.back().generators.push_back({content, pos});
    } else {
      auto& entries = doc.matrices.back().entries;
      if (line.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= line.size()) {
          auto comma = line.find(',', start);
          if (comma == std::string_view::npos) comma = line.size();
          std::string_view piece = line.substr(start, comma - start);
          if (is_blank(piece)) fail("malformed-token", "empty matrix entry", {ln + 1, start + 1});
          entries.push_back({trim(piece), {ln + 1, start + first_nonspace(piece) + 1}});
          start = comma + 1;
        }
      } else {
        for (const auto& w : split_words(line)) entries.push_back({w.text, {ln + 1, w.offset + 1}});
      }
    }
  }
  if (!doc.ring) fail("missing-ring", "input must start with a ring declaration", {1, 1});
  if (state != State::Top) fail("unterminated-block", "block is missing 'end'", block_start);
  return doc;
}

#define CONEKIT_INSTANTIATE(F)                                                                      \
  template ParsedPoly<F> parse_poly<F>(const RingPtr&, std::string_view, SourcePos);               \
  template std::vector<Polynomial<F>> parse_ideal_block<F>(const RingPtr&, const IdealBlock&, bool);
CONEKIT_FOR_EACH_FIELD(CONEKIT_INSTANTIATE)
#undef CONEKIT_INSTANTIATE

}  // namespace conekit
