#include <charconv>
#include <fstream>
#include <sstream>

#include "tetra/algebra.hpp"

namespace tetra {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '#') ++j;
      out.push_back({std::string(text.substr(i, j - i)), line});
      i = j;
    }
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool at_end() const { return pos_ >= tokens_.size(); }
  bool peek_is(std::string_view word) const { return !at_end() && tokens_[pos_].text == word; }

  void expect(std::string_view word) {
    if (!peek_is(word)) fail("expected '" + std::string(word) + "'");
    ++pos_;
  }

  std::string word() {
    if (at_end()) fail("unexpected end of input");
    return tokens_[pos_++].text;
  }

  std::size_t number() {
    if (at_end()) fail("expected a number");
    const auto& t = tokens_[pos_];
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) fail("expected a number");
    ++pos_;
    return value;
  }

  Table numbers(std::size_t count) {
    Table out(count);
    for (auto& e : out) {
      const std::size_t v = number();
      if (v >= kUnset) fail("element index too large");
      e = static_cast<Element>(v);
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& message) const {
    const std::size_t line = at_end() ? (tokens_.empty() ? 1 : tokens_.back().line) : tokens_[pos_].line;
    throw AlgebraError(AlgebraError::Kind::Format,
                       "line " + std::to_string(line) + ": " + message);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteAlgebra parse_algebra(std::string_view text) {
  Reader in(tokenize(text));
  in.expect("size");
  const std::size_t n = in.number();
  if (n == 0 || n >= kUnset) in.fail("size out of range");
  in.expect("bottom");
  const std::size_t bottom = in.number();
  in.expect("top");
  const std::size_t top = in.number();
  std::vector<std::string> names;
  if (in.peek_is("names")) {
    in.expect("names");
    for (std::size_t i = 0; i < n; ++i) names.push_back(in.word());
  }
  in.expect("join");
  Table join = in.numbers(n * n);
  in.expect("meet");
  Table meet = in.numbers(n * n);
  std::map<Op, Table> unary;
  while (!in.at_end()) {
    in.expect("unary");
    const std::string symbol = in.word();
    auto op = op_from_spelling(symbol);
    if (!op) in.fail("unknown unary symbol '" + symbol + "'");
    if (unary.count(*op)) in.fail("duplicate unary symbol '" + symbol + "'");
    unary[*op] = in.numbers(n);
  }
  if (bottom >= n || top >= n) in.fail("bound outside the carrier");
  return FiniteAlgebra::create(n, std::move(join), std::move(meet), static_cast<Element>(bottom),
                               static_cast<Element>(top), std::move(unary), std::move(names));
}

FiniteAlgebra load_algebra(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw AlgebraError(AlgebraError::Kind::Format, "cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_algebra(buffer.str());
}

std::string format_algebra(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::ostringstream out;
  out << "size " << n << "\n";
  out << "bottom " << a.bottom() << " top " << a.top() << "\n";
  if (a.has_names()) {
    out << "names";
    for (const auto& name : a.names()) out << ' ' << name;
    out << "\n";
  }
  auto rows = [&](std::span<const Element> table) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << table[i * n + j];
      out << "\n";
    }
  };
  out << "join\n";
  rows(a.join_table());
  out << "meet\n";
  rows(a.meet_table());
  for (Op op : a.signature().to_vector()) {
    out << "unary " << spelling(op) << "\n";
    auto t = a.op(op);
    for (std::size_t i = 0; i < n; ++i) out << (i ? " " : "") << t[i];
    out << "\n";
  }
  return out.str();
}

std::string format_table(const FiniteAlgebra& a, std::span<const Element> table) {
  std::string out = "[";
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i) out += ", ";
    out += a.name(table[i]);
  }
  return out + "]";
}

std::string format_hasse(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  std::string out;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x == y || !a.leq(x, y)) continue;
      bool cover = true;
      for (Element z = 0; z < n && cover; ++z) {
        if (z != x && z != y && a.leq(x, z) && a.leq(z, y)) cover = false;
      }
      if (cover) {
        if (!out.empty()) out += ' ';
        out += a.name(x) + "<" + a.name(y);
      }
    }
  }
  return out;
}

}  // namespace tetra
