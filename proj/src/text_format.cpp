#include "idem/text_format.hpp"

#include "idem/error.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace idem {

namespace {

struct Token {
  std::string text;
  std::size_t col;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

[[noreturn]] void violation(std::size_t line, std::size_t col, const std::string& what) {
  fail(ErrorKind::InvariantViolation, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what);
}

// Splits on whitespace; a `[` token extends to the matching `]` so
// intervals may contain blanks. Blank and comment-only lines are dropped.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      const std::size_t from = i;
      if (raw[i] == '[') {
        const auto close = raw.find(']', i);
        if (close == std::string_view::npos) throw ParseError(number, from + 1, "unterminated interval");
        std::string tok;
        for (std::size_t k = i; k <= close; ++k)
          if (!std::isspace(static_cast<unsigned char>(raw[k]))) tok += raw[k];
        line.tokens.push_back({std::move(tok), from + 1});
        i = close + 1;
      } else {
        while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        line.tokens.push_back({std::string(raw.substr(from, i - from)), from + 1});
      }
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::optional<double> parse_real(std::string_view s) {
  if (s.empty()) return std::nullopt;
  const std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || !std::isfinite(v)) return std::nullopt;
  // strtod accepts hex floats and "nan"/"infinity"; the grammar does not.
  for (char c : buf)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' || c == 'e' || c == 'E'))
      return std::nullopt;
  return v;
}

std::optional<Integer> parse_integer(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  if (i == s.size()) return std::nullopt;
  Integer v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    v = v * 10 + (s[i] - '0');
  }
  return neg ? Integer(-v) : v;
}

// Exact value of a decimal literal such as -12.375e-2.
std::optional<Rational> parse_decimal_exact(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  Integer digits = 0;
  long scale = 0;
  bool any = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i, any = true) digits = digits * 10 + (s[i] - '0');
  if (i < s.size() && s[i] == '.') {
    for (++i; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i, any = true) {
      digits = digits * 10 + (s[i] - '0');
      --scale;
    }
  }
  if (!any) return std::nullopt;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    long exp = 0;
    const auto rest = s.substr(i + 1);
    const auto r = std::from_chars(rest.data() + (rest.starts_with('+') ? 1 : 0), rest.data() + rest.size(), exp);
    if (r.ec != std::errc{} || r.ptr != rest.data() + rest.size() || std::abs(exp) > 4000) return std::nullopt;
    scale += exp;
    i = s.size();
  }
  if (i != s.size()) return std::nullopt;
  Rational q(neg ? Integer(-digits) : digits);
  const Integer ten_pow = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::abs(scale)));
  return scale >= 0 ? Rational(q * ten_pow) : Rational(q / ten_pow);
}

std::optional<Rational> parse_fraction(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  const auto num = parse_integer(s.substr(0, slash));
  const auto den = parse_integer(s.substr(slash + 1));
  if (!num || !den || den->sign() == 0) return std::nullopt;
  return Rational(*num, *den);
}

Element parse_scalar_token(const Semiring& s, std::string_view tok, std::size_t line, std::size_t col) {
  if (tok == "inf" || tok == "+inf") return pos_inf;
  if (tok == "-inf") return neg_inf;
  if (tok == "true") return true;
  if (tok == "false") return false;
  if (s.kind() == SemiringKind::Boolean) {
    if (tok == "1") return true;
    if (tok == "0") return false;
  }
  if (s.kind() == SemiringKind::RationalField) {
    if (auto q = parse_fraction(tok)) return *q;
    if (auto q = parse_decimal_exact(tok)) return *q;
    throw ParseError(line, col, "bad rational literal '" + std::string(tok) + "'");
  }
  if (tok.find('/') != std::string_view::npos) {
    if (auto q = parse_fraction(tok)) return q->convert_to<double>();
    throw ParseError(line, col, "bad fraction '" + std::string(tok) + "'");
  }
  if (auto v = parse_real(tok)) return *v;
  throw ParseError(line, col, "bad token '" + std::string(tok) + "'");
}

Semiring parse_semiring_name(const Token& t, std::size_t line) {
  try {
    return Semiring::parse(t.text);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw ParseError(line, t.col, e.what());
    violation(line, t.col, e.what());
  }
}

const Token& expect_keyword(const Line& l, std::string_view keyword, std::size_t arity) {
  if (l.tokens[0].text != keyword)
    throw ParseError(l.number, l.tokens[0].col, "expected '" + std::string(keyword) + "'");
  if (l.tokens.size() != arity + 1) {
    const std::size_t col = l.tokens.size() > arity + 1 ? l.tokens[arity + 1].col : l.tokens.back().col;
    throw ParseError(l.number, col, "'" + std::string(keyword) + "' takes " + std::to_string(arity) + " argument(s)");
  }
  return l.tokens[0];
}

std::size_t parse_count(const Token& t, std::size_t line, bool allow_zero) {
  std::size_t v = 0;
  const auto r = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (r.ec != std::errc{} || r.ptr != t.text.data() + t.text.size() || (!allow_zero && v == 0))
    throw ParseError(line, t.col, "expected a " + std::string(allow_zero ? "non-negative" : "positive") + " integer");
  return v;
}

double parse_real_token(const Token& t, std::size_t line) {
  if (auto v = parse_real(t.text)) return *v;
  throw ParseError(line, t.col, "expected a finite real, got '" + t.text + "'");
}

std::vector<double> parse_grid_line(const Line& l, std::string_view keyword) {
  if (l.tokens[0].text != keyword) throw ParseError(l.number, l.tokens[0].col, "expected '" + std::string(keyword) + "'");
  if (l.tokens.size() < 2) throw ParseError(l.number, l.tokens[0].col, "empty grid");
  std::vector<double> xs;
  for (std::size_t i = 1; i < l.tokens.size(); ++i) {
    xs.push_back(parse_real_token(l.tokens[i], l.number));
    if (xs.size() > 1 && !(xs[xs.size() - 2] < xs.back()))
      violation(l.number, l.tokens[i].col, "grid must be strictly increasing");
  }
  return xs;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::UsageError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Element parse_element(const Semiring& s, std::string_view token, std::size_t line, std::size_t col) {
  if (token == "zero") return s.zero();
  if (token == "one") return s.one();
  Element e;
  if (s.kind() == SemiringKind::IntervalOver) {
    if (token.size() < 2 || token.front() != '[' || token.back() != ']')
      throw ParseError(line, col, "expected an interval [lo,hi], got '" + std::string(token) + "'");
    const auto body = token.substr(1, token.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw ParseError(line, col, "interval needs two endpoints");
    const Semiring in = s.inner();
    const Element lo = parse_element(in, body.substr(0, comma), line, col + 1);
    const Element hi = parse_element(in, body.substr(comma + 1), line, col + 2 + comma);
    if (!in.leq(lo, hi)) violation(line, col, "interval " + std::string(token) + " has lo above hi");
    e = Interval{to_scalar(lo), to_scalar(hi)};
  } else {
    if (token.starts_with('[')) violation(line, col, "interval token under " + s.name());
    e = parse_scalar_token(s, token, line, col);
  }
  if (!s.contains(e)) violation(line, col, "'" + std::string(token) + "' is not an element of " + s.name());
  return e;
}

DenseMatrix parse_matrix(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty matrix file");
  expect_keyword(lines[0], "semiring", 1);
  const Semiring s = parse_semiring_name(lines[0].tokens[1], lines[0].number);
  if (lines.size() < 2) throw ParseError(lines[0].number + 1, 1, "missing 'shape' line");
  expect_keyword(lines[1], "shape", 2);
  const std::size_t rows = parse_count(lines[1].tokens[1], lines[1].number, false);
  const std::size_t cols = parse_count(lines[1].tokens[2], lines[1].number, false);
  if (lines.size() != rows + 2) {
    const std::size_t at = lines.size() > rows + 2 ? lines[rows + 2].number : lines.back().number + 1;
    throw ParseError(at, 1, "expected " + std::to_string(rows) + " matrix rows, found " + std::to_string(lines.size() - 2));
  }
  std::vector<Element> data;
  data.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Line& l = lines[r + 2];
    if (l.tokens.size() != cols) {
      const std::size_t col = l.tokens.size() > cols ? l.tokens[cols].col : l.tokens.back().col;
      throw ParseError(l.number, col, "expected " + std::to_string(cols) + " entries, found " + std::to_string(l.tokens.size()));
    }
    for (const Token& t : l.tokens) data.push_back(parse_element(s, t.text, l.number, t.col));
  }
  return DenseMatrix(s, rows, cols, std::move(data));
}

WeightedDigraph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty graph file");
  expect_keyword(lines[0], "graph", 1);
  const std::size_t n = parse_count(lines[0].tokens[1], lines[0].number, false);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    expect_keyword(l, "edge", 3);
    const std::size_t src = parse_count(l.tokens[1], l.number, true);
    const std::size_t dst = parse_count(l.tokens[2], l.number, true);
    if (src >= n) violation(l.number, l.tokens[1].col, "node id outside 0.." + std::to_string(n - 1));
    if (dst >= n) violation(l.number, l.tokens[2].col, "node id outside 0.." + std::to_string(n - 1));
    edges.push_back({src, dst, parse_real_token(l.tokens[3], l.number)});
  }
  return WeightedDigraph(n, std::move(edges));
}

SampledFunction parse_function(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty function file");
  expect_keyword(lines[0], "function", 1);
  const Semiring s = parse_semiring_name(lines[0].tokens[1], lines[0].number);
  if (lines.size() < 2) throw ParseError(lines[0].number + 1, 1, "function needs at least one sample");
  std::vector<double> xs;
  std::vector<Element> vals;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(l.number, l.tokens[0].col, "expected '<x> <value>'");
    xs.push_back(parse_real_token(l.tokens[0], l.number));
    if (xs.size() > 1 && !(xs[xs.size() - 2] < xs.back()))
      violation(l.number, l.tokens[0].col, "sample points must be strictly increasing");
    vals.push_back(parse_element(s, l.tokens[1].text, l.number, l.tokens[1].col));
  }
  return SampledFunction(s, std::move(xs), std::move(vals));
}

SampledKernel parse_kernel(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty kernel file");
  expect_keyword(lines[0], "kernel", 1);
  const Semiring s = parse_semiring_name(lines[0].tokens[1], lines[0].number);
  if (lines.size() < 3) throw ParseError(lines.back().number + 1, 1, "kernel needs 'xs' and 'ys' lines");
  std::vector<double> xs = parse_grid_line(lines[1], "xs");
  std::vector<double> ys = parse_grid_line(lines[2], "ys");
  if (lines.size() != xs.size() + 3)
    throw ParseError(lines.back().number, 1, "expected " + std::to_string(xs.size()) + " kernel rows");
  std::vector<Element> vals;
  for (std::size_t r = 0; r < xs.size(); ++r) {
    const Line& l = lines[r + 3];
    if (l.tokens.size() != ys.size())
      throw ParseError(l.number, l.tokens[0].col, "expected " + std::to_string(ys.size()) + " kernel entries");
    for (const Token& t : l.tokens) vals.push_back(parse_element(s, t.text, l.number, t.col));
  }
  return SampledKernel(s, std::move(xs), std::move(ys), std::move(vals));
}

DenseMatrix parse_matrix_file(const std::filesystem::path& path) { return parse_matrix(read_file(path)); }
WeightedDigraph parse_graph_file(const std::filesystem::path& path) { return parse_graph(read_file(path)); }
SampledFunction parse_function_file(const std::filesystem::path& path) { return parse_function(read_file(path)); }
SampledKernel parse_kernel_file(const std::filesystem::path& path) { return parse_kernel(read_file(path)); }

std::string render_matrix(const DenseMatrix& m) {
  std::string out = "semiring " + m.semiring().name() + "\n";
  out += "shape " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += render(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string render_function(const SampledFunction& f) {
  std::string out = "function " + f.semiring().name() + "\n";
  for (std::size_t i = 0; i < f.size(); ++i) out += render(Element(f.xs()[i])) + " " + render(f.vals()[i]) + "\n";
  return out;
}

}  // namespace idem
