#include "polyrel/pmat_io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <set>
#include <utility>

#include "polyrel/errors.hpp"

namespace polyrel {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_line(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == ':') {
      out.push_back({line.substr(i, 1), i + 1});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != ':') {
      ++j;
    }
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

u64 to_unsigned(const Token& t, std::size_t line, const char* what) {
  u64 v = 0;
  const char* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, t.column, std::string(what) + " out of range");
  }
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, t.column,
                     "expected " + std::string(what) + ", found '" + std::string(t.text) + "'");
  }
  return v;
}

struct Builder {
  PolyMat m;
  std::set<std::pair<std::size_t, std::size_t>> seen;
};

}  // namespace

std::vector<PolyMat> parse_pmat_list(std::string_view text) {
  std::vector<PolyMat> out;
  std::optional<Builder> cur;
  std::size_t line_no = 0;
  while (!text.empty() || line_no == 0) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tok = split_line(line);
    if (tok.empty()) {
      if (text.empty()) break;
      continue;
    }
    if (tok[0].text == "pmat") {
      if (tok.size() != 4) {
        throw ParseError(line_no, tok[0].column, "header must be 'pmat <rows> <cols> <modulus>'");
      }
      const u64 rows = to_unsigned(tok[1], line_no, "row count");
      const u64 cols = to_unsigned(tok[2], line_no, "column count");
      const u64 p = to_unsigned(tok[3], line_no, "modulus");
      if (p >= (u64{1} << 63) || !is_prime(p)) {
        throw ParseError(line_no, tok[3].column, "modulus must be a prime below 2^63");
      }
      if (cur) out.push_back(std::move(cur->m));
      cur.emplace();
      cur->m = PolyMat(Field(p), rows, cols);
      continue;
    }
    if (!cur) throw ParseError(line_no, tok[0].column, "expected 'pmat' header");
    if (tok.size() < 3 || tok[2].text != ":") {
      throw ParseError(line_no, tok.size() < 3 ? tok.back().column : tok[2].column,
                       "entry lines look like '<i> <j> : <c0> <c1> ...'");
    }
    const u64 i = to_unsigned(tok[0], line_no, "row index");
    const u64 j = to_unsigned(tok[1], line_no, "column index");
    PolyMat& m = cur->m;
    if (i >= m.rows()) throw ParseError(line_no, tok[0].column, "row index out of range");
    if (j >= m.cols()) throw ParseError(line_no, tok[1].column, "column index out of range");
    if (!cur->seen.insert({i, j}).second) {
      throw ParseError(line_no, tok[0].column, "duplicate entry");
    }
    const u64 p = m.field().modulus();
    std::vector<u64> c;
    for (std::size_t k = 3; k < tok.size(); ++k) {
      const u64 v = to_unsigned(tok[k], line_no, "coefficient");
      if (v >= p) throw ParseError(line_no, tok[k].column, "coefficient not below the modulus");
      c.push_back(v);
    }
    m(i, j) = Poly(m.field(), std::move(c));
  }
  if (cur) out.push_back(std::move(cur->m));
  return out;
}

PolyMat parse_pmat(std::string_view text) {
  auto all = parse_pmat_list(text);
  if (all.empty()) throw ParseError(1, 1, "no matrix found");
  if (all.size() > 1) throw ParseError(1, 1, "expected a single matrix");
  return std::move(all.front());
}

std::string emit_pmat(const PolyMat& m) {
  std::string out = "pmat " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) +
                    " " + std::to_string(m.field().modulus()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      out += std::to_string(i) + " " + std::to_string(j) + " :";
      for (u64 c : m(i, j).coeffs()) out += " " + std::to_string(c);
      out += "\n";
    }
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    auto comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    std::int64_t v = 0;
    const char* begin = item.data();
    if (!item.empty() && item.front() == '+') ++begin;
    const char* end = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (item.empty() || ec != std::errc() || ptr != end) {
      throw ParseError(1, pos + 1, "expected a signed integer, found '" + std::string(item) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace polyrel
