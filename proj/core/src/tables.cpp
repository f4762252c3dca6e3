#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "fusionring/ideal.hpp"
#include "tables.hpp"

namespace fusionring {

namespace {

#include "tables_data.inc"

template <std::size_t N>
std::vector<std::string> rows(const char* const (&xs)[N]) {
  return std::vector<std::string>(xs, xs + N);
}

// expr := term (('+'|'-') term)* ; term := integer | 'k' | 'l' | '<' expr '>'
// with l = k/2 and <m> = m/2, both required to be exact.
class ExprParser {
 public:
  ExprParser(const std::string& s, int k) : s_(s), k_(k) {}

  int parse() {
    const int v = expr();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

 private:
  const std::string& s_;
  int k_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad table expression '" + s_ + "': " + why);
  }
  int expr() {
    int v = term();
    while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      const char op = s_[pos_++];
      const int t = term();
      v = op == '+' ? v + t : v - t;
    }
    return v;
  }
  int term() {
    if (pos_ >= s_.size()) fail("unexpected end");
    const char ch = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      int v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
      return v;
    }
    if (ch == 'k') {
      ++pos_;
      return k_;
    }
    if (ch == 'l') {
      ++pos_;
      if (k_ % 2 != 0) throw UnsupportedCase("parity mismatch with table: l = k/2 needs even k");
      return k_ / 2;
    }
    if (ch == '<') {
      ++pos_;
      const int v = expr();
      if (pos_ >= s_.size() || s_[pos_] != '>') fail("missing '>'");
      ++pos_;
      if (v % 2 != 0) throw UnsupportedCase("parity mismatch with table: <" + std::to_string(v) + "> is not integral");
      return v / 2;
    }
    fail(std::string("unexpected '") + ch + "'");
  }
};

Weight parse_weight(const std::string& body, int k, int n) {
  Weight w;
  int i = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    const std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (i >= n) throw std::invalid_argument("table weight [" + body + "] has too many entries");
    w[i++] = ExprParser(item, k).parse();
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (i != n) throw std::invalid_argument("table weight [" + body + "] has too few entries");
  return w;
}

}  // namespace

namespace detail {

std::vector<TableTerm> parse_row(const std::string& row, int k, int n) {
  std::vector<TableTerm> out;
  std::size_t pos = 0;
  while (pos < row.size()) {
    TableTerm t;
    if (row[pos] == '+' || row[pos] == '-') {
      t.sign = row[pos] == '-' ? -1 : 1;
      ++pos;
    }
    if (row.compare(pos, 2, "nu") == 0 || row.compare(pos, 2, "mu") == 0) {
      t.factor = row[pos] == 'n' ? Factor::Nu : Factor::Mu;
      pos += 2;  // bare factor: [0] * factor
    } else {
      if (row[pos] != '[') throw std::invalid_argument("bad table row '" + row + "'");
      const std::size_t close = row.find(']', pos);
      if (close == std::string::npos) throw std::invalid_argument("bad table row '" + row + "'");
      t.weight = parse_weight(row.substr(pos + 1, close - pos - 1), k, n);
      pos = close + 1;
      if (row.compare(pos, 3, "*nu") == 0 || row.compare(pos, 3, "*mu") == 0) {
        t.factor = row[pos + 1] == 'n' ? Factor::Nu : Factor::Mu;
        pos += 3;
      }
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace detail

std::vector<std::string> table_rows(LieType t, int k) {
  const bool even = k % 2 == 0;
  switch (t.family) {
    case Family::G: return even ? rows(kG2Even) : rows(kG2Odd);
    case Family::F: return even ? rows(kF4Even) : rows(kF4Odd);
    case Family::E:
      if (t.rank == 6) return rows(kE6);
      if (t.rank == 7) return rows(kE7);
      if (even) return rows(kE8Even);
      {
        auto a = rows(kE8OddA);
        const auto b = rows(kE8OddB);
        a.insert(a.end(), b.begin(), b.end());
        return a;
      }
    default: return {};
  }
}

}  // namespace fusionring
