#include "magmaforge/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "magmaforge/error.hpp"

namespace magmaforge {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(Errc::ParseError, msg); }

// Splits into lines with comments ('#') and blank lines removed.
std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

long long parse_int(const std::string& tok) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    fail("expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) fail("expected an integer, got '" + tok + "'");
  return v;
}

std::vector<long long> ints_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_int(tok));
  return out;
}

struct Header {
  int a = 0;
  int b = 0;
};

Header parse_header(const std::vector<std::string>& lines, std::string_view tag) {
  if (lines.empty()) fail("empty input");
  std::istringstream in(lines[0]);
  std::string word, x, y, extra;
  in >> word >> x >> y;
  if (word != tag || y.empty() || (in >> extra)) fail("expected header '" + std::string(tag) + " <a> <b>'");
  const long long a = parse_int(x), b = parse_int(y);
  if (a < 0 || b < 0 || a > 1'000'000 || b > 1'000'000) fail("header value out of range");
  return {static_cast<int>(a), static_cast<int>(b)};
}

std::string join_set(const KSet& s) {
  std::string out;
  for (Element x : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

std::string edge_lines(const Pointing& p) {
  std::string out;
  const auto& idx = p.indexer();
  for (std::uint64_t i = 0; i < idx.count(); ++i) {
    out += join_set(idx.set_at(i)) + " -> " + std::to_string(p.at_index(i)) + "\n";
  }
  return out;
}

// Fills `p` from `u1 .. uk -> w` lines; returns which indices were set.
std::vector<char> read_edges(const std::vector<std::string>& lines, Pointing& p) {
  const int m = p.order();
  std::vector<char> seen(p.indexer().count(), 0);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) fail("line " + std::to_string(li + 1) + ": missing '->'");
    const auto lhs = ints_of(line.substr(0, arrow));
    const auto rhs = ints_of(line.substr(arrow + 2));
    if (rhs.size() != 1) fail("line " + std::to_string(li + 1) + ": expected one value after '->'");
    if (lhs.empty() || static_cast<int>(lhs.size()) > std::min(p.arity(), m))
      fail("line " + std::to_string(li + 1) + ": bad set size");
    std::vector<Element> elems;
    for (long long v : lhs) {
      if (v < 0 || v >= m) fail("line " + std::to_string(li + 1) + ": element out of range");
      elems.push_back(static_cast<Element>(v));
    }
    for (std::size_t i = 1; i < elems.size(); ++i) {
      if (elems[i] <= elems[i - 1]) fail("line " + std::to_string(li + 1) + ": set must be strictly increasing");
    }
    if (rhs[0] < 0 || rhs[0] >= m) fail("line " + std::to_string(li + 1) + ": value out of range");
    const KSet s(std::move(elems));
    const auto i = p.indexer().index(s);
    if (seen[i]) fail("line " + std::to_string(li + 1) + ": duplicate set " + s.to_string());
    seen[i] = 1;
    p.set_index(i, static_cast<Element>(rhs[0]));
  }
  return seen;
}

}  // namespace

std::string write_magma(const FiniteMagma& a) {
  std::string out = "magma " + std::to_string(a.order()) + " " + std::to_string(a.arity()) + "\n";
  const auto m = static_cast<std::uint64_t>(a.order());
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    out += std::to_string(a.at(i));
    out += (i + 1) % m == 0 ? '\n' : ' ';
  }
  return out;
}

FiniteMagma read_magma(std::string_view text, const Limits& lim) {
  const auto lines = content_lines(text);
  const auto [m, n] = parse_header(lines, "magma");
  if (m < 1 || n < 1) fail("order and arity must be positive");
  const std::uint64_t cells = checked_power(m, n, lim.table);
  std::vector<Element> table;
  table.reserve(cells);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    for (long long v : ints_of(lines[li])) {
      if (v < 0 || v >= m) fail("table entry " + std::to_string(v) + " out of range");
      table.push_back(static_cast<Element>(v));
    }
  }
  if (table.size() != cells)
    fail("expected " + std::to_string(cells) + " table entries, got " + std::to_string(table.size()));
  return FiniteMagma::make(m, n, std::move(table), lim);
}

std::string write_pointing(const Pointing& p) {
  return "pointing " + std::to_string(p.order()) + " " + std::to_string(p.arity()) + "\n" + edge_lines(p);
}

Pointing read_pointing(std::string_view text) {
  const auto lines = content_lines(text);
  const auto [m, n] = parse_header(lines, "pointing");
  if (m < 1 || n < 1) fail("order and arity must be positive");
  Pointing p(m, n);
  const auto seen = read_edges(lines, p);
  for (std::uint64_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) fail("missing set " + p.indexer().set_at(i).to_string());
  }
  return p;
}

std::string write_htour(const PointedHypertournament& t) {
  return "htour " + std::to_string(t.order()) + " " + std::to_string(t.arity()) + "\n" +
         edge_lines(t.pointing());
}

PointedHypertournament read_htour(std::string_view text) {
  const auto lines = content_lines(text);
  const auto [m, n] = parse_header(lines, "htour");
  if (m < 1 || n < 1) fail("order and arity must be positive");
  Pointing p(m, n);
  const auto seen = read_edges(lines, p);
  for (std::uint64_t i = 0; i < seen.size(); ++i) {
    const KSet s = p.indexer().set_at(i);
    if (seen[i]) continue;
    if (s.size() != 1) fail("missing edge " + s.to_string());
    p.set_index(i, s[0]);
  }
  for (std::uint64_t i = 0; i < seen.size(); ++i) {
    if (!p.indexer().set_at(i).contains(p.at_index(i)))
      fail("winner of " + p.indexer().set_at(i).to_string() + " is not in the edge");
  }
  return PointedHypertournament(std::move(p));
}

std::string write_group(const FiniteGroup& g) {
  std::string out = "group " + std::to_string(g.order()) + " " + std::to_string(g.identity()) + "\n";
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (b) out += ' ';
      out += std::to_string(g.mul(a, b));
    }
    out += '\n';
  }
  return out;
}

FiniteGroup read_group(std::string_view text) {
  const auto lines = content_lines(text);
  const auto [m, e] = parse_header(lines, "group");
  if (m < 1) fail("group order must be positive");
  std::vector<Element> table;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    for (long long v : ints_of(lines[li])) {
      if (v < 0 || v >= m) fail("table entry out of range");
      table.push_back(static_cast<Element>(v));
    }
  }
  if (table.size() != static_cast<std::size_t>(m) * m) fail("expected an m x m table");
  FiniteGroup g = FiniteGroup::from_table(m, std::move(table));
  if (g.identity() != e) fail("declared identity " + std::to_string(e) + " is not the identity");
  return g;
}

std::string write_sign(const SignFunction& lambda) {
  std::string out = "sign " + std::to_string(lambda.order()) + " " + std::to_string(lambda.arity()) + "\n";
  for (const auto& [key, member] : lambda.choices()) {
    out += std::to_string(member.size()) + ": " + join_set(member) + "\n";
  }
  return out;
}

SignFunction read_sign(std::string_view text, const FiniteGroup& g, bool partial) {
  const auto lines = content_lines(text);
  const auto [m, n] = parse_header(lines, "sign");
  if (m != g.order()) fail("sign function order differs from the group order");
  const ObverseIndex idx(g, n);
  SignFunction lambda(m, n);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail("line " + std::to_string(li + 1) + ": missing ':'");
    const auto k = ints_of(line.substr(0, colon));
    const auto elems = ints_of(line.substr(colon + 1));
    if (k.size() != 1 || k[0] != static_cast<long long>(elems.size()))
      fail("line " + std::to_string(li + 1) + ": size prefix does not match the set");
    std::vector<Element> v;
    for (long long x : elems) {
      if (x < 0 || x >= m) fail("line " + std::to_string(li + 1) + ": element out of range");
      v.push_back(static_cast<Element>(x));
    }
    KSet u;
    try {
      u = KSet::from_unsorted(std::move(v));
    } catch (const Error&) {
      fail("line " + std::to_string(li + 1) + ": repeated element");
    }
    const KSet* key = nullptr;
    try {
      key = &idx.key_of(u);
    } catch (const Error&) {
      fail("line " + std::to_string(li + 1) + ": " + u.to_string() + " is not in any obverse class");
    }
    if (lambda.has(*key)) fail("line " + std::to_string(li + 1) + ": class " + key->to_string() + " chosen twice");
    lambda.set(*key, u);
  }
  if (!partial) validate_sign_function(g, lambda);
  return lambda;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace magmaforge
