#include "magmaforge/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "magmaforge/error.hpp"

namespace magmaforge {

Term Term::var(int index) {
  if (index < 0) throw Error(Errc::DomainError, "negative variable index");
  Term t;
  t.kind_ = Kind::Var;
  t.var_ = index;
  return t;
}

Term Term::op(std::vector<Term> children) {
  if (children.empty()) throw Error(Errc::ArityMismatch, "f needs at least one argument");
  Term t;
  t.kind_ = Kind::Op;
  t.children_ = std::move(children);
  return t;
}

Term Term::derived(Term left, Term right) {
  Term t;
  t.kind_ = Kind::Derived;
  t.children_.push_back(std::move(left));
  t.children_.push_back(std::move(right));
  return t;
}

int Term::max_variable() const {
  if (kind_ == Kind::Var) return var_;
  int best = -1;
  for (const auto& c : children_) best = std::max(best, c.max_variable());
  return best;
}

std::string Term::to_string() const {
  if (kind_ == Kind::Var) return "x" + std::to_string(var_ + 1);
  std::string out = kind_ == Kind::Op ? "f(" : "a(";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i) out += ", ";
    out += children_[i].to_string();
  }
  return out + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Term parse() {
    Term t = term();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw Error(Errc::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" +
                                      std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Term term() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if ((c == 'f' || c == 'a') && pos_ + 1 < s_.size()) {
      std::size_t look = pos_ + 1;
      while (look < s_.size() && std::isspace(static_cast<unsigned char>(s_[look]))) ++look;
      if (look < s_.size() && s_[look] == '(') {
        pos_ = look + 1;
        std::vector<Term> args;
        args.push_back(term());
        while (eat(',')) args.push_back(term());
        if (!eat(')')) fail("expected ')'");
        if (c == 'f') return Term::op(std::move(args));
        if (args.size() != 2) fail("a(...) takes exactly two arguments");
        return Term::derived(std::move(args[0]), std::move(args[1]));
      }
    }
    if (c == 'x' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      const int d = s_[pos_ + 1] - '0';
      if (d == 0) fail("variables start at x1");
      pos_ += 2;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("only x1..x9 are allowed");
      return Term::var(d - 1);
    }
    static constexpr std::string_view shorthand = "xyzw";
    if (auto k = shorthand.find(c); k != std::string_view::npos) {
      ++pos_;
      return Term::var(static_cast<int>(k));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).parse(); }

Element evaluate(const FiniteMagma& a, const Term& t, std::span<const Element> assignment) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (t.variable() >= static_cast<int>(assignment.size()))
        throw Error(Errc::DomainError, "variable x" + std::to_string(t.variable() + 1) +
                                           " has no value");
      return assignment[t.variable()];
    case Term::Kind::Op: {
      if (static_cast<int>(t.children().size()) != a.arity())
        throw Error(Errc::ArityMismatch, "f applied to " + std::to_string(t.children().size()) +
                                             " arguments in an arity-" +
                                             std::to_string(a.arity()) + " magma");
      std::vector<Element> args;
      args.reserve(t.children().size());
      for (const auto& c : t.children()) args.push_back(evaluate(a, c, assignment));
      return a.apply(args);
    }
    case Term::Kind::Derived: {
      if (a.arity() < 2) throw Error(Errc::ArityMismatch, "a(x, y) needs arity >= 2");
      const Element x = evaluate(a, t.children()[0], assignment);
      const Element y = evaluate(a, t.children()[1], assignment);
      std::vector<Element> args(a.arity(), y);
      args[0] = x;
      return a.apply(args);
    }
  }
  return 0;
}

IdentityResult check_identity(const FiniteMagma& a, const Term& lhs, const Term& rhs, int vars,
                              const Limits& lim) {
  if (vars < 0) throw Error(Errc::DomainError, "negative variable count");
  if (std::max(lhs.max_variable(), rhs.max_variable()) >= vars)
    throw Error(Errc::DomainError, "term uses a variable beyond x" + std::to_string(vars));
  checked_power(a.order(), vars, lim.table);

  IdentityResult result;
  int best_distinct = -1;
  auto check = [&](std::span<const Element> v) {
    const Element l = evaluate(a, lhs, v);
    const Element r = evaluate(a, rhs, v);
    if (l == r) return;
    result.holds = false;
    const int d = distinct_count(v);
    if (d > best_distinct) {
      best_distinct = d;
      result.witness.assign(v.begin(), v.end());
      result.lhs_value = l;
      result.rhs_value = r;
    }
  };
  if (vars == 0)
    check({});
  else
    for_each_tuple(a.order(), vars, check);
  return result;
}

}  // namespace magmaforge
