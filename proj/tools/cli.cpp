#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "magmaforge/analysis.hpp"
#include "magmaforge/arithmetic.hpp"
#include "magmaforge/census.hpp"
#include "magmaforge/construct.hpp"
#include "magmaforge/error.hpp"
#include "magmaforge/hypertournaments.hpp"
#include "magmaforge/io.hpp"
#include "magmaforge/term.hpp"

namespace magmaforge::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  int threads = 1;
  std::uint64_t rng_seed = 0;
  bool json = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<int> int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  for (const auto& tok : split(s, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad " + what + ": '" + s + "'");
    }
  }
  if (out.empty()) throw UsageError("bad " + what + ": '" + s + "'");
  return out;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  return read_file(path);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::DomainError, "cannot write " + path);
  f << text;
}

std::string first_word(const std::string& text) {
  std::istringstream in(text);
  std::string w;
  while (in >> w) {
    if (w[0] != '#') return w;
    std::string rest;
    std::getline(in, rest);
  }
  return {};
}

FiniteMagma load_magma(const std::string& path, const Limits& lim) {
  const std::string text = read_input(path);
  const std::string kind = first_word(text);
  if (kind == "magma") return read_magma(text, lim);
  if (kind == "pointing") return from_pointing(read_pointing(text), lim);
  if (kind == "htour") return to_magma(read_htour(text), lim);
  throw Error(Errc::ParseError, "expected a magma, pointing or htour file");
}

PointedHypertournament load_htour(const std::string& path, const Limits& lim) {
  const std::string text = read_input(path);
  const std::string kind = first_word(text);
  if (kind == "htour") return read_htour(text);
  if (kind == "magma") return from_magma(read_magma(text, lim));
  if (kind == "pointing") return PointedHypertournament(read_pointing(text));
  throw Error(Errc::ParseError, "expected an htour, magma or pointing file");
}

FiniteGroup parse_group(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "cyclic") {
    const auto v = int_list(rest, "group spec");
    if (v.size() != 1 || v[0] < 1) throw UsageError("expected cyclic:<m>");
    return cyclic_group(v[0]);
  }
  if (kind == "sum") {
    std::vector<FiniteGroup> parts;
    for (int m : int_list(rest, "group spec")) {
      if (m < 1) throw UsageError("summand orders must be positive");
      parts.push_back(cyclic_group(m));
    }
    return direct_sum(parts);
  }
  if (kind == "semidirect") {
    const auto v = int_list(rest, "group spec");
    if (v.size() != 3 || v[0] < 1 || v[1] < 1) throw UsageError("expected semidirect:<m>,<k>,<t>");
    return semidirect_cyclic(v[0], v[1], v[2]);
  }
  if (kind == "file") return read_group(read_file(rest));
  throw UsageError("unknown group spec '" + spec + "'");
}

SignFunction resolve_lambda(const FiniteGroup& g, int n, const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "canonical") return canonical_lambda(g, n);
  if (kind == "file") {
    if (rest.empty()) throw UsageError("expected file:<path>");
    return read_sign(read_file(rest), g);
  }
  if (kind == "primitive-root") {
    if (!(g == cyclic_group(g.order())))
      throw Error(Errc::DomainError, "primitive-root needs a cyclic group of prime order");
    return primitive_root_lambda(g.order(), n).lambda;
  }
  if (kind == "simple") {
    const auto v = int_list(rest, "lambda spec");
    if (v.size() != 2 || v[0] < 2 || v[1] < 1) throw UsageError("expected simple:<p>,<k>");
    long long pk = 1;
    for (int i = 0; i < v[1] && pk <= 1'000'000; ++i) pk *= v[0];
    if (pk != g.order() || !(g == cyclic_group(g.order())))
      throw Error(Errc::DomainError, "simple:p,k needs the group cyclic:p^k");
    return simple_lambda(v[0], v[1], n);
  }
  if (kind == "correlated") {
    if (rest.empty()) return correlated_lambda(g, n);
    const SignFunction seed = read_sign(read_file(rest), g, true);
    return correlated_lambda(g, n, &seed);
  }
  throw UsageError("unknown lambda source '" + spec + "'");
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

std::string big(const BigCount& c) { return c.str(); }

json permutation_json(const Permutation& p) { return cycle_notation(p); }

// Brute-force count of the partitions of an s-set into m blocks of size s/m.
std::uint64_t brute_regular_partitions(int m, int s, const Limits& lim) {
  if (m < 1 || s < 0 || s % m != 0) throw Error(Errc::NotDivisible, "m does not divide s");
  if (s > 30) throw Error(Errc::CapExceeded, "partition oracle is limited to s <= 30");
  const int b = s / m;
  std::vector<char> used(s, 0);
  std::uint64_t count = 0, nodes = 0;
  // each block starts at the least unused item, then picks b-1 larger ones
  std::function<void(int)> place = [&](int blocks_left) {
    if (++nodes > lim.search_nodes) throw Error(Errc::CapExceeded, "partition oracle node cap");
    if (blocks_left == 0) {
      ++count;
      return;
    }
    int first = 0;
    while (used[first]) ++first;
    used[first] = 1;
    std::function<void(int, int)> pick = [&](int from, int need) {
      if (need == 0) {
        place(blocks_left - 1);
        return;
      }
      for (int x = from; x < s; ++x) {
        if (used[x]) continue;
        used[x] = 1;
        pick(x + 1, need - 1);
        used[x] = 0;
      }
    };
    pick(first + 1, b - 1);
    used[first] = 0;
  };
  if (s == 0) return 1;
  place(m);
  return count;
}

int cmd_construct(const Globals& gl, const std::string& group_spec, int arity, const std::string& lambda_spec,
                  bool emit_pointing, bool emit_sign, const std::string& output, std::ostream& out) {
  const Limits lim = Limits::from_env();
  const FiniteGroup g = parse_group(group_spec);
  const SignFunction lambda = resolve_lambda(g, arity, lambda_spec);
  if (emit_sign) {
    const std::string text = write_sign(lambda);
    if (gl.json) {
      json j{{"format", "sign"}, {"text", text}};
      write_output(output, j.dump(2) + "\n", out);
    } else {
      write_output(output, text, out);
    }
    return 0;
  }
  const FiniteMagma a = build_regular(g, arity, lambda, lim);
  const std::string text = emit_pointing ? write_pointing(extract_pointing(a)) : write_magma(a);
  if (gl.json) {
    json j{{"format", emit_pointing ? "pointing" : "magma"},
           {"order", a.order()},
           {"arity", a.arity()},
           {"text", text}};
    write_output(output, j.dump(2) + "\n", out);
  } else {
    write_output(output, text, out);
  }
  return 0;
}

struct CountArgs {
  std::string kind;
  int m = -1;
  int n = -1;
  int p = -1;
  int s = -1;
  bool proof = false;
  bool oracle = false;
};

int cmd_count(const Globals& gl, const CountArgs& c, std::ostream& out) {
  const Limits lim = Limits::from_env();
  auto need = [&](int v, const char* flag) {
    if (v < 0) throw UsageError(std::string("count ") + c.kind + " needs " + flag);
    return v;
  };
  BigCount value;
  std::vector<CountFactor> factors;
  std::optional<BigCount> oracle;
  if (c.kind == "prps") {
    const int m = need(c.m, "--m"), n = need(c.n, "--n");
    factors = count_prps_factors(m, n);
    value = count_prps(m, n);
    if (c.oracle) oracle = BigCount(brute_enumerate_prps(m, n, {}, gl.threads, lim));
  } else if (c.kind == "rps") {
    const int m = need(c.m, "--m"), n = need(c.n, "--n");
    factors = count_rps_factors(m, n, lim);
    value = 1;
    for (const auto& f : factors) value *= f.value;
    if (c.oracle) oracle = BigCount(brute_enumerate_rps(m, n, {}, gl.threads, lim));
  } else if (c.kind == "regular") {
    const int m = need(c.m, "--m"), n = need(c.n, "--n");
    factors = count_regular_rps_factors(m, n);
    value = count_regular_rps(m, n);
    if (c.oracle) {
      std::uint64_t seen = 0;
      enumerate_sign_functions(cyclic_group(m), n, [&](const SignFunction&) { return ++seen, true; }, lim);
      oracle = BigCount(seen);
    }
  } else if (c.kind == "partitions") {
    const int m = need(c.m, "--m"), s = need(c.s, "--s");
    value = count_regular_partitions(m, BigCount(s));
    if (c.oracle) oracle = BigCount(brute_regular_partitions(m, s, lim));
  } else if (c.kind == "iso-classes") {
    const int p = need(c.p, "--p");
    value = count_iso_classes_max_arity_cyclic(p);
    if (c.oracle) {
      const FiniteGroup g = cyclic_group(p);
      std::vector<FiniteMagma> magmas;
      for (const auto& l : all_sign_functions(g, p - 1, lim)) magmas.push_back(build_regular(g, p - 1, l, lim));
      oracle = BigCount(count_isomorphism_classes(magmas));
    }
  } else {
    throw UsageError("unknown count kind '" + c.kind + "'");
  }

  if (gl.json) {
    json j{{"kind", c.kind}, {"value", big(value)}};
    if (c.proof) {
      json fs = json::array();
      for (const auto& f : factors) fs.push_back(json{{"k", f.k}, {"value", big(f.value)}});
      j["factors"] = fs;
    }
    if (oracle) {
      j["oracle"] = big(*oracle);
      j["match"] = *oracle == value;
    }
    out << j.dump(2) << "\n";
  } else {
    if (c.proof) {
      for (const auto& f : factors) out << "k=" << f.k << ": " << f.value << "\n";
    }
    out << value;
    if (oracle) out << " (oracle: " << *oracle << ", " << (*oracle == value ? "MATCH" : "MISMATCH") << ")";
    out << "\n";
  }
  return oracle && *oracle != value ? 1 : 0;
}

struct AnalyzeArgs {
  std::string kind;
  std::string input;
  std::string lhs;
  std::string rhs;
  int vars = 0;
  std::string alphas;
  std::string target;
  std::string output;
};

int cmd_analyze(const Globals& gl, const AnalyzeArgs& a, std::ostream& out) {
  const Limits lim = Limits::from_env();
  if (a.kind == "verify") {
    const FiniteMagma m = load_magma(a.input, lim);
    const PropertyReport r = classify(m);
    if (gl.json) {
      json counts = json::array();
      for (const auto& row : r.per_k_counts) {
        json jr = json::array();
        for (auto v : row) jr.push_back(std::to_string(v));
        counts.push_back(jr);
      }
      json j{{"conservative", r.conservative},   {"essentially_polyadic", r.essentially_polyadic},
             {"fair", r.fair},                   {"strongly_fair", r.strongly_fair},
             {"nondegenerate", r.nondegenerate}, {"per_k_counts", counts}};
      out << j.dump(2) << "\n";
    } else {
      out << "conservative: " << bool_word(r.conservative) << "\n"
          << "essentially_polyadic: " << bool_word(r.essentially_polyadic) << "\n"
          << "fair: " << bool_word(r.fair) << "\n"
          << "strongly_fair: " << bool_word(r.strongly_fair) << "\n"
          << "nondegenerate: " << bool_word(r.nondegenerate) << "\n";
    }
    return 0;
  }
  if (a.kind == "aut") {
    const FiniteMagma m = load_magma(a.input, lim);
    const auto auts = automorphisms(m, lim);
    if (gl.json) {
      json ps = json::array();
      for (const auto& p : auts) ps.push_back(permutation_json(p));
      out << json{{"order", std::to_string(auts.size())}, {"automorphisms", ps}}.dump(2) << "\n";
    } else {
      out << "order " << auts.size() << "\n";
      for (const auto& p : auts) out << cycle_notation(p) << "\n";
    }
    return 0;
  }
  if (a.kind == "con" || a.kind == "simple") {
    const FiniteMagma m = load_magma(a.input, lim);
    if (a.kind == "simple") {
      const bool s = is_simple(m, lim);
      if (gl.json)
        out << json{{"simple", s}}.dump(2) << "\n";
      else
        out << "simple: " << bool_word(s) << "\n";
      return 0;
    }
    const auto con = all_congruences(m, lim);
    const bool dist = is_distributive(con.lattice);
    if (gl.json) {
      json ps = json::array();
      for (const auto& p : con.congruences) ps.push_back(p.to_string());
      out << json{{"size", std::to_string(con.congruences.size())}, {"congruences", ps}, {"distributive", dist}}
                 .dump(2)
          << "\n";
    } else {
      out << "size " << con.congruences.size() << "\n";
      for (const auto& p : con.congruences) out << p.to_string() << "\n";
      out << "distributive: " << bool_word(dist) << "\n";
    }
    return 0;
  }
  if (a.kind == "identity") {
    if (a.lhs.empty() || a.rhs.empty()) throw UsageError("identity needs --lhs and --rhs");
    const FiniteMagma m = load_magma(a.input, lim);
    const Term lhs = parse_term(a.lhs);
    const Term rhs = parse_term(a.rhs);
    const int vars = a.vars > 0 ? a.vars : std::max({lhs.max_variable(), rhs.max_variable(), 0}) + 1;
    const IdentityResult r = check_identity(m, lhs, rhs, vars, lim);
    if (gl.json) {
      json j{{"holds", r.holds}};
      if (!r.holds) {
        j["witness"] = r.witness;
        j["lhs_value"] = r.lhs_value;
        j["rhs_value"] = r.rhs_value;
      }
      out << j.dump(2) << "\n";
    } else if (r.holds) {
      out << "HOLDS\n";
    } else {
      out << "FAILS at ";
      for (std::size_t i = 0; i < r.witness.size(); ++i) {
        out << (i ? "," : "") << "x" << i + 1 << "=" << r.witness[i];
      }
      out << "\n";
    }
    return 0;
  }
  if (a.kind == "embed") {
    const PointedHypertournament t = load_htour(a.input, lim);
    std::optional<EmbeddingWitness> w;
    std::optional<PointedHypertournament> tgt;
    if (!a.target.empty()) {
      tgt = load_htour(a.target, lim);
      w = find_embedding(t, *tgt, gl.rng_seed, lim);
    } else {
      std::vector<int> alphas;
      if (!a.alphas.empty()) alphas = int_list(a.alphas, "--alphas");
      RegularEmbedding e = embed_regular(t, alphas, lim);
      w = e.witness;
      tgt = e.target;
      if (!a.output.empty()) write_output(a.output, write_magma(e.magma), out);
    }
    const std::string problem = w ? w->check(t, *tgt) : "no embedding";
    if (gl.json) {
      json j{{"target_order", tgt->order()}, {"found", w.has_value()}, {"witness_ok", problem.empty()}};
      if (w) j["vertex_map"] = w->vertex_map;
      out << j.dump(2) << "\n";
    } else {
      out << "target order " << tgt->order() << "\n";
      if (w) {
        for (std::size_t u = 0; u < w->vertex_map.size(); ++u) out << u << " -> " << w->vertex_map[u] << "\n";
      }
      out << "witness " << (problem.empty() ? "ok" : problem) << "\n";
    }
    return problem.empty() ? 0 : 1;
  }
  if (a.kind == "double") {
    const PointedHypertournament t = load_htour(a.input, lim);
    const DoubledTournament d = double_tournament(t);
    std::string text = write_htour(d.tournament);
    text += "# embedding";
    for (Element v : d.witness.vertex_map) text += " " + std::to_string(v);
    text += "\n";
    if (gl.json) {
      json j{{"order", d.tournament.order()},
             {"balanced", is_balanced(d.tournament)},
             {"vertex_map", d.witness.vertex_map},
             {"text", write_htour(d.tournament)}};
      write_output(a.output, j.dump(2) + "\n", out);
    } else {
      write_output(a.output, text, out);
    }
    return 0;
  }
  throw UsageError("unknown analyze kind '" + a.kind + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, count and analyze generalized rock-paper-scissors magmas", "magma-forge"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--threads", gl.threads, "Worker threads for brute-force searches")
      ->check(CLI::Range(1, 256));
  app.add_option("--rng-seed", gl.rng_seed, "Seed for randomized search order");
  app.add_flag("--json", gl.json, "Machine-readable output");

  auto* construct = app.add_subcommand("construct", "Build a regular RPS magma G_n(lambda)");
  std::string group_spec, lambda_spec = "canonical", output;
  int arity = 0;
  bool emit_pointing = false, emit_sign = false;
  construct->add_option("--group", group_spec, "cyclic:m | sum:m1,m2,... | semidirect:m,k,t | file:path")
      ->required();
  construct->add_option("--arity,-n", arity, "Arity n")->required()->check(CLI::PositiveNumber);
  construct->add_option("--lambda", lambda_spec,
                        "canonical | file:path | primitive-root | simple:p,k | correlated[:seedfile]");
  construct->add_flag("--emit-pointing", emit_pointing, "Write the pointing instead of the table");
  construct->add_flag("--emit-sign", emit_sign, "Write the sign function instead of the table");
  construct->add_option("-o,--output", output, "Output file (default stdout)");

  auto* count = app.add_subcommand("count", "Exact counts");
  CountArgs ca;
  count->add_option("kind", ca.kind, "prps | regular | rps | partitions | iso-classes")
      ->required()
      ->check(CLI::IsMember({"prps", "regular", "rps", "partitions", "iso-classes"}));
  count->add_option("--m", ca.m)->check(CLI::NonNegativeNumber);
  count->add_option("--n", ca.n)->check(CLI::NonNegativeNumber);
  count->add_option("--p", ca.p)->check(CLI::NonNegativeNumber);
  count->add_option("--s", ca.s)->check(CLI::NonNegativeNumber);
  count->add_flag("--proof", ca.proof, "Print the per-k factors");
  count->add_flag("--oracle", ca.oracle, "Also run the brute-force enumeration");

  auto* analyze = app.add_subcommand("analyze", "Structural analysis of a magma or hypertournament");
  AnalyzeArgs aa;
  analyze->add_option("kind", aa.kind, "verify | aut | con | simple | identity | embed | double")
      ->required()
      ->check(CLI::IsMember({"verify", "aut", "con", "simple", "identity", "embed", "double"}));
  analyze->add_option("input", aa.input, "Input file (default stdin)");
  analyze->add_option("--lhs", aa.lhs, "Left side of an identity");
  analyze->add_option("--rhs", aa.rhs, "Right side of an identity");
  analyze->add_option("--vars", aa.vars, "Number of variables (default: as used)")->check(CLI::PositiveNumber);
  analyze->add_option("--alphas", aa.alphas, "Per-vertex moduli for embed, comma separated");
  analyze->add_option("--target", aa.target, "Embed into this hypertournament instead");
  analyze->add_option("-o,--output", aa.output, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*construct)
      return cmd_construct(gl, group_spec, arity, lambda_spec, emit_pointing, emit_sign, output, out);
    if (*count) return cmd_count(gl, ca, out);
    return cmd_analyze(gl, aa, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace magmaforge::cli
