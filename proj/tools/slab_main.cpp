// CLI front end. One-shot queries over the library plus reproducible
// verification campaigns driven by a flat key=value config with repeated
// check= lines. Exit codes: 0 pass, 1 check failure, 2 usage or error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "slab/builtins.hpp"
#include "slab/codings.hpp"
#include "slab/contfrac.hpp"
#include "slab/error.hpp"
#include "slab/extension.hpp"
#include "slab/factors.hpp"
#include "slab/flow.hpp"
#include "slab/linalg.hpp"
#include "slab/rauzy.hpp"
#include "slab/sturmian.hpp"
#include "slab/word.hpp"

namespace {

using namespace slab;

std::uint64_t horizon_cap() {
  const char* s = std::getenv("SLAB_HORIZON_CAP");
  if (s == nullptr || *s == '\0') return std::numeric_limits<std::uint64_t>::max();
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  require(end != s && *end == '\0' && v > 0, "invalid-arguments",
          "SLAB_HORIZON_CAP must be a positive integer");
  return v;
}

std::uint64_t capped(std::uint64_t h) { return std::min<std::uint64_t>(h, horizon_cap()); }

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trimmed(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trimmed(cur));
  return out;
}

long long parse_ll(const std::string& s) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    require(pos == s.size(), "invalid-arguments", "bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    fail("invalid-arguments", "bad integer '" + s + "'");
  }
}

std::uint64_t parse_u64(const std::string& s) {
  long long v = parse_ll(s);
  require(v >= 0, "invalid-arguments", "expected a non-negative integer, got '" + s + "'");
  return static_cast<std::uint64_t>(v);
}

std::string jstr(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  out += '"';
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "invalid-arguments", "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  require(out.good(), "invalid-arguments", "write failed for '" + path + "'");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    write_text(path, text);
}

// Word specs: "builtin:NAME" (or a bare builtin name), "directive:1,1,2" or
// "directive:pre:[..] period:[..]", "file:PATH", "rotation:y,alpha",
// "line:x1,x2,theta1,theta2" (coded as a cutting sequence).
struct ResolvedWord {
  WordStream stream;
  std::optional<DirectiveSpec> directive;
  std::optional<std::vector<QuadraticReal>> letter_freqs;
  std::optional<LineParams> line;
};

ResolvedWord resolve_word(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = colon == std::string::npos ? std::string("builtin") : spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? spec : spec.substr(colon + 1);
  if (kind == "builtin") {
    BuiltinWord b = builtin_word(rest);
    return {std::move(b.stream), std::move(b.directive), std::move(b.letter_freqs),
            std::nullopt};
  }
  if (kind == "directive") {
    DirectiveSpec d = DirectiveSpec::parse(rest);
    auto [f1, f2] = exact_frequencies(d);
    return {standard_sturmian(d), d, std::vector<QuadraticReal>{f1, f2}, std::nullopt};
  }
  if (kind == "file") {
    std::ifstream in(rest, std::ios::binary);
    require(in.good(), "invalid-arguments", "cannot open word file '" + rest + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    auto [a, letters] = parse_word_file(buf.str());
    return {literal_stream(a, std::move(letters), "file:" + rest), std::nullopt,
            std::nullopt, std::nullopt};
  }
  if (kind == "rotation") {
    auto parts = split_list(rest, ',');
    require(parts.size() == 2, "invalid-arguments", "rotation spec needs y,alpha");
    RotationParams rp{QuadraticReal::parse(parts[0]), QuadraticReal::parse(parts[1])};
    WordStream st = rotation_stream(rp);
    std::vector<QuadraticReal> freqs{QuadraticReal(1) - rp.alpha, rp.alpha};
    return {std::move(st), std::nullopt, std::move(freqs), std::nullopt};
  }
  if (kind == "line") {
    auto parts = split_list(rest, ',');
    require(parts.size() == 4, "invalid-arguments", "line spec needs x1,x2,theta1,theta2");
    LineParams lp{QuadraticReal::parse(parts[0]), QuadraticReal::parse(parts[1]),
                  QuadraticReal::parse(parts[2]), QuadraticReal::parse(parts[3])};
    WordStream st = cutting_stream(lp);
    RotationParams rp = rotation_equivalent_params(lp);
    std::vector<QuadraticReal> freqs{QuadraticReal(1) - rp.alpha, rp.alpha};
    return {std::move(st), std::nullopt, std::move(freqs), lp};
  }
  fail("invalid-arguments", "unknown word spec kind '" + kind + "'");
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string u64_list_json(const std::vector<std::uint64_t>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? ", " : "") + std::to_string(xs[i]);
  return out + "]";
}

// ---------------------------------------------------------------- campaign

struct CampaignConfig {
  std::string word_spec;
  int n_max = 8;
  std::uint64_t horizon = 10000;
  std::vector<std::uint64_t> prefixes;
  std::vector<std::string> checks;
  bool no_timing = false;
  int dot_n = 1;
  std::uint64_t svg_bounces = 12;
  std::string output_json, output_csv, output_dot, output_svg;
  std::optional<int> claimed_Delta, claimed_delta;
};

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {
      "complexity",     "sturmian-complexity", "morse-hedlund", "dendric",
      "second-derivative", "kernel",           "semi-connected", "kirchhoff",
      "tijdeman",       "flow-matrix-example"};
  return names;
}

CampaignConfig parse_campaign(const std::string& text) {
  CampaignConfig cfg;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    require(eq != std::string::npos, "invalid-arguments", "config line missing '=': " + t);
    std::string key = trimmed(t.substr(0, eq));
    std::string val = trimmed(t.substr(eq + 1));
    if (key == "word") {
      cfg.word_spec = val;
    } else if (key == "n_max") {
      cfg.n_max = static_cast<int>(parse_ll(val));
    } else if (key == "horizon") {
      cfg.horizon = parse_u64(val);
    } else if (key == "prefixes") {
      cfg.prefixes.clear();
      for (const auto& p : split_list(val, ',')) cfg.prefixes.push_back(parse_u64(p));
    } else if (key == "check") {
      cfg.checks.push_back(val);
    } else if (key == "no_timing") {
      cfg.no_timing = (val == "true" || val == "1");
    } else if (key == "dot_n") {
      cfg.dot_n = static_cast<int>(parse_ll(val));
    } else if (key == "svg_bounces") {
      cfg.svg_bounces = parse_u64(val);
    } else if (key == "output_json") {
      cfg.output_json = val;
    } else if (key == "output_csv") {
      cfg.output_csv = val;
    } else if (key == "output_dot") {
      cfg.output_dot = val;
    } else if (key == "output_svg") {
      cfg.output_svg = val;
    } else if (key == "claimed_Delta") {
      cfg.claimed_Delta = static_cast<int>(parse_ll(val));
    } else if (key == "claimed_delta") {
      cfg.claimed_delta = static_cast<int>(parse_ll(val));
    } else {
      fail("invalid-arguments", "unknown config key '" + key + "'");
    }
  }
  require(!cfg.word_spec.empty(), "invalid-arguments", "config needs a word= line");
  require(!cfg.checks.empty(), "invalid-arguments", "config needs at least one check= line");
  require(cfg.n_max >= 0, "invalid-arguments", "n_max must be >= 0");
  require(cfg.horizon >= static_cast<std::uint64_t>(cfg.n_max) + 2, "invalid-arguments",
          "horizon must be >= n_max + 2");
  for (const auto& c : cfg.checks) {
    const auto& known = known_checks();
    require(std::find(known.begin(), known.end(), c) != known.end(), "invalid-arguments",
            "unknown check '" + c + "'");
  }
  if (cfg.prefixes.empty()) cfg.prefixes = {10000};
  for (std::size_t i = 1; i < cfg.prefixes.size(); ++i)
    require(cfg.prefixes[i - 1] < cfg.prefixes[i], "invalid-arguments",
            "prefixes must be strictly increasing");
  cfg.horizon = capped(cfg.horizon);
  return cfg;
}

struct CheckResult {
  bool pass = true;
  bool caveat = false;
  std::string details = "{}";
};

CheckResult run_check(const std::string& name, const CampaignConfig& cfg,
                      const ResolvedWord& rw) {
  const WordStream& w = rw.stream;
  const std::uint64_t H = cfg.horizon;
  const int nmax = cfg.n_max;
  CheckResult res;
  std::ostringstream d;
  if (name == "complexity") {
    ComplexityProfile prof = complexity(w, nmax, H);
    bool ok = prof.p[0] == 1;
    const std::uint64_t dsz = static_cast<std::uint64_t>(w.alphabet().size());
    for (std::size_t i = 0; i + 1 < prof.p.size(); ++i)
      ok = ok && prof.p[i] <= prof.p[i + 1] && prof.p[i + 1] <= prof.p[i] * dsz;
    res.pass = ok;
    res.caveat = !prof.saturated;
    d << "{\"p\": " << u64_list_json(prof.p)
      << ", \"saturated\": " << bool_str(prof.saturated) << "}";
  } else if (name == "sturmian-complexity") {
    ComplexityProfile prof = complexity(w, nmax, H);
    bool ok = true;
    for (std::size_t i = 0; i < prof.p.size(); ++i) ok = ok && prof.p[i] == i + 1;
    res.pass = ok;
    res.caveat = !prof.saturated;
    d << "{\"p\": " << u64_list_json(prof.p)
      << ", \"saturated\": " << bool_str(prof.saturated) << "}";
  } else if (name == "morse-hedlund") {
    MHVerdict v = morse_hedlund_detect(w, nmax, H);
    res.pass = true;
    res.caveat = !v.saturated;
    d << "{\"eventually_periodic\": " << bool_str(v.eventually_periodic)
      << ", \"n0\": " << v.n0 << ", \"saturated\": " << bool_str(v.saturated) << "}";
  } else if (name == "dendric") {
    DendricityReport r = dendricity_check(w, nmax, H);
    res.pass = r.dendric;
    res.caveat = !r.saturated;
    d << r.json();
  } else if (name == "second-derivative") {
    bool ok = true;
    for (int n = 0; n <= nmax; ++n) ok = ok && second_derivative_identity_check(w, n, H);
    res.pass = ok;
    d << "{\"n_max\": " << nmax << "}";
  } else if (name == "kernel") {
    ComplexityProfile prof = complexity(w, nmax + 1, H);
    bool ok = true;
    for (int n = 0; n <= nmax && ok; ++n) {
      RationalMatrix M = flow_matrix(w, n, H);
      KernelBasis left = kernel_basis(M, KernelSide::Left);
      ok = ok && left.dimension == 1;
      if (ok)
        for (const Rat& x : left.basis[0]) ok = ok && x == 1;
      KernelBasis right = kernel_basis(M, KernelSide::Right);
      std::uint64_t expect = prof.p[static_cast<std::size_t>(n) + 1] -
                             prof.p[static_cast<std::size_t>(n)] + 1;
      ok = ok && right.dimension == expect;
    }
    res.pass = ok;
    res.caveat = !prof.saturated;
    d << "{\"n_max\": " << nmax << "}";
  } else if (name == "semi-connected") {
    bool ok = true;
    for (int n = 0; n <= nmax && ok; ++n) ok = is_semi_connected(rauzy_graph(w, n, H));
    res.pass = ok;
    d << "{\"n_max\": " << nmax << "}";
  } else if (name == "kirchhoff") {
    std::uint64_t N = cfg.prefixes.back();
    int top = std::min(nmax, 6);
    bool ok = true;
    for (int n = 0; n <= top && ok; ++n) {
      RationalMatrix M = flow_matrix(w, n, N);
      FrequencyVector f = frequency_vector(w, n + 1, {N})[0];
      QuadraticReal r = kirchhoff_residual(M, f);
      Rat tol = make_rat(Int(10) * Int(static_cast<unsigned long>(M.rows())) * Int(n + 1),
                         Int(N));
      ok = (r - QuadraticReal(tol)).sign() <= 0;
    }
    bool exact = rw.directive.has_value();
    if (exact) {
      for (int n = 0; n <= top && ok; ++n) {
        RationalMatrix M = flow_matrix(w, n, H);
        FrequencyVector f = exact_factor_frequencies(*rw.directive, n + 1);
        ok = kirchhoff_residual(M, f).sign() == 0;
      }
    }
    res.pass = ok;
    d << "{\"prefix\": " << N << ", \"n_max\": " << top
      << ", \"exact\": " << bool_str(exact) << "}";
  } else if (name == "tijdeman") {
    TijdemanAudit a = tijdeman_audit(w, w.alphabet().size(), std::max(nmax, 1), H,
                                     rw.letter_freqs, cfg.claimed_Delta, cfg.claimed_delta);
    res.pass = a.all_hold;
    res.caveat = !a.saturated;
    d << a.json();
  } else if (name == "flow-matrix-example") {
    RationalMatrix M = flow_matrix(w, 1, H);
    std::string csv = M.csv();
    const std::string golden = ",00,01,10,20\n0,0,1,-1,-1\n1,0,-1,1,0\n2,0,0,0,1\n";
    res.pass = (csv == golden);
    if (!cfg.output_csv.empty()) write_text(cfg.output_csv, csv);
    d << "{\"rows\": " << M.rows() << ", \"cols\": " << M.cols()
      << ", \"matches\": " << bool_str(res.pass) << "}";
  } else {
    fail("invalid-arguments", "unknown check '" + name + "'");
  }
  res.details = d.str();
  return res;
}

int run_campaign(const CampaignConfig& cfg) {
  ResolvedWord rw = resolve_word(cfg.word_spec);
  if (!cfg.output_dot.empty())
    write_text(cfg.output_dot, rauzy_graph(rw.stream, cfg.dot_n, cfg.horizon).dot());
  if (!cfg.output_svg.empty()) {
    require(rw.line.has_value(), "invalid-arguments",
            "output_svg needs a line: word spec");
    write_text(cfg.output_svg, render_trajectory_svg(*rw.line, cfg.svg_bounces));
  }

  std::ostringstream rep;
  rep << "{\"word\": " << jstr(rw.stream.label())
      << ", \"word_spec\": " << jstr(cfg.word_spec) << ", \"n_max\": " << cfg.n_max
      << ", \"horizon\": " << cfg.horizon << ", \"checks\": [";
  bool all_pass = true;
  for (std::size_t i = 0; i < cfg.checks.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r = run_check(cfg.checks[i], cfg, rw);
    auto t1 = std::chrono::steady_clock::now();
    if (!r.pass && !r.caveat) all_pass = false;
    rep << (i ? ", " : "") << "{\"name\": " << jstr(cfg.checks[i])
        << ", \"pass\": " << bool_str(r.pass) << ", \"caveat\": " << bool_str(r.caveat);
    if (!cfg.no_timing) {
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", ms);
      rep << ", \"ms\": " << buf;
    }
    rep << ", \"details\": " << r.details << "}";
  }
  rep << "], \"all_pass\": " << bool_str(all_pass) << "}\n";
  std::string text = rep.str();
  std::cout << text;
  if (!cfg.output_json.empty()) write_text(cfg.output_json, text);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructions and checks for low-complexity infinite words"};
  app.require_subcommand(1);
  int exit_code = 0;

  // generate
  auto* gen = app.add_subcommand("generate", "print a prefix in word-file format");
  std::string gen_word;
  std::uint64_t gen_n = 64;
  std::string gen_out;
  gen->add_option("word", gen_word, "word spec")->required();
  gen->add_option("-n,--length", gen_n, "prefix length");
  gen->add_option("-o,--out", gen_out, "output path (default stdout)");
  gen->callback([&] {
    ResolvedWord rw = resolve_word(gen_word);
    emit(word_file_text(rw.stream, capped(gen_n)), gen_out);
  });

  // complexity
  auto* cx = app.add_subcommand("complexity", "factor complexity profile as JSON");
  std::string cx_word;
  int cx_nmax = 16;
  std::uint64_t cx_h = 100000;
  bool cx_detect = false;
  cx->add_option("word", cx_word, "word spec")->required();
  cx->add_option("--n-max", cx_nmax, "largest factor length");
  cx->add_option("--horizon", cx_h, "prefix length scanned");
  cx->add_flag("--detect", cx_detect, "append the eventual-periodicity verdict");
  cx->callback([&] {
    ResolvedWord rw = resolve_word(cx_word);
    std::uint64_t h = capped(cx_h);
    ComplexityProfile prof = complexity(rw.stream, cx_nmax, h);
    std::ostringstream os;
    os << "{\"label\": " << jstr(rw.stream.label()) << ", \"n_max\": " << cx_nmax
       << ", \"horizon\": " << h << ", \"p\": " << u64_list_json(prof.p)
       << ", \"saturated\": " << bool_str(prof.saturated);
    if (cx_detect) {
      MHVerdict v = morse_hedlund_detect(rw.stream, cx_nmax, h);
      os << ", \"morse_hedlund\": {\"eventually_periodic\": "
         << bool_str(v.eventually_periodic) << ", \"n0\": " << v.n0 << "}";
    }
    os << "}\n";
    std::cout << os.str();
  });

  // cf
  auto* cf = app.add_subcommand("cf", "continued fraction expansion as JSON");
  std::string cf_value;
  std::uint64_t cf_terms = 64;
  cf->add_option("--value", cf_value, "rational or quadratic value, e.g. 17/6 or sqrt(2)")
      ->required();
  cf->add_option("--max-terms", cf_terms, "partial quotient budget");
  cf->callback([&] {
    CFExpansion e = cf_expand(QuadraticReal::parse(cf_value), cf_terms);
    std::cout << e.json() << "\n";
  });

  // renormalize
  auto* rn = app.add_subcommand("renormalize",
                                "erase the type letter before each occurrence of the other");
  std::string rn_word;
  std::uint64_t rn_n = 64, rn_h = 1 << 20;
  std::uint64_t rn_terms = 0;
  rn->add_option("word", rn_word, "word spec")->required();
  rn->add_option("-n,--length", rn_n, "renormalized prefix length to print");
  rn->add_option("--horizon", rn_h, "source horizon cap");
  rn->add_option("--terms", rn_terms,
                 "instead print this many recovered run lengths as JSON");
  rn->callback([&] {
    ResolvedWord rw = resolve_word(rn_word);
    std::uint64_t h = capped(rn_h);
    if (rn_terms > 0) {
      RunLengths rl = run_length_extract(rw.stream, rn_terms, h);
      std::ostringstream os;
      os << "{\"values\": [";
      for (std::size_t i = 0; i < rl.values.size(); ++i)
        os << (i ? ", " : "") << rl.values[i];
      os << "], \"truncated\": " << bool_str(rl.truncated) << "}\n";
      std::cout << os.str();
    } else {
      emit(word_file_text(renormalize(rw.stream, h), capped(rn_n)), "");
    }
  });

  // rauzy
  auto* rz = app.add_subcommand("rauzy", "Rauzy graph summary; optional DOT export");
  std::string rz_word, rz_dot;
  int rz_n = 0;
  std::uint64_t rz_h = 100000;
  rz->add_option("word", rz_word, "word spec")->required();
  rz->add_option("-n,--order", rz_n, "factor length (vertices)")->required();
  rz->add_option("--horizon", rz_h, "prefix length scanned");
  rz->add_option("--dot", rz_dot, "write the graph in DOT format to this path");
  rz->callback([&] {
    ResolvedWord rw = resolve_word(rz_word);
    RauzyGraph g = rauzy_graph(rw.stream, rz_n, capped(rz_h));
    if (!rz_dot.empty()) write_text(rz_dot, g.dot());
    std::ostringstream os;
    os << "{\"n\": " << g.n << ", \"vertices\": " << g.vertices.size()
       << ", \"edges\": " << g.edges.size()
       << ", \"strongly_connected\": " << bool_str(is_strongly_connected(g))
       << ", \"semi_connected\": " << bool_str(is_semi_connected(g))
       << ", \"saturated\": " << bool_str(g.saturated) << "}\n";
    std::cout << os.str();
  });

  // ext-graph
  auto* xg = app.add_subcommand("ext-graph", "extension graph of a factor");
  std::string xg_word, xg_u, xg_dot;
  std::uint64_t xg_h = 100000;
  xg->add_option("word", xg_word, "word spec")->required();
  xg->add_option("-u,--factor", xg_u, "factor over display symbols; 'eps' for the empty word")
      ->required();
  xg->add_option("--horizon", xg_h, "prefix length scanned");
  xg->add_option("--dot", xg_dot, "write the bipartite graph in DOT format to this path");
  xg->callback([&] {
    ResolvedWord rw = resolve_word(xg_word);
    const Alphabet& a = rw.stream.alphabet();
    FiniteWord u = (xg_u == "eps") ? FiniteWord(a, {}) : FiniteWord::parse(a, xg_u);
    ExtensionGraph e = extension_graph(rw.stream, u, capped(xg_h));
    if (!xg_dot.empty()) write_text(xg_dot, e.dot());
    std::ostringstream os;
    os << "{\"u\": " << jstr(u.display())
       << ", \"class\": " << jstr(ext_class_name(classify(e))) << ", \"left\": [";
    for (std::size_t i = 0; i < e.left.size(); ++i)
      os << (i ? ", " : "") << a.symbol(e.left[i]);
    os << "], \"right\": [";
    for (std::size_t i = 0; i < e.right.size(); ++i)
      os << (i ? ", " : "") << a.symbol(e.right[i]);
    os << "], \"edges\": [";
    for (std::size_t i = 0; i < e.edges.size(); ++i)
      os << (i ? ", " : "") << "[" << a.symbol(e.edges[i].first) << ", "
         << a.symbol(e.edges[i].second) << "]";
    os << "], \"saturated\": " << bool_str(e.saturated) << "}\n";
    std::cout << os.str();
  });

  // flow-matrix
  auto* fm = app.add_subcommand("flow-matrix", "flow matrix M = R - L as CSV");
  std::string fm_word, fm_csv;
  int fm_n = 0;
  std::uint64_t fm_h = 100000;
  fm->add_option("word", fm_word, "word spec")->required();
  fm->add_option("-n,--order", fm_n, "row factor length")->required();
  fm->add_option("--horizon", fm_h, "prefix length scanned");
  fm->add_option("--csv", fm_csv, "output path (default stdout)");
  fm->callback([&] {
    ResolvedWord rw = resolve_word(fm_word);
    emit(flow_matrix(rw.stream, fm_n, capped(fm_h)).csv(), fm_csv);
  });

  // kernel
  auto* kn = app.add_subcommand("kernel", "exact kernel basis of the flow matrix");
  std::string kn_word, kn_side = "right";
  int kn_n = 0;
  std::uint64_t kn_h = 100000;
  kn->add_option("word", kn_word, "word spec")->required();
  kn->add_option("-n,--order", kn_n, "row factor length")->required();
  kn->add_option("--side", kn_side, "right or left")
      ->check(CLI::IsMember({"right", "left"}));
  kn->add_option("--horizon", kn_h, "prefix length scanned");
  kn->callback([&] {
    ResolvedWord rw = resolve_word(kn_word);
    RationalMatrix M = flow_matrix(rw.stream, kn_n, capped(kn_h));
    KernelSide side = kn_side == "left" ? KernelSide::Left : KernelSide::Right;
    std::cout << kernel_basis(M, side).json() << "\n";
  });

  // dendric
  auto* dd = app.add_subcommand("dendric",
                                "check every factor's extension graph is a tree");
  std::string dd_word;
  int dd_nmax = 8;
  std::uint64_t dd_h = 100000;
  dd->add_option("word", dd_word, "word spec")->required();
  dd->add_option("--max-n", dd_nmax, "largest factor length checked");
  dd->add_option("--horizon", dd_h, "prefix length scanned");
  dd->callback([&] {
    ResolvedWord rw = resolve_word(dd_word);
    DendricityReport r = dendricity_check(rw.stream, dd_nmax, capped(dd_h));
    std::cout << r.json() << "\n";
    if (!r.dendric) exit_code = 1;
  });

  // tijdeman-audit
  auto* tj = app.add_subcommand("tijdeman-audit",
                                "audit the bound p(n) >= (Delta-1)(n-1)+d");
  std::string tj_word, tj_freqs;
  int tj_d = 0, tj_nmax = 12, tj_cD = 0, tj_cd = 0;
  std::uint64_t tj_h = 100000;
  bool tj_exact = false;
  tj->add_option("word", tj_word, "word spec")->required();
  tj->add_option("-d,--alphabet-size", tj_d, "claimed alphabet size (default: actual)");
  tj->add_option("--n-max", tj_nmax, "largest length audited");
  tj->add_option("--horizon", tj_h, "prefix length scanned");
  tj->add_flag("--exact-freq", tj_exact,
               "use the word's exact letter frequencies for Delta");
  tj->add_option("--freqs", tj_freqs, "comma-separated exact letter frequencies");
  auto* tj_oD = tj->add_option("--claimed-Delta", tj_cD, "claimed Delta (audited)");
  auto* tj_od = tj->add_option("--claimed-delta", tj_cd, "claimed delta (recorded)");
  tj->callback([&] {
    ResolvedWord rw = resolve_word(tj_word);
    int d = tj_d > 0 ? tj_d : rw.stream.alphabet().size();
    std::optional<std::vector<QuadraticReal>> freqs;
    if (tj_exact) {
      require(rw.letter_freqs.has_value(), "invalid-arguments",
              "this word has no exact letter frequencies; pass --freqs or --claimed-Delta");
      freqs = rw.letter_freqs;
    }
    if (!tj_freqs.empty()) {
      require(!tj_exact, "invalid-arguments", "--exact-freq and --freqs are exclusive");
      std::vector<QuadraticReal> fs;
      for (const auto& s : split_list(tj_freqs, ',')) fs.push_back(QuadraticReal::parse(s));
      freqs = std::move(fs);
    }
    std::optional<int> cD = tj_oD->count() ? std::optional<int>(tj_cD) : std::nullopt;
    std::optional<int> cd = tj_od->count() ? std::optional<int>(tj_cd) : std::nullopt;
    TijdemanAudit a = tijdeman_audit(rw.stream, d, tj_nmax, capped(tj_h), freqs, cD, cd);
    std::cout << a.json() << "\n";
    if (a.Delta_used > 0 && !a.all_hold) exit_code = 1;
  });

  // code
  auto* code = app.add_subcommand("code", "dynamical codings");
  code->require_subcommand(1);
  std::string c_y, c_alpha, c_x, c_theta, c_svg;
  std::uint64_t c_n = 64, c_bounces = 12;
  auto* crot = code->add_subcommand("rotation", "two-interval rotation coding");
  crot->add_option("--y", c_y, "starting point in [0,1)")->required();
  crot->add_option("--alpha", c_alpha, "irrational rotation angle in (0,1)")->required();
  crot->add_option("-n,--length", c_n, "letters to emit");
  crot->callback([&] {
    RotationParams p{QuadraticReal::parse(c_y), QuadraticReal::parse(c_alpha)};
    std::cout << rotation_word(p, capped(c_n)).str() << "\n";
  });
  for (const auto& [sub_name, help] :
       std::vector<std::pair<std::string, std::string>>{
           {"cutting", "grid-crossing coding of a straight line"},
           {"billiard", "square billiard bounce coding"},
           {"flow", "torus first-return coding"}}) {
    auto* sc = code->add_subcommand(sub_name, help);
    sc->add_option("--x", c_x, "start point x1,x2 in [0,1)^2")->required();
    sc->add_option("--theta", c_theta, "direction theta1,theta2 > 0")->required();
    sc->add_option("-n,--length", c_n, "letters to emit");
    sc->add_option("--svg", c_svg, "write an SVG trajectory render to this path");
    sc->add_option("--bounces", c_bounces, "segments drawn in the SVG");
    std::string kind = sub_name;
    sc->callback([&, kind] {
      auto xs = split_list(c_x, ',');
      auto ts = split_list(c_theta, ',');
      require(xs.size() == 2 && ts.size() == 2, "invalid-arguments",
              "--x and --theta each need two comma-separated values");
      LineParams p{QuadraticReal::parse(xs[0]), QuadraticReal::parse(xs[1]),
                   QuadraticReal::parse(ts[0]), QuadraticReal::parse(ts[1])};
      if (!c_svg.empty()) write_text(c_svg, render_trajectory_svg(p, c_bounces));
      std::uint64_t n = capped(c_n);
      FiniteWord word = kind == "cutting"    ? cutting_sequence(p, n)
                        : kind == "billiard" ? billiard_word(p, n)
                                             : flow_word(p, n);
      std::cout << word.str() << "\n";
    });
  }

  // campaign
  auto* cp = app.add_subcommand("campaign", "run a check list from a config file");
  std::string cp_config;
  bool cp_no_timing = false;
  cp->add_option("--config", cp_config, "flat key=value config with repeated check= lines")
      ->required();
  cp->add_flag("--no-timing", cp_no_timing, "omit timing fields for byte-stable reports");
  cp->callback([&] {
    std::ifstream in(cp_config, std::ios::binary);
    require(in.good(), "invalid-arguments", "cannot open config '" + cp_config + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    CampaignConfig cfg = parse_campaign(buf.str());
    if (cp_no_timing) cfg.no_timing = true;
    exit_code = run_campaign(cfg);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
