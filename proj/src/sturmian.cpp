#include "slab/sturmian.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <regex>
#include <sstream>

namespace slab {

namespace {

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) {
        out.push_back(std::stol(cur));
        cur.clear();
      }
    } else {
      require(std::isdigit(static_cast<unsigned char>(c)) || c == '-',
              "invalid-arguments", "bad run-length list: " + s);
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stol(cur));
  return out;
}

// In-place erasure pass for R_i on a materialized prefix. The final letter is
// dropped when it equals i (its fate depends on the unseen next letter), so
// the output is always an exact prefix of R_i(w).
std::vector<Letter> erase_pass(const std::vector<Letter>& v, Letter i) {
  Letter j = (i == 1) ? 2 : 1;
  std::vector<Letter> out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == i) {
      if (k + 1 == v.size()) break;       // unreliable trailing i
      if (v[k + 1] == j) continue;        // erased
    }
    out.push_back(v[k]);
  }
  return out;
}

// Type of a materialized prefix: which square 11/22 occurs.
WordType vec_type(const std::vector<Letter>& v) {
  bool s1 = false, s2 = false;
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    if (v[k] == 1 && v[k + 1] == 1) s1 = true;
    if (v[k] == 2 && v[k + 1] == 2) s2 = true;
  }
  require(!(s1 && s2), "not-sturmian", "both squares 11 and 22 occur");
  if (s1) return WordType::Type1;
  if (s2) return WordType::Type2;
  return WordType::Undetermined;
}

}  // namespace

DirectiveSpec DirectiveSpec::parse(const std::string& s) {
  require(s.find_first_not_of(" \t") != std::string::npos, "invalid-arguments",
          "empty directive");
  DirectiveSpec spec;
  static const std::regex form(R"(^\s*pre\s*:\s*\[([^\]]*)\]\s*period\s*:\s*\[([^\]]*)\]\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, form)) {
    spec.pre = parse_long_list(m[1].str());
    spec.period = parse_long_list(m[2].str());
  } else {
    spec.pre = parse_long_list(s);
  }
  spec.validate();
  return spec;
}

void DirectiveSpec::validate() const {
  for (std::size_t k = 0; k < pre.size(); ++k)
    require(pre[k] >= (k == 0 ? 0 : 1), "invalid-arguments",
            "run length b_" + std::to_string(k) + " must be >= 1");
  // Period entries recur at indices >= 1, where zero run lengths are invalid.
  for (long v : period)
    require(v >= 1, "invalid-arguments", "periodic run lengths must be >= 1");
}

long DirectiveSpec::b(std::size_t k) const {
  if (k < pre.size()) return pre[k];
  if (period.empty()) return 1;  // implicit all-ones continuation
  return period[(k - pre.size()) % period.size()];
}

std::string DirectiveSpec::str() const {
  std::ostringstream os;
  if (period.empty()) {
    for (std::size_t i = 0; i < pre.size(); ++i) os << (i ? "," : "") << pre[i];
  } else {
    os << "pre:[";
    for (std::size_t i = 0; i < pre.size(); ++i) os << (i ? "," : "") << pre[i];
    os << "] period:[";
    for (std::size_t i = 0; i < period.size(); ++i) os << (i ? "," : "") << period[i];
    os << "]";
  }
  return os.str();
}

WordStream standard_sturmian(const DirectiveSpec& spec) {
  spec.validate();
  struct Gen {
    DirectiveSpec spec;
    std::vector<Letter> u{1}, v{2};
    std::size_t blk = 0;   // directive block index (even: sigma1, odd: sigma2)
    long used = 0;         // substitutions consumed within the block
  };
  auto g = std::make_shared<Gen>();
  g->spec = spec;
  auto extend = [g](std::vector<Letter>& buf) {
    // Apply substitutions until the settled common prefix outgrows the cache.
    // After applying s_{n+1}: sigma1 keeps u, makes v = u v, prefix = old u;
    // sigma2 keeps v, makes u = v u, prefix = old v.
    while (true) {
      while (g->used >= g->spec.b(g->blk)) {
        ++g->blk;
        g->used = 0;
      }
      const std::vector<Letter>* p;
      if (g->blk % 2 == 0) {
        std::vector<Letter> nv = g->u;
        nv.insert(nv.end(), g->v.begin(), g->v.end());
        g->v = std::move(nv);
        p = &g->u;
      } else {
        std::vector<Letter> nu = g->v;
        nu.insert(nu.end(), g->u.begin(), g->u.end());
        g->u = std::move(nu);
        p = &g->v;
      }
      ++g->used;
      if (p->size() > buf.size()) {
        buf.assign(p->begin(), p->end());
        return;
      }
    }
  };
  return WordStream(Alphabet(), "sturmian[" + spec.str() + "]", std::move(extend));
}

WordType word_type(const WordStream& w, std::uint64_t horizon_cap) {
  require(w.alphabet().size() == 2, "alphabet-mismatch", "type detection needs a binary word");
  std::uint64_t h = 64;
  for (;;) {
    std::uint64_t probe = std::min(h, horizon_cap);
    if (auto len = w.known_length()) probe = std::min(probe, *len);
    WordType t = vec_type(w.prefix(probe).letters());
    if (t != WordType::Undetermined) return t;
    if (probe >= horizon_cap || (w.known_length() && probe >= *w.known_length()))
      return WordType::Undetermined;
    h *= 2;
  }
}

WordStream renormalize(const WordStream& w, std::uint64_t horizon_cap) {
  WordType t = word_type(w, horizon_cap);
  require(t != WordType::Undetermined, "undetermined-type",
          "cannot detect word type within horizon cap");
  Letter i = (t == WordType::Type1) ? 1 : 2;
  Letter j = (i == 1) ? 2 : 1;
  auto pos = std::make_shared<std::uint64_t>(0);
  auto extend = [w, pos, i, j](std::vector<Letter>& buf) {
    std::size_t before = buf.size();
    while (buf.size() == before) {
      Letter a = w.at(*pos);
      if (a == i && w.at(*pos + 1) == j) {
        ++*pos;  // erased occurrence of i
        continue;
      }
      buf.push_back(a);
      ++*pos;
    }
  };
  std::string name = std::string("R") + std::to_string(i) + "(" + w.label() + ")";
  return WordStream(w.alphabet(), name, std::move(extend));
}

RunLengths run_length_extract(const WordStream& w, std::size_t terms, std::uint64_t horizon) {
  require(terms >= 1, "invalid-arguments", "terms must be >= 1");
  require(w.alphabet().size() == 2, "alphabet-mismatch", "run lengths need a binary word");
  std::uint64_t H = 4096;
  if (auto len = w.known_length()) horizon = std::min(horizon, *len);
  H = std::min(H, horizon);
  for (;;) {
    std::vector<Letter> vec = w.prefix(H).letters();
    RunLengths rl;
    bool first = true;
    WordType cur = WordType::Undetermined;
    long count = 0;
    bool stalled = false;
    while (rl.values.size() < terms) {
      if (vec.size() < 2) {
        stalled = true;
        break;
      }
      WordType t = vec_type(vec);
      if (t == WordType::Undetermined) {
        stalled = true;
        break;
      }
      if (first) {
        if (t == WordType::Type2) rl.values.push_back(0);  // b_0 = 0
        cur = t;
        count = 0;
        first = false;
      }
      if (t == cur) {
        ++count;
      } else {
        rl.values.push_back(count);
        cur = t;
        count = 1;
      }
      if (rl.values.size() >= terms) break;
      vec = erase_pass(vec, t == WordType::Type1 ? 1 : 2);
    }
    if (rl.values.size() >= terms) {
      rl.values.resize(terms);
      return rl;
    }
    if (!stalled || H >= horizon) {
      rl.truncated = true;
      return rl;
    }
    H = std::min(H * 4, horizon);
  }
}

std::pair<QuadraticReal, QuadraticReal> exact_frequencies(const DirectiveSpec& spec) {
  spec.validate();
  std::vector<Int> pre(spec.pre.begin(), spec.pre.end());
  std::vector<Int> period;
  if (spec.period.empty())
    period = {Int(1)};  // implicit all-ones continuation
  else
    period.assign(spec.period.begin(), spec.period.end());
  QuadraticReal x = periodic_cf_value(pre, period);  // x = f1/f2 > 0
  require(!x.is_rational(), "invalid-arguments", "degenerate rational frequency ratio");
  QuadraticReal one(1);
  QuadraticReal f2 = one / (one + x);
  QuadraticReal f1 = one - f2;
  return {f1, f2};
}

}  // namespace slab
