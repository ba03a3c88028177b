#include "core/text_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace sforge {

namespace {

struct Token {
  enum Kind { Int, Var, Plus, Minus, Star, Caret } kind;
  uint32_t mod = 0;     // integer value reduced mod p (Int)
  long long raw = 0;    // unreduced value when it fits (Int)
  bool raw_ok = true;   // raw did not overflow
  int var = 0;          // variable index (Var)
};

std::vector<Token> tokenize(const Fp& F, const std::string& s,
                            char var_letter) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '+') {
      out.push_back({Token::Plus});
      ++i;
    } else if (c == '-') {
      out.push_back({Token::Minus});
      ++i;
    } else if (c == '*') {
      out.push_back({Token::Star});
      ++i;
    } else if (c == '^') {
      out.push_back({Token::Caret});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Token t{Token::Int};
      uint64_t m = 0;
      long long raw = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        int d = s[i] - '0';
        m = (m * 10 + uint64_t(d)) % F.p();
        if (t.raw_ok &&
            (__builtin_mul_overflow(raw, 10LL, &raw) ||
             __builtin_add_overflow(raw, (long long)d, &raw)))
          t.raw_ok = false;
        ++i;
      }
      t.mod = uint32_t(m);
      t.raw = t.raw_ok ? raw : 0;
      out.push_back(t);
    } else if (c == var_letter) {
      ++i;
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw DomainError(std::string("parse: variable letter '") +
                          var_letter + "' not followed by an index in: " + s);
      long long idx = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        idx = idx * 10 + (s[i] - '0');
        if (idx > 1000000) throw DomainError("parse: variable index too large");
        ++i;
      }
      Token t{Token::Var};
      t.var = int(idx);
      out.push_back(t);
    } else {
      throw DomainError(std::string("parse: unexpected character '") + c +
                        "' in: " + s);
    }
  }
  return out;
}

}  // namespace

Poly parse_poly(const Ring& R, const std::string& text, char var_letter) {
  const Fp& F = R.F;
  std::vector<Token> toks = tokenize(F, text, var_letter);
  if (toks.empty()) throw DomainError("parse: empty polynomial");
  Poly f(R.nvars);
  size_t i = 0;
  while (i < toks.size()) {
    // Sign.
    uint32_t sign = 1;
    if (toks[i].kind == Token::Plus) {
      ++i;
    } else if (toks[i].kind == Token::Minus) {
      sign = F.neg(1);
      ++i;
    }
    if (i >= toks.size())
      throw DomainError("parse: dangling sign in: " + text);
    // Term: factors joined by '*' or adjacency.
    uint32_t coeff = sign;
    Mono m(size_t(R.nvars), 0);
    bool any_factor = false;
    bool expect_factor = true;
    while (i < toks.size()) {
      const Token& t = toks[i];
      if (t.kind == Token::Plus || t.kind == Token::Minus) break;
      if (t.kind == Token::Star) {
        if (expect_factor)
          throw DomainError("parse: misplaced '*' in: " + text);
        expect_factor = true;
        ++i;
        continue;
      }
      if (t.kind == Token::Caret)
        throw DomainError("parse: misplaced '^' in: " + text);
      if (t.kind == Token::Int) {
        coeff = F.mul(coeff, t.mod);
        any_factor = true;
        expect_factor = false;
        ++i;
        continue;
      }
      // Variable, with optional exponent.
      if (t.var >= R.nvars)
        throw DomainError("parse: variable index " + std::to_string(t.var) +
                          " out of range (ring has " +
                          std::to_string(R.nvars) + " variables) in: " + text);
      long long e = 1;
      ++i;
      if (i < toks.size() && toks[i].kind == Token::Caret) {
        ++i;
        if (i >= toks.size() || toks[i].kind != Token::Int ||
            !toks[i].raw_ok || toks[i].raw < 0 || toks[i].raw > 60000)
          throw DomainError("parse: bad exponent in: " + text);
        e = toks[i].raw;
        ++i;
      }
      long long cur = (long long)m[size_t(t.var)] + e;
      if (cur > 60000) throw DomainError("parse: exponent overflow in: " + text);
      m[size_t(t.var)] = Exp(cur);
      any_factor = true;
      expect_factor = false;
    }
    if (!any_factor || expect_factor)
      throw DomainError("parse: empty term in: " + text);
    f.push_term(coeff, m);
  }
  f.normalize(F, Order::grevlex());
  return f;
}

std::string poly_to_string(const Ring& R, const Poly& f, char var_letter) {
  if (f.zero()) return "0";
  const uint64_t p = R.F.p();
  std::ostringstream os;
  for (int t = 0; t < f.nterms(); ++t) {
    uint64_t c = f.coeff(t);
    // Symmetric lift: print values above p/2 as negatives.
    bool neg = c > p / 2;
    uint64_t mag = neg ? p - c : c;
    if (t == 0) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    const Exp* m = f.mono(t);
    bool constant = f.term_deg(t) == 0;
    bool printed = false;
    if (mag != 1 || constant) {
      os << mag;
      printed = true;
    }
    for (int v = 0; v < f.nvars(); ++v) {
      if (m[v] == 0) continue;
      if (printed) os << "*";
      os << var_letter << v;
      if (m[v] >= 2) os << "^" << int(m[v]);
      printed = true;
    }
  }
  return os.str();
}

namespace {

// Strip a trailing '#'-comment and surrounding whitespace.
std::string clean_line(const std::string& line) {
  std::string s = line;
  size_t h = s.find('#');
  if (h != std::string::npos) s.erase(h);
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::string s = clean_line(line);
    if (!s.empty()) out.push_back(s);
  }
  return out;
}

// Parse "key=<int>" out of a header token.
long long header_int(const std::string& tok, const std::string& key) {
  if (tok.rfind(key + "=", 0) != 0)
    throw DomainError("header: expected " + key + "=... but got: " + tok);
  return std::stoll(tok.substr(key.size() + 1));
}

// Parse "key=<letter>0..<letter><r>" and return r+1.
int header_var_count(const std::string& tok, const std::string& key,
                     char letter) {
  std::string want = key + "=" + letter + "0..";
  if (tok.rfind(want, 0) != 0 || tok.size() <= want.size() ||
      tok[want.size()] != letter)
    throw DomainError("header: expected " + key + "=" + letter + "0.." +
                      letter + "<r> but got: " + tok);
  int r = std::stoi(tok.substr(want.size() + 1));
  if (r < 0 || r > 1000) throw DomainError("header: bad variable range: " + tok);
  return r + 1;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

IdealFileData parse_ideal_text(const std::string& text) {
  std::vector<std::string> lines = content_lines(text);
  if (lines.empty()) throw DomainError("ideal file: empty");
  std::vector<std::string> head = split_ws(lines[0]);
  if (head.size() != 3 || head[0] != "ring")
    throw DomainError("ideal file: bad header: " + lines[0]);
  long long p = header_int(head[1], "char");
  int nvars = header_var_count(head[2], "vars", 'x');
  IdealFileData d;
  d.ring = Ring(Fp(uint32_t(p)), nvars);
  for (size_t i = 1; i < lines.size(); ++i) {
    Poly f = parse_poly(d.ring, lines[i]);
    if (!f.zero()) d.gens.push_back(std::move(f));
  }
  return d;
}

IdealFileData read_ideal_file(const std::string& path) {
  return parse_ideal_text(slurp_file(path));
}

std::string ideal_to_text(const Ideal& I, bool canonical, const Caps& caps) {
  const Ring& R = I.ring();
  std::ostringstream os;
  os << "ring char=" << R.F.p() << " vars=x0..x" << (R.nvars - 1) << "\n";
  if (canonical) {
    auto gb = I.groebner(Order::grevlex(), caps);
    for (const Poly& g : gb->g) os << poly_to_string(R, g) << "\n";
  } else {
    for (const Poly& g : I.gens()) os << poly_to_string(R, g) << "\n";
  }
  return os.str();
}

void write_ideal_file(const std::string& path, const Ideal& I, bool canonical,
                      const Caps& caps) {
  spew_file(path, ideal_to_text(I, canonical, caps));
}

std::string param_to_text(const Parametrization& P) {
  if (!P.valid()) throw DomainError("param_to_text: invalid parametrization");
  std::ostringstream os;
  os << "param char=" << P.source.F.p() << " source=y0..y"
     << (P.source.nvars - 1) << " target=x0..x" << (P.target_nvars() - 1)
     << "\n";
  for (size_t i = 0; i < P.comps.size(); ++i)
    os << "x" << i << " = " << poly_to_string(P.source, P.comps[i], 'y')
       << "\n";
  for (const Poly& c : P.constraints)
    os << "constraint " << poly_to_string(P.source, c, 'y') << "\n";
  return os.str();
}

Parametrization parse_param_text(const std::string& text) {
  std::vector<std::string> lines = content_lines(text);
  if (lines.empty()) throw DomainError("param file: empty");
  std::vector<std::string> head = split_ws(lines[0]);
  if (head.size() != 4 || head[0] != "param")
    throw DomainError("param file: bad header: " + lines[0]);
  long long p = header_int(head[1], "char");
  int src_vars = header_var_count(head[2], "source", 'y');
  int tgt_vars = header_var_count(head[3], "target", 'x');
  Parametrization P;
  P.source = Ring(Fp(uint32_t(p)), src_vars);
  P.comps.assign(size_t(tgt_vars), Poly(src_vars));
  std::vector<bool> seen(size_t(tgt_vars), false);
  for (size_t li = 1; li < lines.size(); ++li) {
    const std::string& s = lines[li];
    if (s.rfind("constraint ", 0) == 0) {
      P.constraints.push_back(parse_poly(P.source, s.substr(11), 'y'));
      continue;
    }
    size_t eq = s.find('=');
    if (eq == std::string::npos || s.empty() || s[0] != 'x')
      throw DomainError("param file: bad line: " + s);
    int idx = std::stoi(s.substr(1, eq - 1));
    if (idx < 0 || idx >= tgt_vars || seen[size_t(idx)])
      throw DomainError("param file: bad or repeated coordinate: " + s);
    seen[size_t(idx)] = true;
    P.comps[size_t(idx)] = parse_poly(P.source, s.substr(eq + 1), 'y');
  }
  for (int i = 0; i < tgt_vars; ++i)
    if (!seen[size_t(i)])
      throw DomainError("param file: missing coordinate x" +
                        std::to_string(i));
  return P;
}

Parametrization read_param_file(const std::string& path) {
  return parse_param_text(slurp_file(path));
}

void write_param_file(const std::string& path, const Parametrization& P) {
  spew_file(path, param_to_text(P));
}

std::string point_to_string(const std::vector<uint32_t>& pt) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < pt.size(); ++i) {
    if (i) os << ":";
    os << pt[i];
  }
  os << ")";
  return os.str();
}

std::vector<uint32_t> parse_point(const Fp& F, const std::string& text) {
  std::string s = clean_line(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw DomainError("point: expected (a0:a1:...:ar), got: " + text);
  s = s.substr(1, s.size() - 2);
  std::vector<uint32_t> out;
  std::istringstream is(s);
  std::string part;
  while (std::getline(is, part, ':')) {
    std::string w = clean_line(part);
    if (w.empty()) throw DomainError("point: empty coordinate in: " + text);
    bool neg = false;
    size_t i = 0;
    if (w[0] == '+' || w[0] == '-') {
      neg = w[0] == '-';
      i = 1;
    }
    if (i >= w.size()) throw DomainError("point: bad coordinate in: " + text);
    uint64_t m = 0;
    for (; i < w.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(w[i])))
        throw DomainError("point: bad coordinate in: " + text);
      m = (m * 10 + uint64_t(w[i] - '0')) % F.p();
    }
    out.push_back(neg ? F.neg(uint32_t(m)) : uint32_t(m));
  }
  if (out.empty()) throw DomainError("point: no coordinates in: " + text);
  bool all_zero = true;
  for (uint32_t c : out) all_zero = all_zero && c == 0;
  if (all_zero) throw DomainError("point: all coordinates are zero: " + text);
  return out;
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spew_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw DomainError("write failed: " + path);
}

}  // namespace sforge
