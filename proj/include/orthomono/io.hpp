#pragma once

#include <cctype>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orthomono/error.hpp"
#include "orthomono/form.hpp"
#include "orthomono/group.hpp"
#include "orthomono/matrix.hpp"
#include "orthomono/monomial.hpp"
#include "orthomono/poly.hpp"

namespace orthomono {

/// Parsed group file: field, optional Gram matrix, generators.
struct GroupFile {
  Field field;
  std::size_t dim = 0;
  bool explicit_modulus = false;
  std::optional<Matrix> gram;
  std::vector<Matrix> gens;
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Splits into tokens; a parenthesized group "(a b c)" is one token.
inline std::vector<std::string> tokenize(const std::string& s, std::size_t lineno) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] == '(') {
      const auto j = s.find(')', i);
      if (j == std::string::npos) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": unbalanced '('");
      out.push_back(s.substr(i, j - i + 1));
      i = j + 1;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '(') ++j;
    out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    auto t = tokenize(raw, no);
    if (!t.empty()) out.push_back({no, std::move(t)});
  }
  return out;
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& m) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + m);
}

inline long long parse_int(const std::string& s, std::size_t line) {
  if (s.empty()) parse_fail(line, "empty number");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    parse_fail(line, "expected an integer, got '" + s + "'");
  }
  if (pos != s.size()) parse_fail(line, "expected an integer, got '" + s + "'");
  return v;
}

inline Elt parse_residue(const Field& f, const std::string& s, std::size_t line) {
  const long long p = f.characteristic();
  auto residue = [&](const std::string& t) {
    const long long v = parse_int(t, line);
    if (v < 0 || v >= p) parse_fail(line, "residue " + t + " is outside [0, " + std::to_string(p) + ")");
    return v;
  };
  if (s.front() == '(') {
    std::istringstream is(s.substr(1, s.size() - 2));
    std::vector<long long> c;
    std::string t;
    while (is >> t) c.push_back(residue(t));
    if (c.size() != f.degree())
      parse_fail(line, "extension entry needs " + std::to_string(f.degree()) + " residues, got " + std::to_string(c.size()));
    return f.from_coeffs(c);
  }
  return static_cast<Elt>(residue(s));
}

inline std::size_t parse_key(const std::string& tok, const std::string& key, std::size_t line) {
  if (tok.rfind(key + "=", 0) != 0) parse_fail(line, "expected " + key + "=<int>");
  const long long v = parse_int(tok.substr(key.size() + 1), line);
  if (v <= 0) parse_fail(line, key + " must be positive");
  return static_cast<std::size_t>(v);
}

inline Matrix parse_rows(const Field& f, std::size_t n, const std::vector<Line>& lines, std::size_t& i,
                         const std::string& what) {
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r, ++i) {
    if (i >= lines.size()) parse_fail(lines.empty() ? 0 : lines.back().number, what + " needs " + std::to_string(n) + " rows");
    const auto& l = lines[i];
    if (l.tokens.size() != n) parse_fail(l.number, what + " row needs " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_residue(f, l.tokens[c], l.number);
  }
  return m;
}

}  // namespace detail

/// Line-oriented grammar:
///   field p=<prime> k=<int>
///   modulus c0 c1 ... ck        (optional, low to high)
///   dim n
///   gram                        (optional) then n rows
///   gen                         then n rows, repeated
inline GroupFile parse_group_file(std::istream& in) {
  const auto lines = detail::read_lines(in);
  GroupFile g;
  std::optional<std::uint64_t> p;
  std::uint32_t k = 1;
  std::optional<std::vector<long long>> modulus;
  bool field_ready = false;
  auto ensure_field = [&](std::size_t line) {
    if (field_ready) return;
    if (!p) detail::parse_fail(line, "missing 'field' line");
    g.field = modulus ? gf_with_modulus(*p, *modulus) : gf(*p, k);
    if (g.field.degree() != k) detail::parse_fail(line, "modulus degree differs from k");
    field_ready = true;
  };
  for (std::size_t i = 0; i < lines.size();) {
    const auto& l = lines[i];
    const auto& kw = l.tokens[0];
    if (kw == "field") {
      if (p) detail::parse_fail(l.number, "duplicate 'field' line");
      if (l.tokens.size() < 2 || l.tokens.size() > 3) detail::parse_fail(l.number, "expected: field p=<prime> k=<int>");
      p = detail::parse_key(l.tokens[1], "p", l.number);
      if (l.tokens.size() == 3) k = static_cast<std::uint32_t>(detail::parse_key(l.tokens[2], "k", l.number));
      if (!detail::is_prime(*p)) detail::parse_fail(l.number, "p=" + std::to_string(*p) + " is not prime");
      // characteristic 2 is rejected here, before anything else is read
      detail::validate_characteristic(*p);
      ++i;
    } else if (kw == "modulus") {
      if (field_ready) detail::parse_fail(l.number, "'modulus' must come before the matrices");
      std::vector<long long> c;
      for (std::size_t t = 1; t < l.tokens.size(); ++t) c.push_back(detail::parse_int(l.tokens[t], l.number));
      modulus = std::move(c);
      g.explicit_modulus = true;
      ++i;
    } else if (kw == "dim") {
      if (l.tokens.size() != 2) detail::parse_fail(l.number, "expected: dim <n>");
      const long long n = detail::parse_int(l.tokens[1], l.number);
      if (n <= 0) detail::parse_fail(l.number, "dimension must be positive");
      g.dim = static_cast<std::size_t>(n);
      ++i;
    } else if (kw == "gram" || kw == "gen") {
      if (l.tokens.size() != 1) detail::parse_fail(l.number, "'" + kw + "' takes no arguments");
      if (g.dim == 0) detail::parse_fail(l.number, "'dim' must come before '" + kw + "'");
      ensure_field(l.number);
      ++i;
      Matrix m = detail::parse_rows(g.field, g.dim, lines, i, kw);
      if (kw == "gram") {
        if (g.gram) detail::parse_fail(l.number, "duplicate 'gram'");
        g.gram = std::move(m);
      } else {
        g.gens.push_back(std::move(m));
      }
    } else {
      detail::parse_fail(l.number, "unknown keyword '" + kw + "'");
    }
  }
  if (!p) detail::parse_fail(0, "missing 'field' line");
  if (g.dim == 0) detail::parse_fail(0, "missing 'dim' line");
  ensure_field(0);
  for (std::size_t i = 0; i < g.gens.size(); ++i)
    if (det(g.gens[i]) == 0) detail::parse_fail(0, "generator " + std::to_string(i + 1) + " is not invertible");
  return g;
}

inline GroupFile parse_group_file(const std::string& text) {
  std::istringstream is(text);
  return parse_group_file(is);
}

inline std::string format_matrix_rows(const Matrix& m) {
  std::ostringstream os;
  const Field f = m.field();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << f.format(m(i, j));
    os << '\n';
  }
  return os.str();
}

inline std::string write_group_file(const GroupFile& g) {
  std::ostringstream os;
  os << "field p=" << g.field.characteristic() << " k=" << g.field.degree() << '\n';
  if (g.field.degree() > 1) {
    os << "modulus";
    for (auto c : g.field.modulus()) os << ' ' << c;
    os << '\n';
  }
  os << "dim " << g.dim << '\n';
  if (g.gram) os << "gram\n" << format_matrix_rows(*g.gram);
  for (const auto& m : g.gens) os << "gen\n" << format_matrix_rows(m);
  return os.str();
}

inline std::string format_vector(const Field& f, const Vector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << f.format(v[i]);
  return os.str();
}

/// Structured text: basis, scalar, perm+signs, transport, verified.
inline std::string write_certificate(const MonomialCertificate& c, std::optional<bool> verified) {
  const Field f = c.space.field();
  std::ostringstream os;
  os << "certificate\n";
  os << "field p=" << f.characteristic() << " k=" << f.degree() << '\n';
  os << "dim " << c.space.dim() << '\n';
  os << "basis\n";
  for (const auto& w : c.basis) os << format_vector(f, w) << '\n';
  os << "scalar " << c.scalar.to_string() << '\n';
  os << "perm+signs\n";
  for (std::size_t k = 0; k < c.generator_images.size(); ++k) {
    const auto& sp = c.generator_images[k];
    os << "gen " << k + 1 << " perm";
    for (auto x : sp.perm) os << ' ' << x + 1;
    os << " signs";
    for (auto s : sp.signs) os << ' ' << (s > 0 ? '+' : '-');
    os << '\n';
  }
  os << "transport\n";
  for (std::size_t lv = 0; lv < c.transport.size(); ++lv) {
    const auto& t = c.transport[lv];
    os << "level " << lv + 1 << " dim " << t.dim << " parts " << t.words.size() << '\n';
    for (std::size_t i = 0; i < t.words.size(); ++i) {
      os << "part " << i + 1 << " word";
      if (t.words[i].empty()) os << " -";
      for (auto x : t.words[i]) os << ' ' << x + 1;
      os << '\n';
    }
  }
  if (verified) os << "verified: " << (*verified ? "true" : "false") << '\n';
  return os.str();
}

struct ParsedCertificate {
  MonomialCertificate certificate;
  std::optional<bool> verified;
};

/// Reads a certificate back against the space it claims to describe.
inline ParsedCertificate parse_certificate(std::istream& in, const QuadraticSpace& s) {
  const auto lines = detail::read_lines(in);
  const Field f = s.field();
  const std::size_t n = s.dim();
  ParsedCertificate out{{s, {}, FieldElem(f, 0), {}, {}}, std::nullopt};
  auto& c = out.certificate;
  bool have_scalar = false;
  for (std::size_t i = 0; i < lines.size();) {
    const auto& l = lines[i];
    const auto& kw = l.tokens[0];
    if (kw == "certificate") {
      ++i;
    } else if (kw == "field") {
      if (l.tokens.size() != 3 || detail::parse_key(l.tokens[1], "p", l.number) != f.characteristic() ||
          detail::parse_key(l.tokens[2], "k", l.number) != f.degree())
        detail::parse_fail(l.number, "certificate field differs from the group file");
      ++i;
    } else if (kw == "dim") {
      if (l.tokens.size() != 2 || detail::parse_int(l.tokens[1], l.number) != static_cast<long long>(n))
        detail::parse_fail(l.number, "certificate dimension differs from the group file");
      ++i;
    } else if (kw == "basis") {
      ++i;
      for (std::size_t r = 0; r < n; ++r, ++i) {
        if (i >= lines.size() || lines[i].tokens.size() != n) detail::parse_fail(l.number, "basis needs n rows of n entries");
        Vector v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = detail::parse_residue(f, lines[i].tokens[j], lines[i].number);
        c.basis.push_back(std::move(v));
      }
    } else if (kw == "scalar") {
      if (l.tokens.size() != 2) detail::parse_fail(l.number, "expected: scalar <c>");
      c.scalar = FieldElem(f, detail::parse_residue(f, l.tokens[1], l.number));
      have_scalar = true;
      ++i;
    } else if (kw == "perm+signs") {
      ++i;
      while (i < lines.size() && lines[i].tokens[0] == "gen") {
        const auto& t = lines[i].tokens;
        const std::size_t no = lines[i].number;
        if (t.size() != 2 * n + 4 || t[2] != "perm" || t[3 + n] != "signs") detail::parse_fail(no, "malformed generator image");
        SignedPerm sp;
        for (std::size_t j = 0; j < n; ++j) {
          const long long x = detail::parse_int(t[3 + j], no);
          if (x < 1 || x > static_cast<long long>(n)) detail::parse_fail(no, "permutation entry out of range");
          sp.perm.push_back(static_cast<std::size_t>(x - 1));
          const auto& sg = t[4 + n + j];
          if (sg != "+" && sg != "-") detail::parse_fail(no, "sign must be + or -");
          sp.signs.push_back(sg == "+" ? 1 : -1);
        }
        c.generator_images.push_back(std::move(sp));
        ++i;
      }
    } else if (kw == "transport") {
      ++i;
      while (i < lines.size() && lines[i].tokens[0] == "level") {
        const auto& t = lines[i].tokens;
        if (t.size() != 6) detail::parse_fail(lines[i].number, "malformed transport level");
        TransportLevel lv;
        lv.dim = static_cast<std::size_t>(detail::parse_int(t[3], lines[i].number));
        const auto parts = static_cast<std::size_t>(detail::parse_int(t[5], lines[i].number));
        ++i;
        for (std::size_t pi = 0; pi < parts; ++pi, ++i) {
          if (i >= lines.size() || lines[i].tokens[0] != "part") detail::parse_fail(lines.back().number, "missing transport part");
          std::vector<std::size_t> w;
          for (std::size_t j = 3; j < lines[i].tokens.size(); ++j) {
            if (lines[i].tokens[j] == "-") continue;
            w.push_back(static_cast<std::size_t>(detail::parse_int(lines[i].tokens[j], lines[i].number) - 1));
          }
          lv.words.push_back(std::move(w));
        }
        c.transport.push_back(std::move(lv));
      }
    } else if (kw == "verified:") {
      if (l.tokens.size() != 2 || (l.tokens[1] != "true" && l.tokens[1] != "false"))
        detail::parse_fail(l.number, "expected: verified: true|false");
      out.verified = l.tokens[1] == "true";
      ++i;
    } else {
      detail::parse_fail(l.number, "unknown keyword '" + kw + "'");
    }
  }
  if (c.basis.size() != n) detail::parse_fail(0, "missing basis");
  if (!have_scalar) detail::parse_fail(0, "missing scalar");
  return out;
}

}  // namespace orthomono
