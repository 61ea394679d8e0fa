#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orthomono/error.hpp"
#include "orthomono/io.hpp"
#include "orthomono/monomial.hpp"
#include "orthomono/sweep.hpp"
#include "orthomono/wreath.hpp"

namespace orthomono::cli {

/// Short machine-readable reason for a failure.
inline std::string reason_of(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::HypothesisViolated: return e.what();
    case ErrorKind::Characteristic2: return "characteristic 2";
    case ErrorKind::EvenDimension: return "dimension even";
    case ErrorKind::DegenerateForm: return "degenerate form";
    case ErrorKind::NotSolvable: return "not solvable";
    case ErrorKind::NotIrreducible: return "not irreducible";
    case ErrorKind::NotIsometry: return "generators are not isometries";
    default: return to_string(e.kind());
  }
}

struct Options {
  std::uint64_t bound = kDefaultEnumerationBound;
  bool no_form = false;
  bool explain = false;
  bool long_mode = false;
  bool seedless = false;
};

inline GroupFile read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  return parse_group_file(in);
}

/// Group and form from a parsed file. With no_form the form is derived from
/// the invariant symmetric forms of the group instead of read from the file.
inline std::pair<MatrixGroup, QuadraticSpace> load(const GroupFile& file, const Options& opt) {
  MatrixGroup g = make_matrix_group(file.field, file.dim, file.gens, opt.bound);
  if (opt.no_form) {
    const auto forms = invariant_symmetric_forms(g);
    auto b = nondegenerate_member(forms, file.field, file.dim, opt.bound);
    if (!b) throw Error(ErrorKind::HypothesisViolated, "no invariant nondegenerate form");
    return {std::move(g), QuadraticSpace(std::move(*b))};
  }
  if (!file.gram) throw Error(ErrorKind::ParseError, "missing 'gram' (use --no-form to derive one)");
  if (*file.gram != file.gram->transpose()) throw Error(ErrorKind::ParseError, "gram matrix is not symmetric");
  return {std::move(g), QuadraticSpace(*file.gram)};
}

inline int cmd_analyze(const std::string& path, const Options& opt, std::ostream& out) {
  const GroupFile file = read_group_file(path);
  const auto [g, s] = load(file, opt);
  const auto failures = hypothesis_failures(g, s);
  if (!failures.empty()) {
    out << "status: hypothesis-violated\n";
    if (opt.explain) {
      for (const auto& r : failures) out << "reason: " << r << '\n';
    } else {
      out << "reason: " << failures.front() << '\n';
    }
    return exit_code(FailureClass::Hypothesis);
  }
  const MonomialCertificate cert = monomialize(g, s);
  const CertificateCheck chk = check_certificate(cert, g);
  out << write_certificate(cert, chk.ok);
  if (!chk.ok) {
    out << "failure: " << chk.failure << '\n';
    return exit_code(FailureClass::Invariant);
  }
  return 0;
}

inline int cmd_check_theorem(std::size_t n, std::uint64_t q, const Options& opt, std::ostream& out) {
  const TheoremReport r = check_theorem(n, q, opt.bound);
  out << "n " << r.n << " q " << r.q << '\n';
  out << "ambient order " << r.ambient_order << (r.ambient_solvable ? " solvable" : " not solvable") << '\n';
  out << "solvable classes " << r.solvable_classes << '\n';
  out << "irreducible classes " << r.irreducible_classes << '\n';
  out << "certified " << r.certified << '\n';
  out << "component cross-checks " << r.cross_checks << " mismatches " << r.cross_mismatches << '\n';
  out << "determinant checks " << r.determinant_checks << " violations " << r.determinant_violations << '\n';
  for (const auto& f : r.failures) out << "failure: " << f << '\n';
  out << "result: " << (r.passed() ? "pass" : "fail") << '\n';
  return r.passed() ? 0 : exit_code(FailureClass::Invariant);
}

/// "S", "C", "1" or generators like "(1,2,3);(1,2)".
inline PermGroup parse_kspec(const std::string& spec, std::size_t n) {
  if (spec == "S") return symmetric_perm_group(n);
  if (spec == "1") return make_perm_group(n, {});
  if (spec == "C") {
    std::vector<std::uint16_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint16_t>((i + 1) % n);
    return make_perm_group(n, {Perm(c)});
  }
  std::vector<Perm> gens;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t i = 0;
    while (i < item.size()) {
      if (item[i] != '(') throw Error(ErrorKind::ParseError, "bad permutation '" + item + "'");
      const auto j = item.find(')', i);
      if (j == std::string::npos) throw Error(ErrorKind::ParseError, "bad permutation '" + item + "'");
      std::vector<std::size_t> cyc;
      std::stringstream cs(item.substr(i + 1, j - i - 1));
      std::string num;
      while (std::getline(cs, num, ',')) {
        const long long v = detail::parse_int(num, 0);
        if (v < 1 || v > static_cast<long long>(n)) throw Error(ErrorKind::ParseError, "point out of range in '" + item + "'");
        cyc.push_back(static_cast<std::size_t>(v));
      }
      cycles.push_back(std::move(cyc));
      i = j + 1;
    }
    gens.push_back(Perm::from_cycles(n, cycles));
  }
  return make_perm_group(n, std::move(gens));
}

inline int cmd_wreath(std::size_t n, std::uint64_t q, const std::string& kspec, long long c, const Options& opt,
                      std::ostream& out) {
  const Field f = gf(q, 1);
  const QuadraticSpace s(Matrix::scalar(f, n, f.from_int(c)));
  const WreathSpec w = wreath_construct(parse_kspec(kspec, n), s, opt.bound);
  GroupFile file{f, n, false, s.gram(), w.group.generators()};
  out << "# O_1 wr K, |K| = " << w.k.order() << ", order " << w.group.order() << '\n';
  out << write_group_file(file);
  return 0;
}

inline int cmd_maximal(std::size_t n, std::optional<std::uint64_t> q, bool list_only, const Options& opt,
                       std::ostream& out) {
  const auto classes = transitive_solvable_subgroups(n);
  std::size_t maximal = 0;
  out << "transitive solvable classes " << classes.size() << '\n';
  for (const auto& c : classes) {
    out << "order " << c.order << " conjugates " << c.conjugates << (c.maximal ? " maximal" : "") << " gens";
    for (const auto& g : c.group.generators()) out << ' ' << g.to_string();
    out << '\n';
    if (c.maximal) ++maximal;
  }
  out << "maximal classes " << maximal << '\n';
  if (list_only || !q) return 0;
  if (n > 5 || (n == 5 && (!opt.long_mode || *q != 3)))
    throw Error(ErrorKind::BoundExceeded, "maximality sweep runs for n = 3, or n = 5 with q = 3 and --long");
  const Field f = gf(*q, 1);
  const QuadraticSpace s = QuadraticSpace::standard(f, n);
  const MatrixGroup ambient = orthogonal_group(s, opt.bound);
  bool all = true;
  for (const auto& c : classes) {
    if (!c.maximal) continue;
    const WreathSpec w = wreath_construct(c.group, s, opt.bound);
    const MaximalityResult r = maximality_check(w, ambient);
    out << "maximality K order " << c.order << " over " << f.name() << ": " << (r.maximal ? "true" : "false")
        << " (ambient order " << r.ambient_order << ", double cosets tried " << r.extensions_checked << ")\n";
    if (!r.maximal) {
      all = false;
      out << "counterexample order " << r.counterexample->order() << '\n';
    }
  }
  return all ? 0 : exit_code(FailureClass::Invariant);
}

inline int cmd_verify(const std::string& group_path, const std::string& cert_path, const Options& opt,
                      std::ostream& out) {
  const GroupFile file = read_group_file(group_path);
  const auto [g, s] = load(file, opt);
  std::ifstream in(cert_path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + cert_path);
  const ParsedCertificate pc = parse_certificate(in, s);
  const CertificateCheck chk = check_certificate(pc.certificate, g);
  out << "elements checked " << chk.elements_checked << '\n';
  if (!chk.ok) out << "failure: " << chk.failure << '\n';
  out << "verified: " << (chk.ok ? "true" : "false") << '\n';
  return chk.ok ? 0 : exit_code(FailureClass::Invariant);
}

/// Entry point; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monomial certificates for solvable irreducible orthogonal groups over GF(q)"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--bound", opt.bound, "Element cap for group enumeration");
  app.add_flag("--no-form", opt.no_form, "Derive an invariant form instead of reading 'gram'");
  app.add_flag("--explain", opt.explain, "List every failed hypothesis");
  app.add_flag("--long", opt.long_mode, "Allow the n=5, q=3 maximality sweep");
  app.add_flag("--seedless", opt.seedless, "Assert that no randomized path is taken");

  std::string path, cert_path, kspec = "S";
  std::size_t n = 3;
  std::uint64_t q = 3;
  std::optional<std::uint64_t> mq;
  long long scalar = 1;
  bool list_only = false;

  auto* analyze = app.add_subcommand("analyze", "Monomialize the group in a group file");
  analyze->add_option("file", path, "Group file")->required();
  auto* theorem = app.add_subcommand("check-theorem", "Sweep all solvable irreducible subgroups of O_n(q)");
  theorem->add_option("--n", n, "Dimension")->required();
  theorem->add_option("--q", q, "Field order (prime)")->required();
  auto* wreath = app.add_subcommand("wreath", "Emit the group file of O_1 wr K");
  wreath->add_option("--n", n, "Degree")->required();
  wreath->add_option("--q", q, "Field order (prime)")->required();
  wreath->add_option("--k", kspec, "S, C, 1, or generators like (1,2,3);(1,2)");
  wreath->add_option("--scalar", scalar, "Gram matrix is scalar * I");
  auto* maximal = app.add_subcommand("maximal", "Transitive solvable classes and maximality sweeps");
  maximal->add_option("--n", n, "Degree")->required();
  maximal->add_option("--q", mq, "Field order for the maximality sweep");
  maximal->add_flag("--list", list_only, "Only list the classes");
  auto* verify = app.add_subcommand("verify", "Re-check a certificate against a group file");
  verify->add_option("group", path, "Group file")->required();
  verify->add_option("certificate", cert_path, "Certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_code(FailureClass::Usage);
  }
  if (opt.seedless) err << "seedless: every path is deterministic\n";
  try {
    if (*analyze) return cmd_analyze(path, opt, out);
    if (*theorem) return cmd_check_theorem(n, q, opt, out);
    if (*wreath) return cmd_wreath(n, q, kspec, scalar, opt, out);
    if (*maximal) return cmd_maximal(n, mq, list_only, opt, out);
    if (*verify) return cmd_verify(path, cert_path, opt, out);
  } catch (const Error& e) {
    out << "status: " << to_string(e.kind()) << '\n';
    out << "reason: " << reason_of(e) << '\n';
    err << "error: " << e.what() << '\n';
    return exit_code(failure_class(e.kind()));
  }
  return exit_code(FailureClass::Usage);
}

}  // namespace orthomono::cli
