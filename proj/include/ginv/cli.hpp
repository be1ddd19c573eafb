#pragma once

#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ginv/checks.hpp"
#include "ginv/decompositions.hpp"
#include "ginv/io.hpp"
#include "ginv/m_weak_group.hpp"
#include "ginv/suite.hpp"

namespace ginv::cli {

// 1: infrastructure (I/O, parse, usage), 2: mathematical precondition,
// 3: a verified statement failed, 4: hypotheses of a law did not hold.
enum ExitStatus : int {
  kOk = 0,
  kError = 1,
  kPrecondition = 2,
  kCheckFailed = 3,
  kHypothesisViolated = 4,
};

inline int exit_status(Verdict v) {
  switch (v) {
    case Verdict::Pass: return kOk;
    case Verdict::Fail: return kCheckFailed;
    case Verdict::HypothesisViolated: return kHypothesisViolated;
  }
  return kError;
}

inline const std::vector<std::string>& compute_kinds() {
  static const std::vector<std::string> kinds{"mp", "group", "drazin", "coreep", "wg", "mwg", "gg"};
  return kinds;
}

struct ComputeOptions {
  std::string kind;
  std::optional<std::size_t> m;
  std::string input;
  std::string output;
};

namespace detail {

struct Verification {
  std::string description;  // the defining equations that were checked
  std::optional<std::string> failed;  // first equation that did not hold
};

inline Verification verify_computed(const std::string& kind, const CMatrix& a, const CMatrix& x, std::size_t m) {
  const auto from_check = [](const CheckResult& r) {
    return Verification{r.reference, r.witness ? std::optional<std::string>(r.witness->condition) : std::nullopt};
  };
  if (kind == "wg") return from_check(check_weak_group_definition(a, x));
  if (kind == "mwg") return from_check(check_mwg_definition(a, x, m));

  Verification v;
  const auto need = [&](const std::string& cond, bool ok) {
    v.description += (v.description.empty() ? "" : ", ") + cond;
    if (!ok && !v.failed) v.failed = cond;
  };
  if (kind == "mp") {
    const CMatrix ax = a * x, xa = x * a;
    need("A X A = A", ax * a == a);
    need("X A X = X", x * ax == x);
    need("(A X)* = A X", ax.adjoint() == ax);
    need("(X A)* = X A", xa.adjoint() == xa);
    return v;
  }
  const std::size_t k = matrix_index(a);
  const CMatrix ak = power(a, k);
  if (kind == "group" || kind == "drazin") {
    need("A X^2 = X", a * x * x == x);
    need("A X = X A", a * x == x * a);
    need("X A^(k+1) = A^k", x * ak * a == ak);
  } else if (kind == "coreep") {
    const CMatrix ax = a * x;
    need("A X^2 = X", ax * x == x);
    need("(A X)* = A X", ax.adjoint() == ax);
    need("X A^(k+1) = A^k", x * ak * a == ak);
  } else if (kind == "gg") {
    const CMatrix ce = core_ep(a);
    need("A X^2 = X", a * x * x == x);
    need("A X = (A^⊕)^2 A^2", a * x == ce * ce * a * a);
    need("R(X) = R(A^k)", range_equal(x, ak));
  }
  return v;
}

} // namespace detail

inline int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    if (opt.kind == "mwg" && !opt.m) {
      err << "error: compute mwg requires --m\n";
      return kError;
    }
    if (opt.m && *opt.m == 0) {
      err << "error: --m must be positive\n";
      return kError;
    }
    const CMatrix a = io::parse_matrix_file(opt.input);
    if (opt.kind != "mp" && !a.is_square()) {
      err << "error: " << opt.input << ": expected a square matrix, got " << a.shape() << "\n";
      return kError;
    }
    CMatrix x;
    if (opt.kind == "mp") x = moore_penrose(a);
    else if (opt.kind == "group") x = group_inverse(a);
    else if (opt.kind == "drazin") x = drazin(a);
    else if (opt.kind == "coreep") x = core_ep(a);
    else if (opt.kind == "wg") x = weak_group(a);
    else if (opt.kind == "mwg") x = m_weak_group_agreed(a, *opt.m);
    else if (opt.kind == "gg") x = gg_inverse(a);
    else {
      err << "error: unknown kind '" << opt.kind << "'\n";
      return kError;
    }
    io::write_matrix_file(opt.output, x);
    const auto v = detail::verify_computed(opt.kind, a, x, opt.m.value_or(1));
    if (v.failed) {
      out << "verification: fail (" << *v.failed << ")\n";
      return kCheckFailed;
    }
    out << "verification: pass (" << v.description << ")\n";
    return kOk;
  } catch (const NotGroupInvertible& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

struct VerifyOptions {
  std::string check;
  std::string input;
  std::optional<std::string> x;
  std::optional<std::string> y;
  std::optional<std::string> b;
  std::size_t m = 1;
  std::optional<std::size_t> n;
};

inline std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& info : kCheckRegistry) names.emplace_back(info.name);
  return names;
}

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  bool known = false;
  for (const auto& info : kCheckRegistry) known = known || info.name == opt.check;
  if (!known) {
    err << "error: unknown check '" << opt.check << "'; valid checks:";
    for (const auto& name : check_names()) err << ' ' << name;
    err << "\n";
    return kError;
  }
  if (opt.m == 0) {
    err << "error: --m must be positive\n";
    return kError;
  }
  try {
    const CMatrix a = io::parse_matrix_file(opt.input);
    const auto load = [](const std::optional<std::string>& p) -> std::optional<CMatrix> {
      if (!p) return std::nullopt;
      return io::parse_matrix_file(*p);
    };
    const auto x = load(opt.x);
    const auto y = load(opt.y);
    const auto b = load(opt.b);
    const bool needs_square = opt.check != "penrose";
    if (needs_square && !a.is_square()) {
      err << "error: " << opt.input << ": expected a square matrix, got " << a.shape() << "\n";
      return kError;
    }
    const std::size_t m = opt.m;
    const auto need_b = [&]() -> const CMatrix& {
      if (!b) throw ArgumentError(opt.check + " requires --b");
      return *b;
    };

    CheckResult r;
    const std::string& name = opt.check;
    if (name == "mwg-definition") r = check_mwg_definition(a, x ? *x : m_weak_group(a, m), m);
    else if (name == "weak-group-definition") r = check_weak_group_definition(a, x ? *x : weak_group(a));
    else if (name == "decomposition") {
      MwgDecomposition<GaussianRational> d = x ? MwgDecomposition<GaussianRational>{m, *x, y ? *y : a - *x}
                                                : mwg_decompose(a, m);
      if (!x && y) d.y = *y;
      r = check_decomposition(a, d);
    } else if (name == "relaxed-systems") r = check_relaxed_systems(a, m);
    else if (name == "polar") r = check_polar(a, m);
    else if (name == "additive-law") r = check_laws(LawKind::Additive, a, need_b(), m);
    else if (name == "product-law") r = check_laws(LawKind::Product, a, need_b(), m);
    else if (name == "blocks-commutation") r = check_blocks_and_commutation(a, m, opt.n.value_or(m + 1));
    else if (name == "path-agreement") r = check_path_agreement(a, m);
    else if (name == "identities") r = check_identities(a, m);
    else if (name == "double-inverse") r = check_double_inverse(a, m);
    else if (name == "triple-inverse") r = check_triple_inverse(a, m);
    else if (name == "weak-group-of-inverse") r = check_weak_group_of_inverse(a, m);
    else if (name == "core-ep-equivalence") r = check_core_ep_equivalence(a, m);
    else if (name == "power-reduction") r = check_power_reduction(a, m);
    else if (name == "gg-inverse") r = check_gg_inverse(a);
    else if (name == "m1-reduction") r = check_m1_reduction(a);
    else if (name == "penrose") r = check_penrose(a);
    else if (name == "drazin-definition") r = check_drazin_definition(a);
    else if (name == "reduction-coherence") r = check_reduction_coherence(a, m);
    else if (name == "cline-formula") r = check_cline_formula(a, m);

    out << io::to_json(r).dump(2) << "\n";
    return exit_status(r.verdict);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

struct DecomposeOptions {
  std::string input;
  std::size_t m = 1;
  std::string output_x;
  std::string output_y;
};

inline int cmd_decompose(const DecomposeOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    if (opt.m == 0) throw ArgumentError("--m must be positive");
    const CMatrix a = io::parse_matrix_file(opt.input);
    const auto d = mwg_decompose(a, opt.m);
    io::write_matrix_file(opt.output_x, d.x);
    io::write_matrix_file(opt.output_y, d.y);
    const auto r = check_decomposition(a, d);
    out << "verification: " << to_string(r.verdict) << " (" << r.reference << ")\n";
    return exit_status(r.verdict);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

struct BlocksOptions {
  std::string input;
  std::size_t m = 1;
  std::string output;
};

inline int cmd_blocks(const BlocksOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    if (opt.m == 0) throw ArgumentError("--m must be positive");
    const CMatrix a = io::parse_matrix_file(opt.input);
    const auto b = pierce_blocks(a, opt.m);
    const CMatrix x = mwg_from_blocks(b, opt.m);
    io::write_atomic(opt.output, io::to_json(b, opt.m, x).dump(2) + "\n");
    const bool agrees = x == m_weak_group(a, opt.m);
    out << "verification: " << (agrees ? "pass" : "fail") << " (block form = (A^⊕)^(m+1) A^m)\n";
    return agrees ? kOk : kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

struct HarnessOptions {
  std::size_t trials = 1;
  std::size_t dim_max = 1;
  std::size_t index_max = 0;
  std::vector<std::size_t> ms{1};
  std::uint64_t seed = 0;
  std::uint64_t entry_bound = 3;
  std::string report;
};

inline int cmd_harness(const HarnessOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    if (opt.trials < 1) throw ArgumentError("--trials must be at least 1");
    if (opt.dim_max < 1 || opt.dim_max > 8) throw ArgumentError("--dim-max must be in [1, 8]");
    const std::size_t index_max = std::min(opt.index_max, opt.dim_max);
    const GenSpec spec{opt.dim_max, index_max, opt.entry_bound, opt.seed};
    const auto results = run_suite(spec, opt.trials, opt.ms);
    const io::ReportMeta meta{opt.seed, opt.trials, opt.dim_max, index_max, opt.entry_bound, opt.ms};
    io::write_atomic(opt.report, io::report_to_json(meta, results).dump(2) + "\n");
    const auto s = summarize(results);
    out << "checks: " << s.total << ", passed: " << s.passed << ", failed: " << s.failed
        << ", hypothesis violated: " << s.hypothesis_violated << "\n";
    return s.failed == 0 ? kOk : kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

} // namespace ginv::cli
