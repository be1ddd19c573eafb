#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ginv/checks.hpp"
#include "ginv/generators.hpp"

namespace ginv {

// One generated trial: the main matrix plus the two law pairs.
struct TrialInstance {
  std::size_t trial = 0;
  CMatrix a;
  MatrixPair additive;
  ProductPair product;
};

// Trial t draws everything from seed spec.seed + t. spec.dim and spec.index
// act as upper bounds: each trial picks its dimension in [1, spec.dim] and
// index in [0, min(spec.index, dim)]. Law pairs use dimension max(dim, 2).
inline TrialInstance make_trial(const GenSpec& spec, std::size_t trial) {
  validate(spec);
  Rng rng(spec.seed + trial);
  TrialInstance inst;
  inst.trial = trial;
  const std::size_t dim = rng.index(1, spec.dim);
  const std::size_t index = rng.index(0, std::min(spec.index, dim));
  inst.a = gen_with_index({dim, index, spec.entry_bound, rng.next()});
  const std::size_t pair_dim = std::max<std::size_t>(dim, 2);
  inst.additive = gen_additive_pair({pair_dim, std::min(spec.index, pair_dim), spec.entry_bound, rng.next()});
  // alternate product families by trial parity
  inst.product = gen_product_pair({dim, index, spec.entry_bound, rng.next()},
                                  trial % 2 == 0 ? ProductFamily::Diagonalizable : ProductFamily::ScalarIdentity);
  return inst;
}

inline std::vector<CheckResult> check_trial(const TrialInstance& inst, const std::vector<std::size_t>& ms) {
  std::vector<CheckResult> out;
  const std::string label = "trial " + std::to_string(inst.trial);
  const auto add = [&](CheckResult r, const std::string& where) {
    r.instance = where;
    out.push_back(std::move(r));
  };
  const CMatrix& a = inst.a;
  add(check_penrose(a), label);
  add(check_drazin_definition(a), label);
  add(check_gg_inverse(a), label);
  add(check_m1_reduction(a), label);
  for (std::size_t m : ms) {
    const std::string where = label + ", m=" + std::to_string(m);
    add(check_mwg_definition(a, m_weak_group(a, m), m), where);
    add(check_path_agreement(a, m), where);
    add(check_decomposition(a, mwg_decompose(a, m)), where);
    add(check_cline_formula(a, m), where);
    add(check_identities(a, m), where);
    add(check_double_inverse(a, m), where);
    add(check_triple_inverse(a, m), where);
    add(check_weak_group_of_inverse(a, m), where);
    add(check_core_ep_equivalence(a, m), where);
    add(check_power_reduction(a, m), where);
    add(check_relaxed_systems(a, m), where);
    add(check_polar(a, m), where);
    add(check_blocks_and_commutation(a, m, m + 1), where);
    add(check_reduction_coherence(a, m), where);
    add(check_laws(LawKind::Additive, inst.additive.a, inst.additive.b, m), where);
    add(check_laws(LawKind::Product, inst.product.a, inst.product.b, m), where + ", " + to_string(inst.product.family));
  }
  return out;
}

// Results are in trial order, then check order; identical arguments give
// identical output.
inline std::vector<CheckResult> run_suite(const GenSpec& spec, std::size_t trials, const std::vector<std::size_t>& ms) {
  validate(spec);
  if (trials == 0) throw ArgumentError("trials must be positive");
  if (ms.empty() || std::find(ms.begin(), ms.end(), std::size_t{0}) != ms.end())
    throw ArgumentError("m values must be positive");
  std::vector<CheckResult> out;
  for (std::size_t t = 0; t < trials; ++t) {
    auto results = check_trial(make_trial(spec, t), ms);
    out.insert(out.end(), std::make_move_iterator(results.begin()), std::make_move_iterator(results.end()));
  }
  return out;
}

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t hypothesis_violated = 0;
};

inline SuiteSummary summarize(const std::vector<CheckResult>& results) {
  SuiteSummary s;
  s.total = results.size();
  for (const auto& r : results) {
    switch (r.verdict) {
      case Verdict::Pass: ++s.passed; break;
      case Verdict::Fail: ++s.failed; break;
      case Verdict::HypothesisViolated: ++s.hypothesis_violated; break;
    }
  }
  return s;
}

} // namespace ginv
