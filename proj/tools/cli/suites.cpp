#include "cli/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "charsub/charsub.hpp"
#include "cli/bits.hpp"

namespace charsub::cli {

namespace {

constexpr std::size_t kMaxCensusDim = 8;

struct Case {
  std::string name;
  std::function<std::string()> run;  // empty string on success
};

void record(SuiteResult& r, std::ostream& log, const std::string& name, const std::string& failure) {
  if (failure.empty()) {
    ++r.passed;
    log << "PASS " << name << '\n';
  } else {
    ++r.failed;
    log << "FAIL " << name << ": " << failure << '\n';
  }
}

std::string expect(bool cond, const std::string& what) { return cond ? "" : what; }

Gf2Matrix golden_matrix() {
  return Gf2Matrix::from_rows(4, {from_bits("0000"), from_bits("0000"), from_bits("0100"),
                                  from_bits("0010")});
}

Subspace golden_x() { return Subspace::span(4, {from_bits("1010"), from_bits("0001")}); }

std::string sizes_label(const std::vector<std::size_t>& sizes) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < sizes.size(); ++i) out << (i ? "," : "") << sizes[i];
  out << ')';
  return out.str();
}

std::vector<Case> paper_cases() {
  std::vector<Case> cases;
  const auto f = std::make_shared<NilpotentOperator>(golden_matrix());
  cases.push_back({"example/elementary-divisors", [f] {
                     return expect(elementary_divisors(ulm_sequence(*f)) ==
                                       std::vector<std::size_t>{1, 3},
                                   "divisors differ from [1, 3]");
                   }});
  cases.push_back({"example/ulm-sequence", [f] {
                     return expect(ulm_sequence(*f) == UlmSequence({1, 0, 1}), "expected (1, 0, 1)");
                   }});
  cases.push_back({"example/z-exponent", [f] {
                     return expect(exponent(*f, from_bits("1010")) == 2, "f^2 z should vanish");
                   }});
  cases.push_back({"example/x-members", [f] {
                     const Subspace x = golden_x();
                     const bool ok = x.dim() == 2 && x.contains(from_bits("1010")) &&
                                     x.contains(from_bits("0001")) &&
                                     x.contains(from_bits("1011")) && is_invariant(*f, x);
                     return expect(ok, "X should be {0, e1+e3, e4, e1+e3+e4} and invariant");
                   }});
  cases.push_back({"example/commutant-dimension", [f] {
                     return expect(commutant_basis(*f).dim() == 6, "commutant dimension != 6");
                   }});
  cases.push_back({"example/unit-template", [f] {
                     const auto aut = enumerate_automorphisms(commutant_basis(*f));
                     if (aut.elements.size() != 16) return std::string("|Aut| != 16");
                     for (const auto& g : aut.elements) {
                       const bool ok = g.get(0, 0) && g.get(1, 1) && g.get(2, 2) && g.get(3, 3) &&
                                       !g.get(0, 2) && !g.get(0, 3) && !g.get(1, 0) &&
                                       !g.get(1, 2) && !g.get(1, 3) && !g.get(2, 0) &&
                                       !g.get(2, 3) && g.get(2, 1) == g.get(3, 2);
                       if (!ok) return std::string("unit outside the template");
                     }
                     return std::string();
                   }});
  cases.push_back({"example/x-characteristic", [f] {
                     const auto v = is_characteristic(*f, golden_x());
                     return expect(v.characteristic && v.complete &&
                                       v.automorphism_count == std::optional<std::uint64_t>(16),
                                   "X should be characteristic over 16 automorphisms");
                   }});
  cases.push_back({"example/x-not-hyperinvariant", [f] {
                     Gf2Matrix pi(4, 4);
                     pi.set(0, 0);
                     const bool ok = commutes(pi, *f) && pi.apply(from_bits("1010")) == from_bits("1000") &&
                                     !golden_x().contains(from_bits("1000")) &&
                                     !is_hyperinvariant(*f, golden_x()).hyperinvariant;
                     return expect(ok, "pi_1 should move z out of X");
                   }});
  cases.push_back({"example/x-not-marked", [f] {
                     return expect(!is_marked(*f, golden_x()), "X should not be marked");
                   }});
  cases.push_back({"example/construct-z", [f] {
                     return expect(construct_z(*f, generator_tuple(*f), 0, 1) == from_bits("1010"),
                                   "z != e1 + e3");
                   }});
  cases.push_back({"example/y-span", [f] {
                     const auto u = generator_tuple(*f);
                     return expect(construct_y_span(*f, u, 0, 1) == golden_x() &&
                                       enumerate_y_oracle(*f, 1, 3) == golden_x() &&
                                       cyclic_subspace(*f, from_bits("1010")) == golden_x(),
                                   "<Y> and <z> should equal X");
                   }});
  cases.push_back({"example/counterexample", [f] {
                     const auto c = counterexample(*f);
                     return expect(c && c->subspace == golden_x(), "counterexample should be X");
                   }});
  cases.push_back({"example/largest-hyperinvariant-inside", [f] {
                     const auto r = largest_hyperinvariant_inside(*f, generator_tuple(*f), golden_x(), true);
                     return expect(r.subspace == Subspace::span(4, {from_bits("0001")}),
                                   "expected span{e4}");
                   }});
  cases.push_back({"theorem/shoda-examples", [] {
                     const bool ok = shoda_condition(UlmSequence({1, 0, 1})) &&
                                     !shoda_condition(UlmSequence({1, 1})) &&
                                     !ulm_form_condition(UlmSequence({1, 0, 1}));
                     return expect(ok, "shoda/ulm-form verdicts on (1,0,1) and (1,1)");
                   }});
  cases.push_back({"lemma/beta-gamma", [] {
                     const NilpotentOperator g(jordan_matrix(std::vector<std::size_t>{2, 2}));
                     const auto p = beta_gamma_pair(g);
                     const bool ok = commutes(p.beta, g) && commutes(p.gamma, g) &&
                                     is_invertible(p.beta) && is_invertible(p.gamma) &&
                                     p.beta + p.gamma == Gf2Matrix::identity(4);
                     return expect(ok, "beta + gamma = identity with both units");
                   }});
  return cases;
}

std::vector<Case> census_cases(std::size_t max_dim) {
  std::vector<Case> cases;
  for (std::size_t n = 1; n <= max_dim; ++n) {
    for (const auto& sizes : partitions(n)) {
      cases.push_back({"census/" + sizes_label(sizes), [sizes, max_dim] {
                         const NilpotentOperator f(jordan_matrix(sizes));
                         CensusOptions opts;
                         opts.max_dim = max_dim;
                         const Census c = lattice_census(f, opts);
                         if (!c.complete) return std::string("census was not exact");
                         const bool shoda = shoda_condition(ulm_sequence(f));
                         if (c.chinv_exceeds_hinv() != shoda) {
                           return std::string("Chinv > Hinv is ") +
                                  (c.chinv_exceeds_hinv() ? "true" : "false") +
                                  " but the shoda condition is " + (shoda ? "true" : "false");
                         }
                         for (const auto& e : c.invariant) {
                           if (e.hyperinvariant != (e.characteristic && e.marked)) {
                             return std::string("characteristic and marked differs from hyperinvariant");
                           }
                         }
                         return std::string();
                       }});
    }
  }
  return cases;
}

std::vector<Case> oracle_cases(std::size_t max_dim) {
  std::vector<Case> cases;
  for (std::size_t n = 1; n <= max_dim; ++n) {
    for (const auto& sizes : partitions(n)) {
      const auto ulm = UlmSequence::from_block_sizes(sizes);
      if (!shoda_condition(ulm)) continue;
      cases.push_back({"oracle/" + sizes_label(sizes), [sizes] {
                         const NilpotentOperator f(jordan_matrix(sizes));
                         const auto u = generator_tuple(f);
                         const auto& cls = u.classes();
                         for (std::size_t i = 0; i < cls.size(); ++i) {
                           for (std::size_t j = i + 1; j < cls.size(); ++j) {
                             if (cls[i].count != 1 || cls[j].count != 1 ||
                                 cls[i].exponent + 1 >= cls[j].exponent)
                               continue;
                             const Subspace y = construct_y_span(f, u, i, j);
                             if (y != enumerate_y_oracle(f, cls[i].exponent, cls[j].exponent)) {
                               return "formula and oracle differ for blocks " +
                                      std::to_string(cls[i].exponent) + ", " +
                                      std::to_string(cls[j].exponent);
                             }
                           }
                         }
                         return std::string();
                       }});
    }
  }
  return cases;
}

}  // namespace

std::size_t default_suite_max_dim(const std::string& name) {
  if (name == "census") return kDefaultCensusMaxDim;
  if (name == "oracle") return 9;
  return 0;
}

SuiteResult run_suite(const std::string& name, std::size_t max_dim, std::ostream& log) {
  std::vector<Case> cases;
  if (name == "paper") {
    cases = paper_cases();
  } else if (name == "census") {
    if (max_dim > kMaxCensusDim) {
      throw CapExceeded("census suite: max-dim " + std::to_string(max_dim) + " above " +
                            std::to_string(kMaxCensusDim),
                        max_dim, kMaxCensusDim);
    }
    cases = census_cases(max_dim);
  } else if (name == "oracle") {
    cases = oracle_cases(max_dim);
  } else {
    throw ParseError("unknown suite \"" + name + "\" (expected paper, census or oracle)");
  }

  // Cases run on a small worker pool; the log is written in case order.
  std::vector<std::string> failures(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        failures[i] = cases[i].run();
      } catch (const std::exception& e) {
        failures[i] = std::string("exception: ") + e.what();
      }
    }
  };
  const std::size_t threads =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), cases.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteResult r;
  for (std::size_t i = 0; i < cases.size(); ++i) record(r, log, cases[i].name, failures[i]);
  log << r.passed << " passed, " << r.failed << " failed\n";
  return r;
}

}  // namespace charsub::cli
