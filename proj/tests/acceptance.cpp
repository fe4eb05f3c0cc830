// One line per acceptance criterion; exit status is non-zero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "omega/coind.hpp"
#include "omega/corpus.hpp"
#include "omega/poly.hpp"

using namespace omega;

namespace {

constexpr std::uint32_t kSeed = 7;

int failures = 0;

void report(int n, bool pass, const std::string& detail, double seconds) {
  std::printf("criterion %d: %s  %s  (%.3fs)\n", n, pass ? "PASS" : "FAIL", detail.c_str(),
              seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

void run(int n, const std::function<std::pair<bool, std::string>()>& body) {
  auto const start = std::chrono::steady_clock::now();
  std::pair<bool, std::string> r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("threw: ") + e.what()};
  }
  std::chrono::duration<double> const dt = std::chrono::steady_clock::now() - start;
  report(n, r.first, r.second, dt.count());
}

std::pair<bool, std::string> from(const CheckResult& r) {
  std::string s = std::to_string(r.instances) + " instances, " +
                  std::to_string(r.violations) + " violations";
  if (!r.holds) s += " " + r.details.dump();
  return {r.holds && r.instances > 0, s};
}

bool pow2_census(const Census& c, int D) {
  for (int m = 0; m + 1 <= D; ++m) {
    if (c.marked.at(1 + m) != 1 << m) return false;
    if (c.total.at(1 + m) != 3 * (1 << m)) return false;
  }
  return true;
}

Polygraph suspended_or(int n, int D) {
  auto p = emit_OR(D - (n - 1));
  for (int i = 1; i < n; ++i) p = suspend_presentation(p);
  return p;
}

}  // namespace

int main() {
  auto const corpus = generate_corpus({kSeed});
  auto const small = small_corpus(kSeed);

  run(1, [&] {
    if (corpus.size() < 100) return std::pair{false, std::string("corpus too small")};
    return from(check_spherical_flat(corpus));
  });
  run(2, [&] { return from(check_closure(corpus)); });
  run(3, [&] { return from(check_decomposition(small)); });
  run(4, [&] { return from(check_rlp(corpus_functors(small, 2))); });

  run(5, [] {
    int const D = 7;
    bool const w = pow2_census(census(emit_EF_witness(1, D)), D);
    bool const l = pow2_census(census(ladder_colimit(1, D)), D);
    return std::pair{w && l, std::string("witness ") + (w ? "ok" : "wrong") + ", ladder " +
                                 (l ? "ok" : "wrong")};
  });

  run(6, [] {
    int checked = 0;
    std::string bad;
    for (int D = 1; D <= 7; ++D)
      for (int n = 1; n <= D; ++n) {
        auto const w = emit_EF_witness(n, D);
        if (!presentations_isomorphic(ladder_colimit(n, D), w)) bad += " ladder(" + std::to_string(n) + "," + std::to_string(D) + ")";
        if (!presentations_isomorphic(suspended_or(n, D), w, false))
          bad += " or(" + std::to_string(n) + "," + std::to_string(D) + ")";
        if (D < 7 && !presentations_isomorphic(suspend_presentation(w), emit_EF_witness(n + 1, D + 1)))
          bad += " suspension(" + std::to_string(n) + "," + std::to_string(D) + ")";
        ++checked;
      }
    return std::pair{bad.empty(), std::to_string(checked) + " (n, D) pairs" + bad};
  });

  run(7, [&] { return from(check_classifier(corpus)); });
  run(8, [&] { return from(check_cylinders(corpus)); });
  run(9, [&] { return from(check_quotient(corpus)); });

  run(10, [&] {
    std::size_t cats = 0, functors = 0, disagreements = 0;
    auto to_set = [](const CellSet& s) {
      oracle::Subset out;
      for (Cell c : s.members()) out.insert(c);
      return out;
    };
    std::vector<CorpusEntry> tiny;
    for (auto const* list : {&corpus, &small})
      for (auto const& e : *list)
        if (e.cat->total_cells() <= 12) tiny.push_back(e);
    for (auto const& e : tiny) {
      ++cats;
      if (to_set(equivalences(*e.cat)) != oracle::nu_phi(*e.cat)) ++disagreements;
      if (to_set(flat_equivalences(*e.cat)) != oracle::nu_psi(*e.cat)) ++disagreements;
    }
    for (auto const& f : corpus_functors(tiny)) {
      ++functors;
      auto const t = oracle::truth(f);
      if (is_trivial_fibration(f).holds != t.trivial_fibration) ++disagreements;
      if (is_weak_equivalence(f).holds != t.weak_equivalence) ++disagreements;
      if (is_equifibration(f).holds != t.equifibration) ++disagreements;
    }
    return std::pair{disagreements == 0 && cats > 0 && functors > 0,
                     std::to_string(cats) + " instances, " + std::to_string(functors) +
                         " functors, " + std::to_string(disagreements) + " disagreements"};
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
