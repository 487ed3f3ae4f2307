#pragma once

#include <string>
#include <vector>

#include "minors/minor.hpp"

namespace ncm::minors {

enum class Verdict { Pass, Fail, Skipped };
const char* verdict_name(Verdict v);

struct Check {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string witness;
  bool informational = false;  // reported, not part of the overall verdict
};

struct TestModules {
  std::vector<std::string> b_names;
  std::vector<Representation> b_modules;
  std::vector<std::string> a_names;
  std::vector<Representation> a_modules;
  // Prefix of a_modules used for the pairwise Hom comparison.
  size_t a_pair_count = 0;
  size_t b_pair_count = 0;
};

// Simples, regular modules and indecomposable projectives of B and A, plus
// F/H images of the A-modules and G images of the B-modules.
TestModules default_test_modules(const MinorData& md);

struct RecollementReport {
  std::vector<Check> checks;
  size_t quotient_dim = 0;                  // dim B/I_P
  size_t trace_ideal_dim = 0;
  std::vector<std::string> kernel_simples;  // simples of B killed by G
  bool all_pass() const;
};

RecollementReport recollement_report(const MinorData& md, const TestModules& tm, size_t cap = 12);
RecollementReport recollement_report(const MinorData& md, size_t cap = 12);

// Ext^k_B(F P, S) = 0 for indecomposable projectives P of A, simples S of
// B/I_P and 0 <= k <= cap.
Check semi_orthogonality(const MinorData& md, const Mat& ideal, size_t cap);

// I_P projective as a right B-module; nullopt when B has no split basic top
// and I_P is a proper ideal.
std::optional<bool> trace_ideal_right_projective(const MinorData& md, const Mat& ideal);

}  // namespace ncm::minors
