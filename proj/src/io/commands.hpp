#pragma once

#include <string>
#include <vector>

#include "algebra/basic.hpp"
#include "minors/recollement.hpp"

namespace ncm::io {

struct CommandRequest {
  std::string command;
  std::string algebra_path;
  std::string curve_path;
  std::string idempotent;
  size_t cap = 12;
  std::vector<std::string> modules;
};

enum ExitCode { kExitPass = 0, kExitCheckFailed = 1, kExitInputError = 2, kExitInternal = 3 };

struct CommandResult {
  int exit_code = kExitPass;
  std::string report;
  std::string diagnostic;  // one line for stderr when exit_code >= 2
};

const std::vector<std::string>& command_names();

// Never throws; input problems come back as exit code 2.
CommandResult run_command(const CommandRequest& req);

// Line-oriented "key = value" report. Check lines read
// "check.<name> = PASS | <witness>".
class Report {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, size_t value) { add(key, std::to_string(value)); }
  void check(const std::string& name, minors::Verdict v, const std::string& witness, bool informational = false);
  void check(const minors::Check& c) { check(c.name, c.verdict, c.witness, c.informational); }
  bool failed() const { return failed_; }
  std::string text() const;

 private:
  std::vector<std::string> lines_;
  bool failed_ = false;
};

// Gabriel quiver as "e1->e2:2, ..." (arrow i -> j counted in e_j (J/J^2) e_i).
std::string gabriel_quiver(const alg::BasicAlgebra& b);
// "Kronecker", "k^3", "path algebra of its Gabriel quiver", ...
std::string identify_algebra(const alg::AlgebraPtr& a);

// Vertex labels "e1+e2"; for algebras without a split basic top, a sum of
// basis labels whose basis vectors are idempotent.
la::Vec parse_idempotent(const alg::AlgebraPtr& a, const std::string& spec);

// "regular", "simple:L", "projective:L", "injective:L".
alg::Representation parse_module(const alg::BasicPtr& b, const std::string& spec);

}  // namespace ncm::io
