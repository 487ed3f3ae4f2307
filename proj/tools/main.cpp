#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncminor/ncminor.h"

namespace {

struct Options {
  std::string algebra, curve, idempotent, out;
  size_t cap = 12;
  std::vector<std::string> modules;
};

void add_flags(CLI::App* sub, Options& o) {
  sub->add_option("--algebra", o.algebra, "algebra file (.alg)");
  sub->add_option("--curve", o.curve, "curve file (.curve)");
  sub->add_option("--idempotent", o.idempotent, "sum of primitive idempotent labels, e.g. e1+e2");
  sub->add_option("--cap", o.cap, "resolution length cap")->check(CLI::PositiveNumber);
  sub->add_option("--module", o.modules, "regular, simple:L, projective:L or injective:L (repeatable)");
  sub->add_option("--out", o.out, "write the report here instead of stdout");
}

const std::map<std::string, std::string> kHelp = {
    {"minor", "eAe, its quiver and the End_B(Be) check"},
    {"trace-ideal", "BeB, B/BeB and the tensor multiplication map"},
    {"recollement", "the six functors and their adjunction and exactness checks"},
    {"gldim", "global dimension from minimal resolutions of the simples"},
    {"ext", "dim Ext^i(M, N) for i = 0..cap"},
    {"inj-dim", "injective dimension of a module"},
    {"qhered", "search for a heredity chain"},
    {"gldim-bound", "gl.dim bound from eBe and B/BeB"},
    {"semiorth", "semiorthogonal decomposition from the idempotent"},
    {"endo", "End(A + F)^op and its gl.dim"},
    {"glue", "A_H from a subalgebra of H, with its minors"},
    {"curve-hom-table", "Hom/Ext table of the tilting set"},
    {"curve-tilting", "End(T)^op as a bound quiver algebra"},
    {"curve-local-order", "local orders and their gl.dim"},
    {"canonical", "compare End(T)^op with the canonical presentation"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Idempotent minors, recollements and hereditary curves over Q"};
  app.set_version_flag("--version", ncm_version());
  app.require_subcommand(1);
  Options o;
  std::vector<CLI::App*> subs;
  for (size_t i = 0; const char* name = ncm_subcommand_name(i); ++i) {
    CLI::App* sub = app.add_subcommand(name, kHelp.count(name) ? kHelp.at(name) : "");
    add_flags(sub, o);
    subs.push_back(sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string command;
  for (CLI::App* s : subs)
    if (s->parsed()) command = s->get_name();

  std::vector<const char*> mods;
  for (const auto& m : o.modules) mods.push_back(m.c_str());
  ncm_request req{};
  req.algebra_path = o.algebra.empty() ? nullptr : o.algebra.c_str();
  req.curve_path = o.curve.empty() ? nullptr : o.curve.c_str();
  req.idempotent = o.idempotent.empty() ? nullptr : o.idempotent.c_str();
  req.cap = o.cap;
  req.modules = mods.data();
  req.module_count = mods.size();

  ncm_report* rep = nullptr;
  const ncm_status st = ncm_run(command.c_str(), &req, &rep);
  if (!rep) {
    std::cerr << "error: " << ncm_last_error() << "\n";
    return 3;
  }
  const std::string text = ncm_report_text(rep);
  const std::string diag = ncm_report_diagnostic(rep);
  ncm_report_free(rep);
  if (!diag.empty()) std::cerr << "error: " << diag << "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << text)) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
  }
  return static_cast<int>(st);
}
