#include "ncminor/ncminor.h"

#include <string>

#include "homalg/heredity.hpp"
#include "io/algebra_file.hpp"
#include "io/commands.hpp"
#include "io/curve_file.hpp"

struct ncm_algebra {
  ncm::io::LoadedAlgebra loaded;
  std::string name;
};

struct ncm_curve {
  ncm::io::CurveFile file;
};

struct ncm_report {
  ncm::io::CommandResult result;
};

namespace {

thread_local std::string g_last_error;

ncm_status fail(ncm_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Runs f, mapping exceptions to status codes.
template <class F>
ncm_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const ncm::Error& e) {
    return fail(NCM_INPUT_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(NCM_INTERNAL_ERROR, std::string("internal: ") + e.what());
  } catch (...) {
    return fail(NCM_INTERNAL_ERROR, "internal: unknown exception");
  }
}

}  // namespace

extern "C" {

const char* ncm_last_error(void) { return g_last_error.c_str(); }

const char* ncm_version(void) { return "1.0.0"; }

ncm_status ncm_algebra_load(const char* path, ncm_algebra** out) {
  if (!path || !out) return fail(NCM_INPUT_ERROR, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto* a = new ncm_algebra{ncm::io::load_algebra(path), {}};
    a->name = a->loaded.algebra->name();
    *out = a;
    return NCM_OK;
  });
}

ncm_status ncm_algebra_parse(const char* text, const char* name, ncm_algebra** out) {
  if (!text || !out) return fail(NCM_INPUT_ERROR, "null argument");
  *out = nullptr;
  const std::string file = name ? name : "<memory>";
  return guarded([&] {
    auto f = ncm::io::parse_algebra_file(text, file);
    auto* a = new ncm_algebra{ncm::io::build_algebra(f, file), {}};
    a->name = a->loaded.algebra->name();
    *out = a;
    return NCM_OK;
  });
}

void ncm_algebra_free(ncm_algebra* a) { delete a; }

size_t ncm_algebra_dim(const ncm_algebra* a) { return a ? a->loaded.algebra->dim() : 0; }

const char* ncm_algebra_name(const ncm_algebra* a) { return a ? a->name.c_str() : ""; }

ncm_status ncm_algebra_global_dimension(const ncm_algebra* a, size_t cap, size_t* gldim, int* at_least) {
  if (!a || !gldim) return fail(NCM_INPUT_ERROR, "null argument");
  return guarded([&] {
    const auto d = ncm::homalg::algebra_gldim(a->loaded.algebra, cap ? cap : 12);
    *gldim = d.value;
    if (at_least) *at_least = d.at_least ? 1 : 0;
    return NCM_OK;
  });
}

ncm_status ncm_curve_load(const char* path, ncm_curve** out) {
  if (!path || !out) return fail(NCM_INPUT_ERROR, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ncm_curve{ncm::io::load_curve(path)};
    return NCM_OK;
  });
}

void ncm_curve_free(ncm_curve* c) { delete c; }

size_t ncm_curve_rank(const ncm_curve* c) { return c ? c->file.curve.rank : 0; }

size_t ncm_curve_point_count(const ncm_curve* c) { return c ? c->file.curve.points.size() : 0; }

ncm_status ncm_run(const char* subcommand, const ncm_request* req, ncm_report** out) {
  if (!subcommand || !out) return fail(NCM_INTERNAL_ERROR, "null argument");
  *out = nullptr;
  return guarded([&] {
    ncm::io::CommandRequest r;
    r.command = subcommand;
    if (req) {
      if (req->algebra_path) r.algebra_path = req->algebra_path;
      if (req->curve_path) r.curve_path = req->curve_path;
      if (req->idempotent) r.idempotent = req->idempotent;
      if (req->cap) r.cap = req->cap;
      for (size_t i = 0; i < req->module_count; ++i)
        if (req->modules && req->modules[i]) r.modules.emplace_back(req->modules[i]);
    }
    auto* rep = new ncm_report{ncm::io::run_command(r)};
    *out = rep;
    if (!rep->result.diagnostic.empty()) g_last_error = rep->result.diagnostic;
    return static_cast<ncm_status>(rep->result.exit_code);
  });
}

const char* ncm_report_text(const ncm_report* r) { return r ? r->result.report.c_str() : ""; }

int ncm_report_exit_code(const ncm_report* r) { return r ? r->result.exit_code : NCM_INTERNAL_ERROR; }

const char* ncm_report_diagnostic(const ncm_report* r) { return r ? r->result.diagnostic.c_str() : ""; }

void ncm_report_free(ncm_report* r) { delete r; }

const char* ncm_subcommand_name(size_t i) {
  const auto& names = ncm::io::command_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

}  // extern "C"
