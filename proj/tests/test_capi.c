/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <string.h>

#include "ncminor/ncminor.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: FAILED %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static const char* kKronecker =
    "[meta]\nformat = 1\nname = Kronecker\nfield = Q\n\n"
    "[quiver]\nvertices = 1, 2\narrow = a: 1 -> 2\narrow = b: 1 -> 2\n";

int main(void) {
  ncm_algebra* a = NULL;
  size_t gl = 99;
  int at_least = -1;

  EXPECT(strlen(ncm_version()) > 0);
  EXPECT(ncm_algebra_load(NCM_SOURCE_DIR "/data/lambda.alg", &a) == NCM_OK);
  EXPECT(a != NULL);
  EXPECT(ncm_algebra_dim(a) == 9);
  EXPECT(strcmp(ncm_algebra_name(a), "Lambda") == 0);
  EXPECT(ncm_algebra_global_dimension(a, 0, &gl, &at_least) == NCM_OK);
  EXPECT(gl == 2 && at_least == 0);
  ncm_algebra_free(a);

  a = NULL;
  EXPECT(ncm_algebra_parse(kKronecker, "kron.alg", &a) == NCM_OK);
  EXPECT(ncm_algebra_dim(a) == 4);
  ncm_algebra_free(a);

  a = NULL;
  EXPECT(ncm_algebra_parse("[meta]\nformat = 1\n", "broken.alg", &a) == NCM_INPUT_ERROR);
  EXPECT(a == NULL);
  EXPECT(strstr(ncm_last_error(), "broken.alg:") != NULL);
  EXPECT(ncm_algebra_load(NCM_SOURCE_DIR "/data/none.alg", &a) == NCM_INPUT_ERROR);
  EXPECT(ncm_algebra_load(NULL, &a) == NCM_INPUT_ERROR);

  a = NULL;
  EXPECT(ncm_algebra_load(NCM_SOURCE_DIR "/data/kx2.alg", &a) == NCM_OK);
  EXPECT(ncm_algebra_global_dimension(a, 5, &gl, &at_least) == NCM_OK);
  EXPECT(gl == 5 && at_least == 1);
  ncm_algebra_free(a);

  ncm_curve* c = NULL;
  EXPECT(ncm_curve_load(NCM_SOURCE_DIR "/data/w222.curve", &c) == NCM_OK);
  EXPECT(ncm_curve_rank(c) == 2);
  EXPECT(ncm_curve_point_count(c) == 3);
  ncm_curve_free(c);
  c = NULL;
  EXPECT(ncm_curve_load(NCM_SOURCE_DIR "/data/negative/bad_composition.curve", &c) == NCM_INPUT_ERROR);
  EXPECT(c == NULL);

  size_t n = 0;
  while (ncm_subcommand_name(n)) ++n;
  EXPECT(n == 15);

  ncm_report* r = NULL;
  ncm_request req;
  memset(&req, 0, sizeof req);
  req.algebra_path = NCM_SOURCE_DIR "/data/lambda.alg";
  req.idempotent = "e1+e2";
  EXPECT(ncm_run("minor", &req, &r) == NCM_OK);
  EXPECT(ncm_report_exit_code(r) == 0);
  EXPECT(strstr(ncm_report_text(r), "minor.identification = Kronecker\n") != NULL);
  ncm_report_free(r);

  const char* mods[] = {"simple:e1", "simple:e3"};
  req.idempotent = NULL;
  req.modules = mods;
  req.module_count = 2;
  req.cap = 3;
  r = NULL;
  EXPECT(ncm_run("ext", &req, &r) == NCM_OK);
  EXPECT(strstr(ncm_report_text(r), "ext.simple:e1.simple:e3 = 0,0,2,0\n") != NULL);
  ncm_report_free(r);

  memset(&req, 0, sizeof req);
  req.algebra_path = NCM_SOURCE_DIR "/data/kx2.alg";
  req.cap = 4;
  r = NULL;
  EXPECT(ncm_run("qhered", &req, &r) == NCM_CHECK_FAILED);
  EXPECT(strstr(ncm_report_text(r), "check.heredity_chain = FAIL") != NULL);
  ncm_report_free(r);

  r = NULL;
  EXPECT(ncm_run("no-such-command", &req, &r) == NCM_INPUT_ERROR);
  EXPECT(strlen(ncm_report_diagnostic(r)) > 0);
  ncm_report_free(r);
  EXPECT(ncm_run(NULL, &req, &r) == NCM_INTERNAL_ERROR);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  else printf("test_capi: all checks passed\n");
  return failures ? 1 : 0;
}
