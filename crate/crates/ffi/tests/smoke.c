#include <stdio.h>
#include <string.h>

#include "octoclif.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "check failed at line %d: %s\n", __LINE__, #cond); \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  double e1[8] = {0, 1, 0, 0, 0, 0, 0, 0};
  double e2[8] = {0, 0, 1, 0, 0, 0, 0, 0};
  double out[8];
  CHECK(oc_octonion_mul(e1, e2, out) == OC_STATUS_OK);
  CHECK(out[4] == 1.0);

  double zero[8] = {0};
  CHECK(oc_octonion_inverse(zero, out) == OC_STATUS_SINGULAR);
  CHECK(oc_last_error_message() != NULL);

  double p[8] = {1, 0, 0, 0, 0, 0, 0, 1};
  double q[8] = {1, 0, 0, 0, 0, 0, 0, -1};
  OcMultivector *a = NULL, *b = NULL, *c = NULL;
  CHECK(oc_multivector_new(3, p, 8, &a) == OC_STATUS_OK);
  CHECK(oc_multivector_new(3, q, 8, &b) == OC_STATUS_OK);
  CHECK(oc_multivector_product(a, b, &c) == OC_STATUS_OK);
  CHECK(oc_multivector_coeffs(c, out, 8) == OC_STATUS_OK);
  for (int i = 0; i < 8; i++) CHECK(out[i] == 0.0);
  oc_multivector_free(a);
  oc_multivector_free(b);
  oc_multivector_free(c);

  OcMap *map = NULL;
  CHECK(oc_map_from_catalog("cl-vahlen-word", 0, &map) == OC_STATUS_OK);
  size_t dim = 0;
  CHECK(oc_map_dim(map, &dim) == OC_STATUS_OK && dim == 4);
  char *json = NULL;
  CHECK(oc_map_analyze(map, 8, 1, 4, &json) == OC_STATUS_OK);
  CHECK(strstr(json, "\"map_label\"") != NULL);
  oc_string_free(json);
  oc_map_free(map);

  CHECK(oc_map_from_catalog("missing", 0, &map) == OC_STATUS_NOT_FOUND);
  printf("ok %s\n", oc_version());
  return 0;
}
