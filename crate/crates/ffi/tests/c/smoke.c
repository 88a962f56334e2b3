#include <stdio.h>
#include <string.h>

#include "cyclic_cutwidth.h"

#define CHECK(cond)                                        \
  do {                                                     \
    if (!(cond)) {                                         \
      fprintf(stderr, "failed: %s (line %d)\n", #cond, __LINE__); \
      return 1;                                            \
    }                                                      \
  } while (0)

int main(void) {
  CcwGraph *q4 = NULL;
  CcwNumbering *gray = NULL;
  CcwMetrics m;
  uint64_t v = 0;
  char msg[128];

  CHECK(ccw_graph_hypercube(4, &q4) == CCW_STATUS_OK);
  CHECK(ccw_graph_edge_count(q4) == 32);
  CHECK(ccw_numbering_gray(4, &gray) == CCW_STATUS_OK);
  CHECK(ccw_metrics(q4, gray, 1000000, &m) == CCW_STATUS_OK);
  CHECK(m.ccw == 6 && m.cwl == 88 && m.exact);

  CHECK(ccw_theta(3, 3, &v) == CCW_STATUS_OK && v == 5);
  CHECK(ccw_ct_value(40, &v) == CCW_STATUS_OK && v == 458129844906ULL);
  CHECK(ccw_theta(70, 1, &v) == CCW_STATUS_OUT_OF_RANGE);
  CHECK(ccw_last_error_message(msg, sizeof msg) > 0 && strstr(msg, "dimension") != NULL);

  ccw_numbering_free(gray);
  ccw_graph_free(q4);
  printf("ok %s\n", ccw_version());
  return 0;
}
