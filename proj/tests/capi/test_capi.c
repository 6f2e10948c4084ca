/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "resobdd.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expectation failed: %s (last error: %s)\n", \
              __FILE__, __LINE__, #cond, resobdd_last_error());        \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static const char* kTiny =
    ".i 3\n.o 2\n.p 4\n1-0 10\n011 11\n00- 01\n111 -0\n.e\n";

static void test_errors(void) {
  resobdd_pla* pla = NULL;
  EXPECT(resobdd_pla_parse(".i 2\n.o 1\n10 1\n111 1\n", &pla) == RESOBDD_ERR_PARSE);
  EXPECT(pla == NULL);
  EXPECT(strstr(resobdd_last_error(), "line 4") != NULL);
  EXPECT(resobdd_pla_load(DATA_DIR "/does_not_exist.pla", &pla) == RESOBDD_ERR_IO);
  EXPECT(resobdd_pla_parse(NULL, &pla) == RESOBDD_ERR_USAGE);
  EXPECT(resobdd_pla_load(DATA_DIR "/bad_count.pla", &pla) == RESOBDD_ERR_PARSE);
  EXPECT(strstr(resobdd_last_error(), "line 3") != NULL);

  resobdd_diagram* d = NULL;
  const char* bad[] = {"1x0"};
  EXPECT(resobdd_diagram_from_cubes(3, bad, 1, RESOBDD_FORM_RO, &d) != RESOBDD_OK);
  EXPECT(d == NULL);
}

static void test_pla_and_stats(void) {
  resobdd_pla* pla = NULL;
  EXPECT(resobdd_pla_parse(kTiny, &pla) == RESOBDD_OK);
  if (!pla) return;
  EXPECT(resobdd_pla_num_inputs(pla) == 3);
  EXPECT(resobdd_pla_num_outputs(pla) == 2);
  EXPECT(resobdd_pla_num_warnings(pla) == 0);
  EXPECT(resobdd_pla_warning(pla, 0) == NULL);

  resobdd_stats* stats = NULL;
  resobdd_counts c;
  EXPECT(resobdd_stats_create(&stats) == RESOBDD_OK);
  EXPECT(resobdd_stats_add(stats, pla, "tiny", RESOBDD_DC_ZERO, &c) == RESOBDD_OK);
  EXPECT(c.qr == 12 && c.ro == 7 && c.ir == 7);
  EXPECT(resobdd_stats_add(stats, pla, "tiny_dc1", RESOBDD_DC_ONE, &c) == RESOBDD_OK);
  EXPECT(c.qr == 13 && c.ro == 8 && c.ir == 8);
  char* csv = NULL;
  EXPECT(resobdd_stats_render(stats, RESOBDD_FORMAT_CSV, &csv) == RESOBDD_OK);
  EXPECT(csv && strncmp(csv, "benchmark,in,out,qr_nodes,ro_nodes,ir_nodes", 43) == 0);
  EXPECT(csv && strstr(csv, "\ntiny,3,2,12,7,7,") != NULL);
  resobdd_string_free(csv);
  char* json = NULL;
  EXPECT(resobdd_stats_render(stats, RESOBDD_FORMAT_JSON, &json) == RESOBDD_OK);
  EXPECT(json && json[0] == '[');
  resobdd_string_free(json);
  resobdd_stats_free(stats);

  resobdd_diagram* ir = NULL;
  EXPECT(resobdd_diagram_from_pla(pla, 0, RESOBDD_FORM_IR, RESOBDD_DC_ZERO, &ir) == RESOBDD_OK);
  int resilient = 0;
  EXPECT(resobdd_diagram_is_index_resilient(ir, &resilient) == RESOBDD_OK && resilient);
  size_t total = 0;
  double mean = 0;
  EXPECT(resobdd_diagram_cost(ir, &total, &mean) == RESOBDD_OK);
  /* Root x0 jumps to an x2 node with terminal children: that node spans levels 1..2. */
  EXPECT(total == 5 && mean == 1.25);
  resobdd_diagram_free(ir);
  resobdd_diagram* none = NULL;
  EXPECT(resobdd_diagram_from_pla(pla, 2, RESOBDD_FORM_RO, RESOBDD_DC_ZERO, &none) ==
         RESOBDD_ERR_USAGE);
  resobdd_pla_free(pla);
}

static void test_diagrams(void) {
  const char* cubes[] = {"1-0", "011"};
  resobdd_diagram* d = NULL;
  EXPECT(resobdd_diagram_from_cubes(3, cubes, 2, RESOBDD_FORM_RO, &d) == RESOBDD_OK);
  if (!d) return;
  uint32_t n = 0;
  EXPECT(resobdd_diagram_num_vars(d, &n) == RESOBDD_OK && n == 3);
  for (unsigned a = 0; a < 8; ++a) {
    uint8_t x[3] = {(uint8_t)(a & 1), (uint8_t)((a >> 1) & 1), (uint8_t)((a >> 2) & 1)};
    int expect = (x[0] && !x[2]) || (!x[0] && x[1] && x[2]);
    int got = -1;
    EXPECT(resobdd_diagram_evaluate(d, x, 3, &got) == RESOBDD_OK);
    EXPECT(got == expect);
  }
  uint8_t shortx[2] = {0, 0};
  int got = 0;
  EXPECT(resobdd_diagram_evaluate(d, shortx, 2, &got) == RESOBDD_ERR_USAGE);

  size_t ro = 0, qr = 0, irn = 0;
  resobdd_diagram* q = NULL;
  resobdd_diagram* i = NULL;
  EXPECT(resobdd_diagram_from_cubes(3, cubes, 2, RESOBDD_FORM_QR, &q) == RESOBDD_OK);
  EXPECT(resobdd_diagram_from_cubes(3, cubes, 2, RESOBDD_FORM_IR, &i) == RESOBDD_OK);
  resobdd_diagram_node_count(d, &ro);
  resobdd_diagram_node_count(q, &qr);
  resobdd_diagram_node_count(i, &irn);
  EXPECT(ro <= irn && irn <= qr);

  char* dot = NULL;
  EXPECT(resobdd_diagram_to_dot(i, "g", &dot) == RESOBDD_OK);
  EXPECT(dot && strstr(dot, "digraph g") != NULL);
  resobdd_string_free(dot);
  resobdd_diagram_free(q);
  resobdd_diagram_free(i);
  resobdd_diagram_free(d);
  resobdd_diagram_free(NULL);
  resobdd_string_free(NULL);
}

static void test_reference(void) {
  resobdd_counts c;
  int found = 0;
  EXPECT(resobdd_reference("alu1", &c, &found) == RESOBDD_OK && found);
  EXPECT(c.ro <= c.ir && c.ir <= c.qr);
  EXPECT(resobdd_reference("no_such_bench", &c, &found) == RESOBDD_OK && !found);
  char* name = NULL;
  EXPECT(resobdd_benchmark_name("/a/b/co14.pla", &name) == RESOBDD_OK);
  EXPECT(name && strcmp(name, "co14") == 0);
  resobdd_string_free(name);
}

static void test_verify_and_campaigns(void) {
  resobdd_pla* pla = NULL;
  EXPECT(resobdd_pla_load(DATA_DIR "/adder2.pla", &pla) == RESOBDD_OK);
  if (!pla) return;
  EXPECT(resobdd_pla_num_warnings(pla) == 1);

  resobdd_verify_options vo;
  resobdd_verify_options_init(&vo);
  EXPECT(vo.break_output == -1);
  int passed = 0;
  char* report = NULL;
  EXPECT(resobdd_verify(pla, "adder2", &vo, &passed, &report) == RESOBDD_OK);
  EXPECT(passed == 1);
  resobdd_string_free(report);
  vo.break_output = 1;
  report = NULL;
  EXPECT(resobdd_verify(pla, "adder2", &vo, &passed, &report) == RESOBDD_OK);
  EXPECT(passed == 0);
  EXPECT(report && strstr(report, "semantics") != NULL);
  resobdd_string_free(report);

  resobdd_campaign_config cfg;
  resobdd_campaign_config_init(&cfg);
  cfg.trials = 50;
  int trend = 0;
  char* csv = NULL;
  char* summary = NULL;
  cfg.mode = RESOBDD_MODE_INDEX_UT;
  EXPECT(resobdd_inject_recover(pla, "adder2", &cfg, &passed, &trend, &csv, &summary) ==
         RESOBDD_OK);
  EXPECT(passed == 1 && trend == 1);
  EXPECT(csv && strncmp(csv, "benchmark,output_idx,mode", 25) == 0);
  resobdd_string_free(csv);
  resobdd_string_free(summary);

  cfg.mode = RESOBDD_MODE_INDEX_IR;
  cfg.fault_fraction = 0.5;
  EXPECT(resobdd_inject_recover(pla, "adder2", &cfg, &passed, NULL, NULL, NULL) == RESOBDD_OK);
  EXPECT(passed == 1);

  size_t sizes[] = {4, 16, 256};
  cfg.mode = RESOBDD_MODE_EDGE;
  cfg.table_sizes = sizes;
  cfg.num_table_sizes = 3;
  cfg.strict = 1;
  csv = NULL;
  EXPECT(resobdd_inject_recover(pla, "adder2", &cfg, &passed, &trend, &csv, NULL) == RESOBDD_OK);
  EXPECT(passed == 1);
  EXPECT(csv != NULL);
  resobdd_string_free(csv);

  cfg.trials = 0;
  EXPECT(resobdd_inject_recover(pla, "adder2", &cfg, &passed, NULL, NULL, NULL) ==
         RESOBDD_ERR_USAGE);
  resobdd_pla_free(pla);
}

int main(void) {
  EXPECT(resobdd_version() != NULL && resobdd_version()[0] != '\0');
  test_errors();
  test_pla_and_stats();
  test_diagrams();
  test_reference();
  test_verify_and_campaigns();
  if (failures) {
    fprintf(stderr, "%d C API expectation(s) failed\n", failures);
    return 1;
  }
  printf("C API: all expectations met\n");
  return 0;
}
