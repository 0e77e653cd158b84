#include <stdio.h>
#include <string.h>

#include "tightcount.h"

static int check(int cond, const char *what) {
  if (!cond) {
    fprintf(stderr, "FAILED: %s (%s)\n", what, tc_last_error() ? tc_last_error() : "no error");
  }
  return cond ? 0 : 1;
}

int main(void) {
  int failures = 0;
  TcReport *report = NULL;

  failures += check(tc_analyze("1/2", "1/2", "2/5", true, false, 0, &report) == TC_STATUS_OK, "analyze");
  uint64_t t = 0, upper = 0, lower = 0;
  bool agree = false;
  failures += check(tc_report_t_formula(report, &t) == TC_STATUS_OK && t == 10, "t_formula");
  failures += check(tc_report_upper_count(report, &upper) == TC_STATUS_OK && upper == 10, "upper");
  failures += check(tc_report_lower_count(report, &lower) == TC_STATUS_OK && lower == 10, "lower");
  failures += check(tc_report_agree(report, &agree) == TC_STATUS_OK && agree, "agree");

  char *json = tc_report_json(report);
  failures += check(json != NULL && strstr(json, "\"t_formula\":10") != NULL, "json");
  tc_string_free(json);
  tc_report_free(report);

  report = NULL;
  failures += check(tc_analyze("-1/2", "1/2", "1/2", false, false, 0, &report) == TC_STATUS_OUT_OF_SCOPE,
                    "out of scope");
  failures += check(report == NULL && tc_last_error() != NULL, "error message");

  char *cf = NULL;
  failures += check(tc_neg_cf_expand("-7/5", &cf) == TC_STATUS_OK && strcmp(cf, "[-2,-2,-3]") == 0, "cf");
  tc_string_free(cf);

  if (failures == 0) {
    printf("c smoke test ok\n");
  }
  return failures;
}
