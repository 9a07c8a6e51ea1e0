#ifndef ISOFAM_H
#define ISOFAM_H

/* C interface to the isotropic-family library. All functionality is
 * reachable through opaque handles and status codes; strings returned
 * through char** are owned by the caller and released with
 * isofam_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum isofam_status {
  ISOFAM_OK = 0,
  ISOFAM_ERROR_VERIFY = 1,   /* a mathematical check failed */
  ISOFAM_ERROR_USAGE = 2,    /* bad arguments */
  ISOFAM_ERROR_DOMAIN = 3,   /* operation precondition violated */
  ISOFAM_ERROR_IO = 4,
  ISOFAM_ERROR_INTERNAL = 5
} isofam_status;

typedef struct isofam_setup isofam_setup;
typedef struct isofam_table isofam_table;
typedef struct isofam_report isofam_report;

const char* isofam_version(void);

/* Message describing the most recent failure on this thread. */
const char* isofam_last_error(void);

/* case_name: "a" (path; even n selects the even-size variant), "b" (cycle),
 * "c" (cycle modulo the all-ones vector). */
isofam_status isofam_setup_new(const char* case_name, int n, isofam_setup** out);
void isofam_setup_free(isofam_setup* s);

/* Complete enumeration of the family table for a setup. */
isofam_status isofam_enumerate(const isofam_setup* s, isofam_table** out);
void isofam_table_free(isofam_table* t);
int isofam_table_count(const isofam_table* t);

/* One JSON object per family, sorted by eps mask. */
isofam_status isofam_table_jsonl(const isofam_table* t, char** out);

/* Cache round trip. Loading yields *out = NULL with ISOFAM_OK when the file
 * is absent; a stale or corrupt file also yields NULL and sets *warning. */
isofam_status isofam_table_save(const isofam_table* t, const char* path);
isofam_status isofam_table_load(const isofam_setup* s, const char* path,
                                isofam_table** out, char** warning);

/* Verification pipelines. Reports carry named checks plus structured
 * payloads; a failing check does not make the call itself fail. */
isofam_status isofam_verify(const isofam_table* t, isofam_report** out);
isofam_status isofam_fourier(const isofam_table* t, int compare_paper,
                             isofam_report** out);
/* edge_a = edge_b = 0 picks the default marked edge {N-1, N}. */
isofam_status isofam_omega(const isofam_table* t, int edge_a, int edge_b,
                           isofam_report** out);
/* tau = 0 picks the preferred endpoint; j = NULL picks the default window. */
isofam_status isofam_sectors(const isofam_table* t, int edge_a, int edge_b, int tau,
                             const int* j, int j_len, isofam_report** out);

/* format: "dot" or "csv". */
isofam_status isofam_order_export(const isofam_table* t, const char* format, char** out);

int isofam_report_pass(const isofam_report* r);
int isofam_report_check_count(const isofam_report* r);
const char* isofam_report_check_id(const isofam_report* r, int i);
int isofam_report_check_pass(const isofam_report* r, int i);
isofam_status isofam_report_json(const isofam_report* r, char** out);
isofam_status isofam_report_text(const isofam_report* r, char** out);
/* Fetches a string payload field ("csv", "jsonl"); *out = NULL if absent. */
isofam_status isofam_report_payload_string(const isofam_report* r, const char* key,
                                           char** out);
void isofam_report_free(isofam_report* r);

void isofam_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ISOFAM_H */
