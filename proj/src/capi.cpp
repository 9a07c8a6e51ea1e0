#include "isofam.h"

#include <cstring>
#include <new>
#include <string>

#include "isofam/reports.hpp"

using namespace isofam;

struct isofam_setup {
  Setup setup;
};
struct isofam_table {
  PhiTable table;
};
struct isofam_report {
  Report report;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

isofam_status fail(isofam_status st, const char* what) {
  g_last_error = what;
  return st;
}

template <typename Fn>
isofam_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    return fail(ISOFAM_ERROR_USAGE, e.what());
  } catch (const DomainError& e) {
    return fail(ISOFAM_ERROR_DOMAIN, e.what());
  } catch (const VerifyError& e) {
    return fail(ISOFAM_ERROR_VERIFY, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ISOFAM_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ISOFAM_ERROR_INTERNAL, e.what());
  }
}

std::pair<int, int> resolve_edge(const Setup& s, int a, int b) {
  if (a == 0 && b == 0) return {s.vertices - 1, s.vertices};
  return {a, b};
}

}  // namespace

extern "C" {

const char* isofam_version(void) { return "0.1.0"; }

const char* isofam_last_error(void) { return g_last_error.c_str(); }

isofam_status isofam_setup_new(const char* case_name, int n, isofam_setup** out) {
  if (!case_name || !out) return fail(ISOFAM_ERROR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&]() {
    std::string c = case_name;
    GraphCase kase;
    if (c == "a")
      kase = n % 2 == 0 ? GraphCase::PathEven : GraphCase::PathOdd;
    else if (c == "a-even")
      kase = GraphCase::PathEven;
    else if (c == "b")
      kase = GraphCase::Cycle;
    else if (c == "c")
      kase = GraphCase::CycleQuotient;
    else
      throw UsageError("unknown case: " + c);
    *out = new isofam_setup{build_setup(kase, n)};
    return ISOFAM_OK;
  });
}

void isofam_setup_free(isofam_setup* s) { delete s; }

isofam_status isofam_enumerate(const isofam_setup* s, isofam_table** out) {
  if (!s || !out) return fail(ISOFAM_ERROR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&]() {
    *out = new isofam_table{enumerate_phi(s->setup)};
    return ISOFAM_OK;
  });
}

void isofam_table_free(isofam_table* t) { delete t; }

int isofam_table_count(const isofam_table* t) { return t ? t->table.size() : 0; }

isofam_status isofam_table_jsonl(const isofam_table* t, char** out) {
  if (!t || !out) return fail(ISOFAM_ERROR_USAGE, "null argument");
  return guarded([&]() {
    *out = dup_string(phi_jsonl(t->table));
    return ISOFAM_OK;
  });
}

isofam_status isofam_table_save(const isofam_table* t, const char* path) {
  if (!t || !path) return fail(ISOFAM_ERROR_USAGE, "null argument");
  return guarded([&]() {
    if (!save_phi_cache(t->table, path))
      return fail(ISOFAM_ERROR_IO, "could not write cache file");
    return ISOFAM_OK;
  });
}

isofam_status isofam_table_load(const isofam_setup* s, const char* path,
                                isofam_table** out, char** warning) {
  if (!s || !path || !out) return fail(ISOFAM_ERROR_USAGE, "null argument");
  *out = nullptr;
  if (warning) *warning = nullptr;
  return guarded([&]() {
    std::string warn;
    std::optional<PhiTable> loaded = load_phi_cache(s->setup, path, &warn);
    if (loaded) *out = new isofam_table{std::move(*loaded)};
    if (!warn.empty() && warning) *warning = dup_string(warn);
    return ISOFAM_OK;
  });
}

isofam_status isofam_verify(const isofam_table* t, isofam_report** out) {
  if (!t || !out) return fail(ISOFAM_ERROR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&]() {
    *out = new isofam_report{run_verify(t->table.setup, t->table)};
    return ISOFAM_OK;
  });
}

isofam_status isofam_fourier(const isofam_table* t, int compare_paper,
                             isofam_report** out) {
  if (!t || !out) return fail(ISOFAM_ERROR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&]() {
    *out = new isofam_report{
        run_fourier(t->table.setup, t->table, compare_paper != 0)};
    return ISOFAM_OK;
  });
}

isofam_status isofam_omega(const isofam_table* t, int edge_a, int edge_b,
                           isofam_report** out) {
  if (!t || !out) return fail(ISOFAM_ERROR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&]() {
    *out = new isofam_report{run_omega(t->table.setup, t->table,
                                       resolve_edge(t->table.setup, edge_a, edge_b))};
    return ISOFAM_OK;
  });
}

isofam_status isofam_sectors(const isofam_table* t, int edge_a, int edge_b, int tau,
                             const int* j, int j_len, isofam_report** out) {
  if (!t || !out) return fail(ISOFAM_ERROR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&]() {
    std::optional<BitVector> jmask;
    if (j && j_len >= 0) {
      BitVector m = BitVector::zero(t->table.setup.vertices);
      for (int i = 0; i < j_len; ++i) m = m.with(j[i]);
      jmask = m;
    }
    *out = new isofam_report{run_sectors(t->table.setup, t->table,
                                         resolve_edge(t->table.setup, edge_a, edge_b),
                                         tau, jmask)};
    return ISOFAM_OK;
  });
}

isofam_status isofam_order_export(const isofam_table* t, const char* format,
                                  char** out) {
  if (!t || !format || !out) return fail(ISOFAM_ERROR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&]() {
    std::string f = format;
    if (f == "dot")
      *out = dup_string(order_dot(t->table));
    else if (f == "csv")
      *out = dup_string(order_csv(t->table));
    else
      throw UsageError("unknown order format: " + f);
    return ISOFAM_OK;
  });
}

int isofam_report_pass(const isofam_report* r) { return r && r->report.pass() ? 1 : 0; }

int isofam_report_check_count(const isofam_report* r) {
  return r ? static_cast<int>(r->report.checks.size()) : 0;
}

const char* isofam_report_check_id(const isofam_report* r, int i) {
  if (!r || i < 0 || i >= static_cast<int>(r->report.checks.size())) return nullptr;
  return r->report.checks[i].id.c_str();
}

int isofam_report_check_pass(const isofam_report* r, int i) {
  if (!r || i < 0 || i >= static_cast<int>(r->report.checks.size())) return 0;
  return r->report.checks[i].pass ? 1 : 0;
}

isofam_status isofam_report_json(const isofam_report* r, char** out) {
  if (!r || !out) return fail(ISOFAM_ERROR_USAGE, "null argument");
  return guarded([&]() {
    *out = dup_string(r->report.to_json().dump(2));
    return ISOFAM_OK;
  });
}

isofam_status isofam_report_text(const isofam_report* r, char** out) {
  if (!r || !out) return fail(ISOFAM_ERROR_USAGE, "null argument");
  return guarded([&]() {
    *out = dup_string(r->report.to_text());
    return ISOFAM_OK;
  });
}

isofam_status isofam_report_payload_string(const isofam_report* r, const char* key,
                                           char** out) {
  if (!r || !key || !out) return fail(ISOFAM_ERROR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&]() {
    auto it = r->report.payload.find(key);
    if (it != r->report.payload.end() && it->is_string())
      *out = dup_string(it->get<std::string>());
    return ISOFAM_OK;
  });
}

void isofam_report_free(isofam_report* r) { delete r; }

void isofam_string_free(char* s) { delete[] s; }

}  // extern "C"
