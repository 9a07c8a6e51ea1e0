// Command-line front end. Everything goes through the shared C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isofam.h"

namespace {

struct StringOut {
  char* ptr = nullptr;
  ~StringOut() { isofam_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

[[noreturn]] void die(isofam_status st) {
  std::cerr << "error: " << isofam_last_error() << "\n";
  std::exit(st == ISOFAM_ERROR_VERIFY ? 1 : 2);
}

void check(isofam_status st) {
  if (st != ISOFAM_OK) die(st);
}

int write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path, std::ios::trunc);
  out << content;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  return 0;
}

struct Session {
  std::string case_name = "c";
  int n = 5;
  std::string cache_dir;
  isofam_setup* setup = nullptr;
  isofam_table* table = nullptr;

  ~Session() {
    isofam_table_free(table);
    isofam_setup_free(setup);
  }

  void open() {
    check(isofam_setup_new(case_name.c_str(), n, &setup));
    if (const char* env = std::getenv("ISOFAM_CACHE"); env && *env) cache_dir = env;
    std::string path;
    if (!cache_dir.empty()) {
      path = cache_dir + "/phi-" + case_name + "-" + std::to_string(n) + ".jsonl";
      StringOut warning;
      check(isofam_table_load(setup, path.c_str(), &table, &warning.ptr));
      if (warning.ptr) std::cerr << "warning: " << warning.str() << "\n";
      if (table) return;
    }
    check(isofam_enumerate(setup, &table));
    if (!path.empty()) {
      if (isofam_table_save(table, path.c_str()) != ISOFAM_OK)
        std::cerr << "warning: could not write cache: " << isofam_last_error() << "\n";
    }
  }
};

int emit_report(isofam_report* rep, const std::string& format, const std::string& output,
                const std::string& payload_key_for_json = "") {
  std::string content;
  if (format == "text") {
    StringOut text;
    check(isofam_report_text(rep, &text.ptr));
    content = text.str();
  } else if (format == "json" && !payload_key_for_json.empty()) {
    StringOut payload;
    check(isofam_report_payload_string(rep, payload_key_for_json.c_str(), &payload.ptr));
    content = payload.str();
  } else if (format == "json") {
    StringOut json;
    check(isofam_report_json(rep, &json.ptr));
    content = json.str();
  } else if (format == "csv") {
    StringOut payload;
    check(isofam_report_payload_string(rep, "csv", &payload.ptr));
    if (!payload.ptr) {
      std::cerr << "error: this command has no csv rendering\n";
      return 2;
    }
    content = payload.str();
  } else {
    std::cerr << "error: unsupported format " << format << "\n";
    return 2;
  }
  int rc = write_output(output, content);
  if (rc != 0) return rc;
  if (!isofam_report_pass(rep)) {
    if (format != "json") {
      StringOut json;
      check(isofam_report_json(rep, &json.ptr));
      std::cerr << json.str() << "\n";
    }
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"families of isotropic subspaces over GF(2): enumeration and checks"};
  app.require_subcommand(1);

  Session session;
  std::string format, output;
  std::vector<int> edge, jset;
  int tau = 0;
  bool compare_paper = false;

  auto add_common = [&](CLI::App* cmd, const char* default_format) {
    cmd->add_option("--case", session.case_name, "setup case: a, b, or c")
        ->default_val("c");
    cmd->add_option("--n", session.n, "size parameter N")->required();
    cmd->add_option("--format", format, "output format")->default_val(default_format);
    cmd->add_option("--output,-o", output, "output file (default stdout)");
    cmd->add_option("--cache", session.cache_dir,
                    "cache directory (ISOFAM_CACHE overrides)");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list the family table");
  add_common(enumerate, "json");

  CLI::App* verify = app.add_subcommand("verify", "run every applicable law check");
  add_common(verify, "text");

  CLI::App* order = app.add_subcommand("order", "export the chain order");
  add_common(order, "dot");

  CLI::App* fourier = app.add_subcommand("fourier", "coefficient matrix and its checks");
  add_common(fourier, "text");
  fourier->add_flag("--compare-paper", compare_paper,
                    "tabulate the published N=7 column");

  CLI::App* omega = app.add_subcommand("omega", "edge-marked family and its checks");
  add_common(omega, "text");
  omega->add_option("--edge", edge, "marked edge, two vertex labels")->expected(2);

  CLI::App* sectors = app.add_subcommand("sectors", "sector tables and their checks");
  add_common(sectors, "json");
  sectors->add_option("--edge", edge, "marked edge, two vertex labels")->expected(2);
  sectors->add_option("--tau", tau, "edge endpoint (default: preferred)");
  sectors->add_option("--j", jset, "explicit window of N-3 vertices");

  CLI11_PARSE(app, argc, argv);

  session.open();
  int ea = edge.size() == 2 ? edge[0] : 0;
  int eb = edge.size() == 2 ? edge[1] : 0;

  if (enumerate->parsed()) {
    if (format == "json") {
      StringOut text;
      check(isofam_table_jsonl(session.table, &text.ptr));
      return write_output(output, text.str());
    }
    if (format == "text") {
      StringOut text;
      check(isofam_table_jsonl(session.table, &text.ptr));
      std::string content = "families: " + std::to_string(isofam_table_count(session.table)) +
                            "\n" + text.str();
      return write_output(output, content);
    }
    std::cerr << "error: unsupported format " << format << "\n";
    return 2;
  }

  if (verify->parsed()) {
    isofam_report* rep = nullptr;
    check(isofam_verify(session.table, &rep));
    std::unique_ptr<isofam_report, decltype(&isofam_report_free)> guard(rep,
                                                                        isofam_report_free);
    return emit_report(rep, format, output);
  }

  if (order->parsed()) {
    if (format != "dot" && format != "csv") {
      std::cerr << "error: order supports dot or csv\n";
      return 2;
    }
    StringOut text;
    check(isofam_order_export(session.table, format.c_str(), &text.ptr));
    return write_output(output, text.str());
  }

  if (fourier->parsed()) {
    isofam_report* rep = nullptr;
    check(isofam_fourier(session.table, compare_paper ? 1 : 0, &rep));
    std::unique_ptr<isofam_report, decltype(&isofam_report_free)> guard(rep,
                                                                        isofam_report_free);
    return emit_report(rep, format, output);
  }

  if (omega->parsed()) {
    isofam_report* rep = nullptr;
    check(isofam_omega(session.table, ea, eb, &rep));
    std::unique_ptr<isofam_report, decltype(&isofam_report_free)> guard(rep,
                                                                        isofam_report_free);
    // json renders the per-record lines; the full report stays behind text
    return emit_report(rep, format, output, format == "json" ? "jsonl" : "");
  }

  if (sectors->parsed()) {
    isofam_report* rep = nullptr;
    check(isofam_sectors(session.table, ea, eb, tau,
                         jset.empty() ? nullptr : jset.data(),
                         jset.empty() ? -1 : static_cast<int>(jset.size()), &rep));
    std::unique_ptr<isofam_report, decltype(&isofam_report_free)> guard(rep,
                                                                        isofam_report_free);
    return emit_report(rep, format, output);
  }

  return 2;
}
