#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gss/scalar.hpp"

namespace gss::report {

enum class Verdict { pass, fail, indeterminate };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::indeterminate: return "INDET";
  }
  return "?";
}

struct Record {
  std::string claim;   // stable identifier, also the sort key
  Verdict verdict = Verdict::fail;
  double margin = std::numeric_limits<double>::infinity();  // infinity = exact
  std::string detail;
  double elapsed_ms = 0.0;
};

struct Report {
  std::uint64_t seed = 0;
  std::string mode;
  std::vector<Record> records;

  void add(std::string claim, bool pass, std::string detail = {},
           double margin = std::numeric_limits<double>::infinity()) {
    records.push_back(Record{std::move(claim), pass ? Verdict::pass : Verdict::fail, margin,
                             std::move(detail), 0.0});
  }

  void add_indeterminate(std::string claim, double margin, std::string detail = {}) {
    records.push_back(
        Record{std::move(claim), Verdict::indeterminate, margin, std::move(detail), 0.0});
  }

  void merge(const Report& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
  }

  bool ok() const {
    for (const auto& r : records)
      if (r.verdict != Verdict::pass) return false;
    return true;
  }

  int exit_code() const { return ok() ? 0 : 1; }
};

struct RunConfig {
  std::uint64_t seed = 20240601;
  enum class Mode { exact, floating } mode = Mode::exact;
  Tolerance tol;
  std::string algebra = "2+3";  // fdim-spectra case-study input
  int lift_pairs = 200;
  int tie_pairs = 500;
  int torus_pairs = 300;
  int reconstruction_trials = 10;
  int batch_trials = 50;
  bool timings = false;

  std::string mode_name() const { return mode == Mode::exact ? "exact" : "float"; }
};

// Line-oriented text, one record per line, sorted by claim id. Timings are
// off by default so identical configurations render byte-identically.
std::string render_text(const Report& report, bool timings = false);

// Machine-readable variant.
std::string render_structured(const Report& report, bool timings = false);

}  // namespace gss::report
