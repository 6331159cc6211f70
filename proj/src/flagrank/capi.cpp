#include "flagrank/flagrank.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagrank/report.hpp"

struct fr_engine {
  flagrank::ReportConfig cfg;
  std::string last_error;
};

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string tok = s.substr(pos, comma - pos);
    if (tok.empty()) throw std::invalid_argument("empty entry in list: " + s);
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size())
      throw std::invalid_argument("not an integer: " + tok);
    out.push_back(v);
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<std::string> parse_str_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(s.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

char parse_family(const char* family) {
  if (!family || std::strlen(family) != 1 || family[0] < 'A' ||
      family[0] > 'G')
    throw std::invalid_argument("family must be one of A..G");
  return family[0];
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename Fn>
fr_status run(fr_engine* e, char** out, Fn&& fn) {
  if (!e) return FR_USAGE;
  if (!out) {
    e->last_error = "null output pointer";
    return FR_USAGE;
  }
  try {
    e->last_error.clear();
    flagrank::ReportResult r = fn();
    *out = dup_string(r.text);
    if (r.mismatch) {
      e->last_error = "computed verdict disagrees with cross-check";
      return FR_MISMATCH;
    }
    return FR_OK;
  } catch (const std::exception& ex) {
    e->last_error = ex.what();
    return FR_USAGE;
  }
}

}  // namespace

extern "C" {

fr_engine* fr_engine_new(void) { return new fr_engine; }

void fr_engine_free(fr_engine* e) { delete e; }

const char* fr_last_error(const fr_engine* e) {
  return e ? e->last_error.c_str() : "null engine";
}

void fr_string_free(char* s) { std::free(s); }

fr_status fr_set_option(fr_engine* e, const char* key, const char* value) {
  if (!e) return FR_USAGE;
  try {
    if (!key || !value) throw std::invalid_argument("null option");
    std::string k = key, v = value;
    if (k == "seed")
      e->cfg.seed = std::stoull(v);
    else if (k == "retries")
      e->cfg.retries = std::stoi(v);
    else if (k == "height")
      e->cfg.height = std::stoi(v);
    else if (k == "word_length")
      e->cfg.word_length = std::stoi(v);
    else if (k == "max_rank")
      e->cfg.max_rank = std::stoi(v);
    else if (k == "threads")
      e->cfg.threads = std::stoi(v);
    else if (k == "format") {
      if (v != "json" && v != "markdown")
        throw std::invalid_argument("format must be json or markdown");
      e->cfg.format = v;
    } else {
      throw std::invalid_argument("unknown option: " + k);
    }
    e->last_error.clear();
    return FR_OK;
  } catch (const std::exception& ex) {
    e->last_error = ex.what();
    return FR_USAGE;
  }
}

fr_status fr_classify(fr_engine* e, const char* family, int rank,
                      const char* marked, int n, char** out) {
  return run(e, out, [&] {
    return flagrank::classify_report(parse_family(family), rank,
                                     parse_int_list(marked ? marked : ""), n,
                                     e->cfg);
  });
}

fr_status fr_table(fr_engine* e, const char* name, char** out) {
  return run(e, out, [&] {
    return flagrank::table_report(name ? name : "", e->cfg);
  });
}

fr_status fr_decompose(fr_engine* e, const char* family, int rank,
                       const char* marked, char** out) {
  return run(e, out, [&] {
    return flagrank::decompose_report(parse_family(family), rank,
                                      parse_int_list(marked ? marked : ""),
                                      e->cfg);
  });
}

fr_status fr_verify_invariants(fr_engine* e, const char* case_name, int l,
                               int trials, char** out) {
  return run(e, out, [&] {
    return flagrank::invariants_report(case_name ? case_name : "", l, trials,
                                       e->cfg);
  });
}

fr_status fr_certify(fr_engine* e, const char* kind, int l,
                     const char* params1, const char* params2, int trials,
                     char** out) {
  return run(e, out, [&] {
    return flagrank::certify_report(kind ? kind : "", l,
                                    parse_str_list(params1 ? params1 : ""),
                                    parse_str_list(params2 ? params2 : ""),
                                    trials, e->cfg);
  });
}

}  // extern "C"
