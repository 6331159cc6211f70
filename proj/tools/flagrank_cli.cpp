// flagrank command-line interface.  Thin front-end over the C API in
// flagrank/flagrank.h; all mathematics lives behind the shared library.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flagrank/flagrank.h"

namespace {

std::string join(const std::vector<std::string>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

int emit(fr_engine* eng, fr_status st, char* out) {
  if (out) {
    std::fputs(out, stdout);
    fr_string_free(out);
  }
  if (st != FR_OK) std::fprintf(stderr, "error: %s\n", fr_last_error(eng));
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rank tests for diagonal actions on multiple flag "
               "varieties (G/P)^n, with constructive certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  int retries = 5, height = 3, word_length = 0, max_rank = 8, threads = 0;
  std::string format = "json";
  app.add_option("--seed", seed, "PRNG seed (env FLAGRANK_SEED overrides)");
  app.add_option("--retries", retries, "sampling attempts per verdict");
  app.add_option("--height", height, "coefficient height for sampled points");
  app.add_option("--word-length", word_length,
                 "unipotent word length (0 = 2*rank)");
  app.add_option("--max-rank", max_rank, "largest admitted rank");
  app.add_option("--threads", threads, "table worker threads (0 = auto)");
  app.add_option("--format", format, "json | markdown")
      ->check(CLI::IsMember({"json", "markdown"}));

  // classify
  std::string cl_type;
  int cl_rank = 0, cl_n = 0;
  std::vector<int> cl_parabolic;
  auto* classify = app.add_subcommand(
      "classify", "Decide the open diagonal orbit on (G/P_I)^n");
  classify->add_option("--type", cl_type, "simple type A..G")->required();
  classify->add_option("--rank", cl_rank, "rank of G")->required();
  classify
      ->add_option("--parabolic", cl_parabolic,
                   "marked simple nodes (1-based), e.g. 1,6")
      ->required()
      ->delimiter(',');
  classify->add_option("--n", cl_n, "number of flag factors")->required();

  // table
  std::string tb_name;
  auto* table = app.add_subcommand(
      "table", "Recompute a classification table and check it cell by cell");
  table->add_option("which", tb_name, "theorem1 | theorem2 | corollary")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "corollary"}));

  // decompose
  std::string dc_type;
  int dc_rank = 0;
  std::vector<int> dc_parabolic;
  auto* decompose = app.add_subcommand(
      "decompose", "Levi-module decomposition of the nilradical opposite");
  decompose->add_option("--type", dc_type, "simple type A..G")->required();
  decompose->add_option("--rank", dc_rank, "rank of G")->required();
  decompose
      ->add_option("--parabolic", dc_parabolic,
                   "marked simple nodes (1-based)")
      ->required()
      ->delimiter(',');

  // verify-invariants
  std::string vi_case;
  int vi_l = 0, vi_trials = 50;
  auto* verify = app.add_subcommand(
      "verify-invariants",
      "Check a case's rational invariant is exactly Levi-invariant");
  verify->add_option("--case", vi_case, "B | C | D | D1ll")->required();
  verify->add_option("--l", vi_l, "rank parameter l")->required();
  verify->add_option("--trials", vi_trials, "random Levi elements to test");

  // certify
  std::string cf_kind;
  int cf_l = 0, cf_trials = 25;
  std::vector<std::string> cf_t1, cf_quad;
  std::string cf_t2 = "1", cf_t3 = "1";
  auto* certify = app.add_subcommand(
      "certify", "Cross-ratio certificate of infinitely many orbits");
  certify
      ->add_option("--kind", cf_kind,
                   "quadruple | so6-cross-ratio | so2l-p1l | so2l-pll")
      ->required();
  certify->add_option("--l", cf_l, "rank parameter l (SO kinds)");
  certify->add_option("--t1", cf_t1,
                      "first parameter; give twice for the two values");
  certify->add_option("--t2", cf_t2, "second line parameter");
  certify->add_option("--t3", cf_t3, "third line parameter");
  certify->add_option("--quad", cf_quad,
                      "four comma-separated curve parameters; give twice");
  certify->add_option("--trials", cf_trials, "random group elements to test");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("FLAGRANK_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (...) {
      std::fprintf(stderr, "error: FLAGRANK_SEED is not an integer\n");
      return 2;
    }
  }

  fr_engine* eng = fr_engine_new();
  fr_set_option(eng, "seed", std::to_string(seed).c_str());
  fr_set_option(eng, "retries", std::to_string(retries).c_str());
  fr_set_option(eng, "height", std::to_string(height).c_str());
  fr_set_option(eng, "word_length", std::to_string(word_length).c_str());
  fr_set_option(eng, "max_rank", std::to_string(max_rank).c_str());
  fr_set_option(eng, "threads", std::to_string(threads).c_str());
  fr_set_option(eng, "format", format.c_str());

  char* out = nullptr;
  fr_status st = FR_USAGE;
  if (*classify) {
    st = fr_classify(eng, cl_type.c_str(), cl_rank,
                     join_ints(cl_parabolic).c_str(), cl_n, &out);
  } else if (*table) {
    st = fr_table(eng, tb_name.c_str(), &out);
  } else if (*decompose) {
    st = fr_decompose(eng, dc_type.c_str(), dc_rank,
                      join_ints(dc_parabolic).c_str(), &out);
  } else if (*verify) {
    st = fr_verify_invariants(eng, vi_case.c_str(), vi_l, vi_trials, &out);
  } else if (*certify) {
    std::string p1, p2;
    if (cf_kind == "quadruple") {
      std::vector<std::string> q = cf_quad;
      if (q.empty()) q = {"1,-1,1/2,2", "0,1,2,3"};
      if (q.size() != 2) {
        std::fprintf(stderr,
                     "error: --quad must be given exactly twice "
                     "(two parameter quadruples)\n");
        fr_engine_free(eng);
        return 2;
      }
      p1 = q[0];
      p2 = q[1];
    } else {
      std::vector<std::string> t1 = cf_t1;
      if (t1.empty()) t1 = {"1/2", "1/3"};
      if (t1.size() != 2) {
        std::fprintf(stderr,
                     "error: --t1 must be given exactly twice "
                     "(the two values to compare)\n");
        fr_engine_free(eng);
        return 2;
      }
      p1 = join({t1[0], cf_t2, cf_t3});
      p2 = join({t1[1], cf_t2, cf_t3});
    }
    st = fr_certify(eng, cf_kind.c_str(), cf_l, p1.c_str(), p2.c_str(),
                    cf_trials, &out);
  }

  int code = emit(eng, st, out);
  fr_engine_free(eng);
  return code;
}
