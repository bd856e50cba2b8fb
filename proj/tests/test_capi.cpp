// Exercises the shared-library surface the way an external C consumer
// would: through homn/homn.h only.

#include <homn/homn.h>

#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  homn_string_free(s);
  return out;
}

std::vector<std::string> drain(homn_seq* seq) {
  REQUIRE(seq != nullptr);
  std::vector<std::string> out;
  for (size_t i = 0; i < homn_seq_len(seq); ++i) {
    out.emplace_back(homn_seq_term(seq, i));
  }
  homn_seq_free(seq);
  return out;
}

}  // namespace

TEST_CASE("capi: scalar values") {
  char* out = nullptr;
  REQUIRE(homn_mersenne(8, &out) == HOMN_OK);
  CHECK(take(out) == "255");
  REQUIRE(homn_mersenne_lucas(6, &out) == HOMN_OK);
  CHECK(take(out) == "65");
  for (int method = 0; method <= 3; ++method) {
    REQUIRE(homn_hom(3, 4, static_cast<homn_method>(method), &out) == HOMN_OK);
    CHECK(take(out) == "585");
  }
  REQUIRE(homn_hoj(1, 3, &out) == HOMN_OK);
  CHECK(take(out) == "3");
  REQUIRE(homn_hojl(1, 2, &out) == HOMN_OK);
  CHECK(take(out) == "5");
  REQUIRE(homn_cofactor(2, 2, &out) == HOMN_OK);
  CHECK(take(out) == "5");
  REQUIRE(homn_limiting_ratio_gap(2, 2, &out) == HOMN_OK);
  CHECK(take(out) == "1/5");
}

TEST_CASE("capi: error mapping") {
  char* out = nullptr;
  CHECK(homn_hom(0, 3, HOMN_METHOD_CLOSED, &out) == HOMN_EINVAL);
  CHECK(homn_hom(2, 3, HOMN_METHOD_CLOSED, nullptr) == HOMN_EINVAL);
  CHECK(homn_hom(2, 3, static_cast<homn_method>(99), &out) == HOMN_EINVAL);
  CHECK(homn_hom(2, 0, HOMN_METHOD_MATRIX, &out) == HOMN_EDOMAIN);
  CHECK(homn_cofactor(2, 0, &out) == HOMN_EDOMAIN);
  CHECK(homn_limiting_ratio_gap(2, 0, &out) == HOMN_EDOMAIN);
  CHECK(homn_hojl(2, 2, &out) == HOMN_EINEXACT);  // 17/5
  CHECK(std::strlen(homn_last_error()) > 0);
  CHECK(homn_version() != nullptr);
}

TEST_CASE("capi: sequences") {
  homn_seq* seq = nullptr;
  REQUIRE(homn_hom_seq(3, 6, &seq) == HOMN_OK);
  CHECK(drain(seq) ==
        std::vector<std::string>{"0", "1", "9", "73", "585", "4681"});
  REQUIRE(homn_bt_seq(5, 6, 1, &seq) == HOMN_OK);
  CHECK(drain(seq) == std::vector<std::string>{"0", "1", "35", "1159", "38255",
                                               "1262431"});
  REQUIRE(homn_hom_seq(2, 0, &seq) == HOMN_OK);
  CHECK(homn_seq_len(seq) == 0);
  CHECK(homn_seq_term(seq, 0) == nullptr);
  homn_seq_free(seq);
  CHECK(homn_hom_seq(0, 4, &seq) == HOMN_EINVAL);
}

TEST_CASE("capi: generating functions") {
  homn_seq* seq = nullptr;
  REQUIRE(homn_ogf_numerator(1, HOMN_FAMILY_BASE, &seq) == HOMN_OK);
  CHECK(drain(seq) == std::vector<std::string>{"0", "1"});
  REQUIRE(homn_ogf_denominator(1, HOMN_FAMILY_BASE, &seq) == HOMN_OK);
  CHECK(drain(seq) == std::vector<std::string>{"1", "-3", "2"});
  REQUIRE(homn_ogf_denominator(1, HOMN_FAMILY_TRANSFORM, &seq) == HOMN_OK);
  CHECK(drain(seq) == std::vector<std::string>{"1", "-5", "6"});
  REQUIRE(homn_ogf_expand(1, HOMN_FAMILY_TRANSFORM, 6, &seq) == HOMN_OK);
  CHECK(drain(seq) ==
        std::vector<std::string>{"0", "1", "5", "19", "65", "211"});
  CHECK(homn_ogf_expand(1, static_cast<homn_family>(7), 3, &seq) ==
        HOMN_EINVAL);
}

TEST_CASE("capi: matrix forms") {
  homn_seq* seq = nullptr;
  REQUIRE(homn_matrix_power(2, 3, &seq) == HOMN_OK);
  CHECK(drain(seq) == std::vector<std::string>{"-20", "21", "-84", "85", "64",
                                               "65"});
  CHECK(homn_matrix_power(2, 0, &seq) == HOMN_EDOMAIN);
  REQUIRE(homn_tridiag_chain(2, 3, &seq) == HOMN_OK);
  CHECK(drain(seq) == std::vector<std::string>{"5", "21", "85"});
  char* trace = nullptr;
  REQUIRE(homn_tridiag_trace(2, 3, &trace) == HOMN_OK);
  CHECK(take(trace) == "15");
  CHECK(homn_tridiag_chain(2, 0, &seq) == HOMN_EDOMAIN);
}

TEST_CASE("capi: verification sweep") {
  CHECK(homn_identity_count() >= 20);
  CHECK(homn_identity_name(0) != nullptr);
  CHECK(homn_identity_name(homn_identity_count()) == nullptr);

  homn_verify* v = homn_verify_new();
  REQUIRE(v != nullptr);
  CHECK(homn_verify_set_k_max(v, 2) == HOMN_OK);
  CHECK(homn_verify_set_n_max(v, 8) == HOMN_OK);
  CHECK(homn_verify_set_k_max(v, 0) == HOMN_EINVAL);
  CHECK(homn_verify_add_identity(v, "cassini") == HOMN_OK);
  CHECK(homn_verify_add_identity(v, "vajda") == HOMN_OK);
  CHECK(homn_verify_add_identity(v, "no_such_identity") == HOMN_EINVAL);
  REQUIRE(homn_verify_run(v) == HOMN_OK);

  REQUIRE(homn_verify_summary_count(v) == 2);
  CHECK(std::string(homn_verify_summary_name(v, 0)) == "cassini");
  CHECK(homn_verify_summary_passed(v, 0) == 16);  // k in 1..2, n in 1..8
  CHECK(homn_verify_summary_failed(v, 0) == 0);
  CHECK(std::string(homn_verify_summary_name(v, 1)) == "vajda");
  CHECK(homn_verify_summary_failed(v, 1) == 0);
  CHECK(std::string(homn_verify_summary_note(v, 1)).find("(2^k)^n") !=
        std::string::npos);
  CHECK(homn_verify_counterexample_count(v) == 0);
  CHECK(homn_verify_all_hold(v) == 1);
  homn_verify_free(v);
}

TEST_CASE("capi: before running, results are empty") {
  homn_verify* v = homn_verify_new();
  REQUIRE(v != nullptr);
  CHECK(homn_verify_summary_count(v) == 0);
  CHECK(homn_verify_all_hold(v) == 0);
  homn_verify_free(v);
}
