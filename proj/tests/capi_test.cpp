// Exercises the shared library through its C header only.
#include "nnn/nnn.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  nnn_string_free(s);
  return out;
}

TEST(CApiTest, ClassifyThroughHandles) {
  nnn_group* g = nullptr;
  ASSERT_EQ(nnn_group_parse("dihedral:6", &g), NNN_OK);
  EXPECT_EQ(nnn_group_order(g), 12);
  uint32_t codes[12];
  size_t count = 0;
  ASSERT_EQ(nnn_group_parse_set(g, "a, a^-1, b, a^3*b", 1, codes, 12, &count), NNN_OK);
  ASSERT_EQ(count, 4u);
  EXPECT_EQ(codes[3], 9u);
  nnn_digraph* d = nullptr;
  ASSERT_EQ(nnn_digraph_create(g, codes, count, &d), NNN_OK);
  char* json = nullptr;
  ASSERT_EQ(nnn_classify(d, &json), NNN_OK);
  const std::string record = take(json);
  EXPECT_NE(record.find("\"nnn\":true"), std::string::npos);
  EXPECT_NE(record.find("\"aut_order\":48"), std::string::npos);
  ASSERT_EQ(nnn_automorphisms(d, &json), NNN_OK);
  EXPECT_EQ(take(json).rfind("{\"order\":48,", 0), 0u);
  ASSERT_EQ(nnn_digraph_to_json(d, &json), NNN_OK);
  const std::string text = take(json);
  nnn_digraph* back = nullptr;
  ASSERT_EQ(nnn_digraph_from_json(text.c_str(), &back), NNN_OK);
  ASSERT_EQ(nnn_digraph_edge_list(back, &json), NNN_OK);
  EXPECT_EQ(take(json).rfind("0 1\n", 0), 0u);
  nnn_digraph_destroy(back);
  nnn_digraph_destroy(d);
  nnn_group_destroy(g);
}

TEST(CApiTest, ErrorCodes) {
  nnn_group* g = nullptr;
  EXPECT_EQ(nnn_group_parse("dihedral:1", &g), NNN_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(nnn_last_error()), "");
  EXPECT_EQ(nnn_group_create(NNN_CYCLIC, 4, &g), NNN_OK);
  EXPECT_STREQ(nnn_last_error(), "");
  uint32_t codes[4];
  size_t count = 0;
  EXPECT_EQ(nnn_group_parse_set(g, "1,x", 0, codes, 4, &count), NNN_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(nnn_group_parse_set(g, "1,,2", 0, codes, 4, &count), NNN_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(nnn_group_parse_set(g, "1,2,3", 0, codes, 2, &count), NNN_ERR_CAP_EXCEEDED);
  EXPECT_EQ(count, 3u);
  EXPECT_EQ(nnn_group_parse_set(g, "", 0, codes, 4, &count), NNN_OK);
  EXPECT_EQ(count, 0u);
  const uint32_t with_identity[] = {0, 1};
  nnn_digraph* d = nullptr;
  EXPECT_EQ(nnn_digraph_create(g, with_identity, 2, &d), NNN_ERR_PRECONDITION);
  EXPECT_EQ(d, nullptr);
  char* out = nullptr;
  EXPECT_EQ(nnn_construct_dihedral_nnn(8, &out), NNN_ERR_PRECONDITION);
  EXPECT_NE(std::string(nnn_last_error()).find("n != 8"), std::string::npos);
  EXPECT_EQ(nnn_digraph_from_json("{not json", &d), NNN_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(nnn_classify(nullptr, &out), NNN_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(nnn_status_name(NNN_ERR_CAP_EXCEEDED), "cap exceeded");
  nnn_group_destroy(g);
}

TEST(CApiTest, ConstructReportsWitness) {
  char* out = nullptr;
  ASSERT_EQ(nnn_construct_dihedral_nnn(10, &out), NNN_OK);
  const std::string j = take(out);
  EXPECT_NE(j.find("\"normal_in_aut\":false"), std::string::npos);
  EXPECT_NE(j.find("\"aut_order\":80"), std::string::npos);
}

TEST(CApiTest, SweepRecordsAndSummary) {
  nnn_group* g = nullptr;
  ASSERT_EQ(nnn_group_create(NNN_DIHEDRAL, 3, &g), NNN_OK);
  nnn_sweep* s = nullptr;
  size_t calls = 0;
  auto progress = [](const char* label, size_t, size_t, void* user) {
    EXPECT_STREQ(label, "D_6");
    ++*static_cast<size_t*>(user);
  };
  ASSERT_EQ(nnn_sweep_run(g, NNN_SWEEP_DIGRAPH, 0, 2, progress, &calls, &s), NNN_OK);
  EXPECT_GT(calls, 0u);
  EXPECT_EQ(nnn_sweep_size(s), 32u);
  char* out = nullptr;
  ASSERT_EQ(nnn_sweep_record_json(s, 0, &out), NNN_OK);
  EXPECT_EQ(take(out).rfind("{\"group\":\"dihedral\",\"n\":3,\"set\":[]", 0), 0u);
  EXPECT_EQ(nnn_sweep_record_json(s, 32, &out), NNN_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(nnn_sweep_summary_json(s, &out), NNN_OK);
  EXPECT_NE(take(out).find("\"records\":32"), std::string::npos);
  nnn_sweep_destroy(s);
  nnn_group_destroy(g);
}

TEST(CApiTest, VerifyReport) {
  nnn_report* r = nullptr;
  ASSERT_EQ(nnn_verify(2, 4, 1, nullptr, nullptr, &r), NNN_OK);
  EXPECT_EQ(nnn_report_passed(r), 1);
  char* out = nullptr;
  ASSERT_EQ(nnn_report_counterexample_json(r, &out), NNN_OK);
  EXPECT_EQ(out, nullptr);
  ASSERT_EQ(nnn_report_json(r, &out), NNN_OK);
  EXPECT_NE(take(out).find("\"passed\": true"), std::string::npos);
  nnn_report_destroy(r);
  EXPECT_EQ(nnn_verify(2, 12, 1, nullptr, nullptr, &r), NNN_ERR_CAP_EXCEEDED);
}

}  // namespace
