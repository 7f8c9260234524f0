// Copyright 2026 The pdom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace pdom::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "pdom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json ParseOut(const Outcome& o) { return json::parse(o.out); }

TEST(CliSolve, Examples) {
  auto r = Invoke({"solve", "--n", "13", "--kind", "one-two", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(ParseOut(r)["minimum"], 9);
  EXPECT_EQ(ParseOut(r)["method"], "transfer-dp");

  r = Invoke({"solve", "--n", "5", "--kind", "one-two-total", "--format", "json", "--witness"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(ParseOut(r)["minimum"], 5);
  EXPECT_EQ(ParseOut(r)["method"], "brute-force");
  EXPECT_EQ(ParseOut(r)["witness"], json::parse(R"(["u0","u1","v0","v1","v3"])"));

  r = Invoke({"solve", "--n", "4", "--kind", "one-two"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliSolve, UsageErrors) {
  EXPECT_EQ(Invoke({"solve", "--n", "9", "--k", "3"}).code, 2);
  EXPECT_EQ(Invoke({"solve", "--n", "9", "--kind", "roman"}).code, 2);
  EXPECT_EQ(Invoke({"solve", "--n", "9", "--format", "xml"}).code, 2);
  EXPECT_EQ(Invoke({"solve", "--n", "30", "--method", "brute"}).code, 2);
  EXPECT_EQ(Invoke({"solve", "--n", "9", "--cache", "dir"}).code, 2);
  EXPECT_EQ(Invoke({"solve"}).code, 2);
  EXPECT_EQ(Invoke({}).code, 2);
}

TEST(CliSolve, CsvAndDeterminism) {
  const auto a = Invoke({"solve", "--n", "11", "--kind", "total", "--method", "dp", "--format", "csv",
                      "--witness"});
  const auto b = Invoke({"solve", "--n", "11", "--kind", "total", "--method", "dp", "--format", "csv",
                      "--witness"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "n,k,kind,minimum,method,witness");
  EXPECT_NE(a.out.find("11,2,total,8,transfer-dp,"), std::string::npos);
}

TEST(CliVerify, Examples) {
  auto r = Invoke({"verify", "--kind", "one-two", "--from", "5", "--to", "60", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = ParseOut(r);
  EXPECT_EQ(doc["rows"].size(), 56u);
  EXPECT_TRUE(doc["all_match"].get<bool>());

  r = Invoke({"verify", "--kind", "plain", "--from", "5", "--to", "60", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "n,formula,dp,match");
  int n = 5;
  while (std::getline(lines, line)) {
    EXPECT_EQ(line, std::to_string(n) + "," + std::to_string((3 * n + 4) / 5) + "," +
                        std::to_string((3 * n + 4) / 5) + ",1");
    ++n;
  }
  EXPECT_EQ(n, 61);

  EXPECT_EQ(Invoke({"verify", "--kind", "one-two", "--from", "4", "--to", "10"}).code, 2);
}

TEST(CliConstruct, Examples) {
  auto r = Invoke({"construct", "--n", "9", "--kind", "one-two", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            R"({"n":9,"kind":"one-two","size":6,"set":["u1","u4","u7","v1","v4","v7"],"source":"periodic-pattern"})"
            "\n");

  r = Invoke({"construct", "--n", "8", "--kind", "one-two", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(ParseOut(r)["size"], 6);
  EXPECT_EQ(ParseOut(r)["set"], json::parse(R"(["u1","u4","v1","v4","v6","v7"])"));

  r = Invoke({"construct", "--n", "13", "--kind", "one-two-total", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(ParseOut(r)["size"], 10);
  EXPECT_EQ(ParseOut(r)["source"], "spliced-pattern");

  EXPECT_EQ(Invoke({"construct", "--n", "3"}).code, 2);
  EXPECT_EQ(Invoke({"construct", "--n", "9", "--kind", "plain"}).code, 2);
}

TEST(CliTable, Examples) {
  auto r = Invoke({"table", "--from", "5", "--to", "12"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "n,gamma_ref,gamma_t_ref,f,g,dp_plain,dp_total,dp_one_two,dp_one_two_total");
  std::vector<int> f;
  while (std::getline(lines, line)) {
    std::vector<int> cols;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cols.push_back(std::stoi(cell));
    ASSERT_EQ(cols.size(), 9u);
    f.push_back(cols[3]);
    EXPECT_EQ(cols[3], cols[7]);
    EXPECT_EQ(cols[4], cols[8]);
  }
  EXPECT_EQ(f, (std::vector<int>{4, 4, 5, 6, 6, 8, 8, 8}));

  r = Invoke({"table", "--from", "6", "--to", "6", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            R"([{"n":6,"gamma_ref":4,"gamma_t_ref":4,"f":4,"g":4,"dp_plain":4,"dp_total":4,"dp_one_two":4,"dp_one_two_total":4}])"
            "\n");

  EXPECT_EQ(Invoke({"table", "--from", "9", "--to", "8"}).code, 2);
}

TEST(CliCensus, Examples) {
  auto r = Invoke({"census", "--n", "9", "--set", "u1,v1,u4,v4,u7,v7", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto doc = ParseOut(r);
  EXPECT_EQ(doc["census"], json::parse(R"({"x":{"2":3},"y":{}})"));
  EXPECT_EQ(doc["inequalities"]["eq2"]["lhs"], 18);
  EXPECT_EQ(doc["inequalities"]["eq2"]["rhs"], 18);

  r = Invoke({"census", "--n", "6", "--set", "u1,v1,u4,v4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("x_2 = 2"), std::string::npos);
  EXPECT_NE(r.out.find("eq2: 12 >= 12 ok"), std::string::npos);

  r = Invoke({"census", "--n", "5", "--set", "u1,v1", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(ParseOut(r)["valid"].get<bool>());
  EXPECT_FALSE(ParseOut(r)["violations"].empty());

  EXPECT_EQ(Invoke({"census", "--n", "5", "--set", "u1,x1"}).code, 2);
}

TEST(CliEq1, Examples) {
  auto r = Invoke({"eq1", "--n", "12"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "count 0\n");

  r = Invoke({"eq1", "--n", "10", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(ParseOut(r)["count"], 10);
  EXPECT_EQ(ParseOut(r)["solutions"][0], json::parse("[0,1,1,0,1,1,0,1,1,1]"));

  EXPECT_EQ(Invoke({"eq1", "--n", "22"}).code, 2);
}

}  // namespace
}  // namespace pdom::cli
