#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>

#include "doctest.h"

#include "bandq/io.hpp"

using namespace bandq;

TEST_CASE("table JSON round trip") {
  MulTable t = b5_example();
  MulTable u = table_from_json(table_to_json(t));
  CHECK(u.n == t.n);
  CHECK(u.table == t.table);
  CHECK(u.identity == t.identity);
  CHECK(u.names == t.names);
}

TEST_CASE("constructor mini-language") {
  CHECK(build_from_spec("b5").n == 5);
  CHECK(build_from_spec("left_zero:3").n == 3);
  CHECK(build_from_spec("right_zero:2").n == 2);
  CHECK(build_from_spec("rect:2x3").n == 6);
  CHECK(build_from_spec("chain:4").n == 4);
  CHECK(build_from_spec("signs:2").n == 9);
  CHECK(build_from_spec("free_lrb1:2").n == 5);
  CHECK(build_from_spec("prod(signs:1,signs:1)").n == 9);
  CHECK(build_from_spec("adjoin1(rect:2x2)").n == 5);
  CHECK(build_from_spec(" b5 ").n == 5);
  CHECK(build_from_spec("prod(chain:2,prod(chain:2,chain:2))").n == 8);
}

TEST_CASE("bad specs raise ParseError") {
  for (const char* bad : {"", "nope", "rect:2", "signs:x", "prod(b5)",
                          "chain:", "b5:1"})
    CHECK_THROWS_AS(build_from_spec(bad), ParseError);
}

TEST_CASE("table file loading") {
  std::string path = "tmp_band_table.json";
  {
    std::ofstream out(path);
    out << table_to_json(sign_face_monoid(1)).dump();
  }
  CHECK(build_from_spec("@" + path).n == 3);
  CHECK(build_from_spec(path).n == 3);
  std::remove(path.c_str());
  CHECK_THROWS_AS(build_from_spec("@missing_file.json"), ParseError);
}

TEST_CASE("analyze report on b5") {
  json j = analyze_report(b5_example());
  CHECK(j["schema"] == "bandq.analyze.v1");
  CHECK(j["flags"]["band"] == true);
  CHECK(j["flags"]["left_regular"] == false);
  CHECK(j["connected"] == true);
  CHECK(j["nilpotency_index"] == 3);
  CHECK(j["brown_bound"] == 5);
  CHECK(j["unit"] == json::array({1, 0, 0, 0, 0}));
  CHECK(j["lattice"]["m"] == 2);
}

TEST_CASE("analyze report flags disconnection with a witness") {
  json j = analyze_report(right_zero(2));
  CHECK(j["connected"] == false);
  CHECK(j["unit"].is_null());
  CHECK(j["disconnect_witness"]["side"] == "L");
  CHECK(j["disconnect_witness"]["components"].size() == 2);
}

TEST_CASE("analyze report on a non-band stops early") {
  MulTable t = from_table(2, {{1, 1}, {0, 0}});
  json j = analyze_report(t);
  CHECK(j["flags"]["band"] == false);
  CHECK(j.contains("failing_triple"));
  CHECK_FALSE(j.contains("lattice"));
}

TEST_CASE("present report on b5") {
  json j = present_report(b5_example());
  CHECK(j["schema"] == "bandq.present.v1");
  CHECK(j["cutoff"] == 3);
  CHECK(j["truncation_rank"] == 6);
  CHECK(j["kernel_rank"] == 1);
  CHECK(j["quiver"]["vertices"] == 2);
  CHECK(j["quiver"]["arrows"].size() == 2);
  for (auto& [k, v] : j["certificates"].items()) CHECK(v == true);
  CHECK(j["hereditary"] == false);
  std::string rel = j["relations_text"].get<std::string>();
  CHECK(rel.find("αβ") != std::string::npos);
  CHECK(j["psi"]["α"] == "-a + ab");
  CHECK(j["psi"]["β"] == "-a + ba");
  for (auto& d : j["elementary_divisors"]) CHECK(d == 1);
}

TEST_CASE("present report is deterministic") {
  json a = present_report(sign_face_monoid(2));
  json b = present_report(sign_face_monoid(2));
  CHECK(a.dump() == b.dump());
}

TEST_CASE("present refuses disconnected bands") {
  CHECK_THROWS_AS(present_report(right_zero(2)), NotConnected);
}

TEST_CASE("verify report passes on the battery") {
  for (const char* spec : {"b5", "free_lrb1:2", "signs:2", "chain:3"}) {
    json j = verify_report(build_from_spec(spec));
    CHECK(verify_all_passed(j));
  }
}

TEST_CASE("verify report on a disconnected band skips the presentation") {
  json j = verify_report(right_zero(2));
  CHECK(verify_all_passed(j));  // skips are not failures
  bool skipped = false;
  for (auto& c : j["checks"])
    if (c["check"] == "presentation" &&
        c["status"].get<std::string>().rfind("skipped", 0) == 0)
      skipped = true;
  CHECK(skipped);
}

TEST_CASE("verify report flags a corrupted table") {
  MulTable t = b5_example();
  t.table[3][4] = 2;  // ab * ba should be a
  json j = verify_report(t);
  CHECK_FALSE(verify_all_passed(j));
}

TEST_CASE("cw report on signs(2)") {
  json j = cw_report_json(sign_face_monoid(2), {});
  CHECK(j["two_cover"] == true);
  CHECK(j["quiver_is_hasse"] == true);
  CHECK(j["kernel_equals_sum_of_2paths"] == true);
  CHECK(j["quotient_rank"] == 9);
  CHECK(j["sign_vector"].is_array());
}

TEST_CASE("dot export mentions every arrow") {
  std::string dot = quiver_dot_spec(b5_example());
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("α") != std::string::npos);
  CHECK(dot.find("β") != std::string::npos);
}
