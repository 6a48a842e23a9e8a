#include "doctest.h"

#include <stdexcept>

#include "corpus.hpp"
#include "f2j/json_io.hpp"
#include "f2j/pipeline.hpp"
#include "test_util.hpp"

using namespace f2j;
using testutil::contains;

namespace {

void round_trip_all(const PipelineArtifacts& art, const std::string& what) {
  REQUIRE(art.code_model.has_value());
  REQUIRE(art.primitives.has_value());
  REQUIRE(art.platform.has_value());
  REQUIRE(art.oo.has_value());

  std::string kdm = to_json(*art.code_model);
  CHECK_MESSAGE(to_json(code_model_from_json(kdm)) == kdm, what + ": kdm round-trip");

  std::string prims = to_json(*art.primitives);
  CHECK_MESSAGE(to_json(primitives_from_json(prims)) == prims, what + ": primitives round-trip");

  std::string platform = to_json(*art.platform);
  CHECK_MESSAGE(to_json(platform_from_json(platform)) == platform,
                what + ": platform round-trip");

  std::string oo = to_json(*art.oo);
  CHECK_MESSAGE(to_json(oo_from_json(oo)) == oo, what + ": oo round-trip");
}

}  // namespace

TEST_CASE("every fixture artifact round-trips byte-identically") {
  round_trip_all(testutil::renew_artifacts(), "renew_grants");
  round_trip_all(testutil::payroll_artifacts(), "payroll");
}

TEST_CASE("serialization is deterministic across repeated dumps") {
  const auto& art = testutil::renew_artifacts();
  CHECK(to_json(*art.code_model) == to_json(*art.code_model));
  CHECK(to_json(*art.primitives) == to_json(*art.primitives));
  CHECK(to_json(*art.platform) == to_json(*art.platform));
  CHECK(to_json(*art.oo) == to_json(*art.oo));
  CHECK(to_json(*art.metrics) == to_json(*art.metrics));
}

TEST_CASE("dumps are pretty-printed with a model tag and trailing newline") {
  const auto& art = testutil::renew_artifacts();
  std::string kdm = to_json(*art.code_model);
  CHECK(kdm.rfind("{\n", 0) == 0);
  CHECK(kdm.back() == '\n');
  CHECK(contains(kdm, "\"model\": \"code\""));
  CHECK(contains(to_json(*art.primitives), "\"model\": \"primitives\""));
  CHECK(contains(to_json(*art.platform), "\"model\": \"platform\""));
  CHECK(contains(to_json(*art.oo), "\"model\": \"oo\""));
  CHECK(contains(to_json(*art.metrics), "\"model\": \"metrics\""));
}

TEST_CASE("metrics JSON carries all six stages") {
  const auto& art = testutil::renew_artifacts();
  std::string text = to_json(*art.metrics);
  CHECK(contains(text, "\"form_name\": \"RENEW_GRANTS\""));
  for (const char* stage : {"forms", "kdm", "primitives", "platform", "oo", "java"})
    CHECK_MESSAGE(contains(text, std::string("\"") + stage + "\": {"), stage);
  CHECK(contains(text, "\"select_into_extra_targets\": 1"));
  CHECK(contains(text, "\"sql_statements\": 5"));
}

TEST_CASE("the CodeModel dump embeds the source for resume re-parsing") {
  const auto& art = testutil::renew_artifacts();
  std::string kdm = to_json(*art.code_model);
  CHECK(contains(kdm, "\"source_text\""));
  CodeModel rebuilt = code_model_from_json(kdm);
  CHECK(rebuilt.source_text == art.code_model->source_text);
  CHECK(rebuilt.form_name == art.code_model->form_name);
  CHECK(rebuilt.elements.size() == art.code_model->elements.size());
}

TEST_CASE("malformed enum values are rejected") {
  const auto& art = testutil::renew_artifacts();
  std::string prims = to_json(*art.primitives);
  auto pos = prims.find("\"kind\": \"WriteTo\"");
  REQUIRE(pos != std::string::npos);
  std::string bad = prims.substr(0, pos) + "\"kind\": \"Teleport\"" +
                    prims.substr(pos + std::string("\"kind\": \"WriteTo\"").size());
  CHECK_THROWS_AS(primitives_from_json(bad), std::runtime_error);

  CHECK_THROWS_AS(primitives_from_json("{ not json"), std::runtime_error);
  CHECK_THROWS_AS(code_model_from_json("[]"), std::runtime_error);
}

TEST_CASE("corpus artifacts round-trip byte-identically") {
  for (std::uint32_t seed : {5u, 19u, 31u}) {
    PipelineArtifacts art =
        run_pipeline(corpus::generate_form(seed), "corpus_json.form");
    REQUIRE(!art.diags.has_errors());
    round_trip_all(art, "seed " + std::to_string(seed));
  }
}
