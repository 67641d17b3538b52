// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

#include "ogl/io.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace ogl {
namespace {

using io::DocumentError;
using io::Json;
using oracle::e;
using oracle::std_span;

DocumentError decode_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const DocumentError& err) {
    return err;
  }
  ADD_FAILURE() << "no DocumentError thrown";
  return DocumentError(DocumentError::Kind::Schema, "", "none");
}

TEST(IoScalar, RoundTripsCanonicalText) {
  for (const char* s : {"0", "3", "-1/2", "i", "-3/4i", "2-3/4i"}) {
    const Scalar x = io::scalar_from_json(Json(s));
    EXPECT_EQ(io::to_json(x), Json(s));
  }
  EXPECT_EQ(io::scalar_from_json(Json(-7)), Scalar(-7));
}

TEST(IoScalar, RejectsFloatsAndGarbage) {
  EXPECT_EQ(decode_error([] { io::scalar_from_json(Json(0.5), "/x"); }).pointer(), "/x");
  EXPECT_EQ(decode_error([] { io::scalar_from_json(Json("1/0")); }).kind(), DocumentError::Kind::Schema);
  EXPECT_THROW(io::scalar_from_json(Json("two")), DocumentError);
  EXPECT_THROW(io::scalar_from_json(Json::array()), DocumentError);
  EXPECT_EQ(decode_error([] { io::rational_from_json(Json("1+i")); }).kind(), DocumentError::Kind::Invariant);
}

TEST(IoSubspace, WritesTheReducedBasis) {
  const Subspace y = Subspace::span({e(4, 1), oracle::add(e(4, 2), e(4, 3))}, 4);
  const Json j = io::to_json(y);
  EXPECT_EQ(j.dump(), R"({"ambient":4,"basis":[["1","0","0","0"],["0","1","1","0"]]})");
  EXPECT_EQ(io::subspace_from_json(j), y);
}

TEST(IoSubspace, RoundTripsRandomSubspaces) {
  Rng rng(71);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + rng.below(5);
    const Subspace x = random_subspace(n, 1 + rng.below(n - 1), rng);
    EXPECT_EQ(io::subspace_from_json(io::parse_text(io::dump(io::to_json(x)))), x);
  }
}

TEST(IoSubspace, AcceptsUnreducedRowsAndTheTag) {
  const Json j = io::parse_text(R"({"type":"subspace","ambient":3,"basis":[["1","1","0"],[2,0,"0"]]})");
  EXPECT_EQ(io::subspace_from_json(j), std_span(3, {1, 2}));
}

TEST(IoSubspace, DependentRowIsAnInvariantError) {
  const Json j = io::parse_text(R"({"ambient":3,"basis":[["1","1","0"],["2","2","0"]]})");
  const auto err = decode_error([&] { io::subspace_from_json(j); });
  EXPECT_EQ(err.kind(), DocumentError::Kind::Invariant);
  EXPECT_EQ(err.pointer(), "/basis/1");
  const Json zero = io::parse_text(R"({"ambient":2,"basis":[["0","0"]]})");
  EXPECT_EQ(decode_error([&] { io::subspace_from_json(zero); }).pointer(), "/basis/0");
}

TEST(IoSubspace, SchemaErrorsNameTheValue) {
  EXPECT_EQ(decode_error([] { io::subspace_from_json(io::parse_text(R"({"ambient":3})")); }).kind(),
            DocumentError::Kind::Schema);
  EXPECT_EQ(decode_error([] {
              io::subspace_from_json(io::parse_text(R"({"ambient":3,"basis":[["1","0"]]})"));
            }).pointer(),
            "/basis/0");
  EXPECT_EQ(decode_error([] {
              io::subspace_from_json(io::parse_text(R"({"ambient":2,"basis":[],"extra":1})"));
            }).message(),
            "unknown key \"extra\"");
  EXPECT_EQ(decode_error([] {
              io::subspace_from_json(io::parse_text(R"({"type":"operator","ambient":2,"basis":[]})"));
            }).pointer(),
            "/type");
  EXPECT_THROW(io::subspace_from_json(io::parse_text(R"({"ambient":-1,"basis":[]})")), DocumentError);
  // The zero subspace is a valid value.
  EXPECT_EQ(io::subspace_from_json(io::parse_text(R"({"ambient":2,"basis":[]})")).dim(), 0u);
}

TEST(IoParse, SyntaxErrorsCarryLineAndColumn) {
  const auto err = decode_error([] { io::parse_text("{\n  \"ambient\": 3,\n  \"basis\": [,]\n}"); });
  EXPECT_EQ(err.kind(), DocumentError::Kind::Syntax);
  EXPECT_EQ(err.line(), 3u);
  EXPECT_EQ(err.column(), 13u);
  EXPECT_NE(std::string(err.what()).find("3:13: syntax error"), std::string::npos);
  const auto eof = decode_error([] { io::parse_text("[1, 2"); });
  EXPECT_EQ(eof.line(), 1u);
}

TEST(IoOperator, RoundTripAndDerivedMultiplicities) {
  const SpectralData s = SpectralData::make({0, 1, 2}, {2, 2, 2});
  const auto a = SelfAdjointOperator::make(s, {std_span(6, {1, 2}), std_span(6, {3, 4}), std_span(6, {5, 6})});
  const Json j = io::to_json(a);
  EXPECT_EQ(j["eigenvalues"], Json::array({"0", "1", "2"}));
  const auto back = io::operator_from_json(io::parse_text(j.dump()));
  EXPECT_EQ(back, a);
  EXPECT_EQ(back.spectral().multiplicities(), (std::vector<std::size_t>{2, 2, 2}));
}

TEST(IoOperator, RejectsBrokenDecompositions) {
  Json j = io::to_json(SelfAdjointOperator::make(SpectralData::make({0, 1}, {1, 1}), {std_span(2, {1}), std_span(2, {2})}));
  Json overlap = j;
  overlap["eigenspaces"][1] = io::to_json(line(Vector{1, 1}));
  EXPECT_EQ(decode_error([&] { io::operator_from_json(overlap); }).kind(), DocumentError::Kind::Invariant);
  Json complex_value = j;
  complex_value["eigenvalues"][0] = "i";
  EXPECT_EQ(decode_error([&] { io::operator_from_json(complex_value); }).pointer(), "/eigenvalues/0");
  Json repeated = j;
  repeated["eigenvalues"][1] = "0";
  EXPECT_THROW(io::operator_from_json(repeated), DocumentError);
  Json short_list = j;
  short_list["eigenvalues"].erase(1);
  EXPECT_EQ(decode_error([&] { io::operator_from_json(short_list); }).kind(), DocumentError::Kind::Schema);
}

TEST(IoUniverse, RoundTripAndChecks) {
  const auto u = johnson_universe(4, 2, GraphKind::Ortho);
  const Json j = io::to_json(u);
  EXPECT_EQ(j["edges"], "ortho");
  EXPECT_EQ(j["vertices"].size(), 6u);
  const auto back = io::universe_from_json(io::parse_text(j.dump()));
  EXPECT_EQ(back.vertices(), u.vertices());
  EXPECT_EQ(back.edge_kind(), GraphKind::Ortho);

  Json dup = j;
  dup["vertices"][1] = dup["vertices"][0];
  EXPECT_EQ(decode_error([&] { io::universe_from_json(dup); }).pointer(), "/vertices");
  Json wrong_k = j;
  wrong_k["k"] = 1;
  EXPECT_EQ(decode_error([&] { io::universe_from_json(wrong_k); }).pointer(), "/vertices/0");
  Json bad_edges = j;
  bad_edges["edges"] = "johnson";
  EXPECT_THROW(io::universe_from_json(bad_edges), DocumentError);
}

TEST(IoFamily, ClosedUnderComplementOnly) {
  const auto fam = PerpClosedFamily::make({std_span(4, {1, 2}), std_span(4, {3, 4})});
  EXPECT_EQ(io::family_from_json(io::to_json(fam)).members(), fam.members());
  Json half = io::to_json(fam);
  half["members"].erase(1);
  EXPECT_EQ(decode_error([&] { io::family_from_json(half); }).kind(), DocumentError::Kind::Invariant);
}

TEST(IoDocument, TaggedPutsTypeFirst) {
  const Json d = io::tagged("subspace", io::to_json(std_span(2, {1})));
  EXPECT_EQ(d.begin().key(), "type");
  EXPECT_EQ(io::subspace_from_json(d), std_span(2, {1}));
}

}  // namespace
}  // namespace ogl
