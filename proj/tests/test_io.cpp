#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include <parcubic/io.hpp>

#include "test_support.hpp"

using namespace parcubic;

namespace {

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(IoAlgebra, RoundTripsCatalog) {
    for (const auto& e : list_catalog()) {
        const auto m = builtin(e.key);
        const json j = to_json(m);
        EXPECT_EQ(algebra_from_json(json::parse(j.dump())).metrised(), m) << e.key.name;
    }
}

TEST(IoAlgebra, OneBasedIndicesOnDisk) {
    const json j = to_json(cayley(2));
    EXPECT_EQ(j.dump(), R"({"dim":2,"k":[[1,1,2,"1"]],"gamma":[["0","1"],["1","0"]]})");
}

TEST(IoAlgebra, AcceptsIntegersAndRationals) {
    const auto f = algebra_from_json(json::parse(R"({"dim": 2, "k": [[1, 1, 2, -2], [1, 2, 1, "3/6"]]})"));
    EXPECT_FALSE(f.gamma.has_value());
    EXPECT_EQ(f.algebra.k(0, 0, 1), -2);
    EXPECT_EQ(f.algebra.k(1, 0, 0), ratio(1, 2));
    EXPECT_THROW(f.metrised(), ParseError);
}

TEST(IoAlgebra, FieldDiagnostics) {
    EXPECT_NE(error_of([] { algebra_from_json(json::parse(R"({"k": []})")); }).find("dim"), std::string::npos);
    EXPECT_NE(error_of([] { algebra_from_json(json::parse(R"({"dim": 2, "k": [[1,1,2,"1"],[1,3,1,"1"]]})")); })
                  .find("k[1][1]"),
              std::string::npos);
    EXPECT_NE(error_of([] { algebra_from_json(json::parse(R"({"dim": 2, "k": [[1,1,2,"x"]]})")); }).find("k[0][3]"),
              std::string::npos);
    EXPECT_NE(error_of([] { algebra_from_json(json::parse(R"({"dim": 2, "k": [[2,1,1,"1"]]})")); }).find("alpha > beta"),
              std::string::npos);
    EXPECT_NE(error_of([] { algebra_from_json(json::parse(R"({"dim": 1, "k": [[1,1,1,"1"],[1,1,1,"2"]]})")); })
                  .find("duplicate"),
              std::string::npos);
    EXPECT_NE(error_of([] { algebra_from_json(json::parse(R"({"dim": 2, "gamma": [["1","0"],["0"]]})")); })
                  .find("gamma[1]"),
              std::string::npos);
    EXPECT_NE(error_of([] { algebra_from_json(json::parse(R"({"dim": 2, "gamma": [["1"]]})")); }).find("gamma"),
              std::string::npos);
}

TEST(IoJson, SyntaxErrorsReportLineAndColumn) {
    const std::string text = "{\n  \"dim\": 2,\n  \"k\": [1,\n}";
    const std::string msg = error_of([&] { parse_json_text(text, "bad.json"); });
    EXPECT_NE(msg.find("bad.json: line 4"), std::string::npos) << msg;
}

TEST(IoJson, LoadsFileFromDisk) {
    const std::string path = ::testing::TempDir() + "parcubic_io_test.json";
    {
        std::ofstream out(path);
        out << to_json(builtin("algebras4.2")).dump(2);
    }
    EXPECT_EQ(load_algebra_file(path).metrised(), builtin("algebras4.2"));
    std::remove(path.c_str());
    EXPECT_NE(error_of([&] { load_algebra_file(path); }).find("cannot open"), std::string::npos);
}

TEST(IoSurface, TextAndTermsForms) {
    const Surface s1 = surface_from_json(json::parse(R"({"polynomial": "x1*x2 - 1/3*x1^3", "mode": "hatC"})"));
    EXPECT_EQ(s1.F(), generate_surface(cayley(2), SurfaceMode::hatC).F());
    EXPECT_EQ(s1.mode(), SurfaceMode::hatC);
    const Surface s2 = surface_from_json(json::parse(to_json(generate_surface(cayley(3), SurfaceMode::nablaK)).dump()));
    EXPECT_EQ(s2.F(), generate_surface(cayley(3), SurfaceMode::nablaK).F());
    EXPECT_EQ(s2.mode(), SurfaceMode::nablaK);
    ASSERT_TRUE(s2.source().has_value());
    EXPECT_EQ(*s2.source(), cayley(3));
    const Surface s3 = surface_from_json(json::parse(R"({"nvars": 3, "polynomial": "1/2*x1^2"})"));
    EXPECT_EQ(s3.dim(), 3u);
    EXPECT_THROW(surface_from_json(json::parse(R"({"mode": "hatC"})")), ParseError);
    EXPECT_THROW(surface_from_json(json::parse(R"({"polynomial": "x1 + x1^2"})")), PreconditionError);
}

TEST(IoPolynomial, RoundTrip) {
    const Polynomial p = parse_polynomial("x1*x3 - 2/7*x2^3 + x1^4", 3);
    EXPECT_EQ(polynomial_from_json(to_json(p)), p);
    EXPECT_THROW(polynomial_from_json(json::parse(R"({"nvars": 2, "terms": [{"exponents": [1], "coeff": "1"}]})")),
                 ParseError);
}

TEST(IoReports, Shapes) {
    const json v = to_json(validate(builtin("algebras5.1")));
    EXPECT_EQ(v["jordan"], true);
    EXPECT_EQ(v["signature"], json::parse("[3,2]"));
    EXPECT_EQ(v["det_gamma"], "1");
    EXPECT_EQ(v["failures"].size(), 0u);

    const json c = to_json(semi_canonicalize(builtin("algebras5.4")));
    EXPECT_EQ(c["partition"], json::parse("[[1,5],[2,4],[3]]"));

    const json r = to_json(verify_pde(generate_surface(cayley(2), SurfaceMode::hatC), PdeKind::hatC, 3, 42));
    EXPECT_EQ(r["seed"], 42);
    EXPECT_EQ(r["points"].size(), 3u);
    EXPECT_EQ(r["passed"], true);
    EXPECT_EQ(r["points"][0]["max_abs_residual"], "0");
}

TEST(IoVector, FromText) {
    EXPECT_EQ(vector_from_text("1/2,-3,0"), (Vector{ratio(1, 2), Rational(-3), Rational(0)}));
    EXPECT_THROW(vector_from_text("1,a"), ParseError);
}
