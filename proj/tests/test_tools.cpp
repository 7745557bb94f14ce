#include "doctest.h"

#include <complex>
#include <sstream>

#include "spinsurf/expression.hpp"
#include "spinsurf/io.hpp"
#include "helpers.hpp"

using namespace spinsurf;
using testutil::Rng;

TEST_CASE("expression parser") {
    const std::complex<double> z{2.0, 1.0};
    const std::complex<double> I{0.0, 1.0};

    CHECK(compile_expression("1 + 0.5*zbar")(z) == 1.0 + 0.5 * std::conj(z));
    CHECK(std::abs(compile_expression("exp(i*pi)")(z) + 1.0) <= 1e-15);
    CHECK(compile_expression("z^2")(z) == std::pow(z, 2.0));
    CHECK(compile_expression("conj(z)*z")(z) == std::conj(z) * z);
    CHECK(compile_expression("re(z) + i*im(z)")(z) == z);
    CHECK(compile_expression("x - i*y")(z) == std::conj(z));
    CHECK(compile_expression("-2.5e-1")(z) == std::complex<double>(-0.25, 0.0));
    CHECK(std::abs(compile_expression("sin(z)*sin(z) + cos(z)*cos(z)")(z) - 1.0) <= 1e-14);

    CHECK_THROWS_AS(compile_expression("foo(z)"), std::invalid_argument);
    CHECK_THROWS_AS(compile_expression("1 +"), std::invalid_argument);
    CHECK_THROWS_AS(compile_expression("(1"), std::invalid_argument);
    CHECK_THROWS_AS(compile_expression("1 2"), std::invalid_argument);

    GridDomain d(0.0, 0.0, 1.0, 1.0, 8, 8, false);
    Field f = sample_expression(d, "z*z");
    CHECK(std::abs(f(3, 5) - d.z(3, 5) * d.z(3, 5)) <= 1e-15);
}

TEST_CASE("multivector and matrix JSON round-trips") {
    Rng rng(51);
    auto a = testutil::random_multivector(Signature(1, 3), rng);
    auto back = multivector_from_json(to_json(a));
    CHECK(back == a);

    // blade strings spell ascending generator indices
    auto j = to_json(MultivectorC::blade_from_indices(Signature(1, 3), {0, 1, 3}));
    CHECK(j.at("coeffs").at(0).at(0).get<std::string>() == "013");

    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) m(i, k) = rng.complex_sym();
    CHECK(matrix_from_json<4>(to_json(m)) == m);
}

TEST_CASE("CSV round-trip preserves doubles exactly") {
    Rng rng(52);
    GridDomain d(-1.5, 0.25, 3.0, 2.0, 12, 9, false);
    Field f(d), g(d);
    for (auto& v : f.v) v = rng.complex_sym();
    for (auto& v : g.v) v = rng.complex_sym();

    std::stringstream ss;
    write_csv(ss, d, {{"alpha", &f}, {"beta", &g}}, "convention=conformal");
    const CsvContents c = read_csv(ss);

    CHECK(c.domain == d);
    CHECK(c.extra_meta == "convention=conformal");
    REQUIRE(c.fields.size() == 2);
    CHECK(c.fields[0].first == "alpha");
    CHECK(c.fields[1].first == "beta");
    CHECK(c.fields[0].second.v == f.v);
    CHECK(c.fields[1].second.v == g.v);
}

TEST_CASE("field JSON round-trip") {
    Rng rng(53);
    GridDomain d(0.0, 0.0, 1.0, 1.0, 8, 8, true);
    Field f(d);
    for (auto& v : f.v) v = rng.complex_sym();
    CHECK(field_from_json(to_json(f), d.nx, d.ny).v == f.v);
    CHECK(domain_from_json(to_json(d)) == d);
}
