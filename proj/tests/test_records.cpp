#include <doctest.h>

#include "poincare/checks.hpp"
#include "poincare/errors.hpp"
#include "poincare/records.hpp"

using namespace poincare;
using namespace poincare::records;

TEST_CASE("complex parsing") {
    CHECK(parse_complex("0.3+1.7i") == Complex(0.3, 1.7));
    CHECK(parse_complex("2.4i") == Complex(0.0, 2.4));
    CHECK(parse_complex("i") == Complex(0.0, 1.0));
    CHECK(parse_complex("-i") == Complex(0.0, -1.0));
    CHECK(parse_complex("3") == Complex(3.0, 0.0));
    CHECK(parse_complex("-1-2i") == Complex(-1.0, -2.0));
    CHECK(parse_complex("1e-3+2e1i") == Complex(1e-3, 20.0));
    CHECK(parse_complex("0.5+i") == Complex(0.5, 1.0));
    CHECK_THROWS_AS(parse_complex("1+2"), DomainError);
    CHECK_THROWS_AS(parse_complex("abc"), DomainError);
    CHECK_THROWS_AS(parse_complex(""), DomainError);
}

TEST_CASE("format round trip") {
    for (Complex z : {Complex(0.3, 1.7), Complex(-1.0, -2.5), Complex(0.1, 0.0), Complex(0.0, 2.4)})
        CHECK(parse_complex(format_complex(z)) == z);
}

TEST_CASE("grids") {
    CHECK(parse_grid("1,2.5,4") == std::vector<double>{1.0, 2.5, 4.0});
    CHECK(parse_grid("0:1:5") == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    CHECK(parse_grid("2:9:1") == std::vector<double>{2.0});
    CHECK_THROWS_AS(parse_grid("0:1:0"), DomainError);
    CHECK_THROWS_AS(parse_grid("0:1"), DomainError);
    CHECK_THROWS_AS(parse_grid("1,,2"), DomainError);
}

TEST_CASE("kernel record fields") {
    kernels::KernelValue v;
    v.value = Complex(1.5, -0.25);
    v.tail_bound = 1e-3;
    v.terms_used = 42;
    const Json j = kernel_record(geom::Point(0.3, 1.7), geom::Point(0, 2.4), 3.0, 0.5, 50.0, v);
    const std::vector<std::string> keys = {"z", "w", "s_re", "s_im", "k", "R",
                                           "value_re", "value_im", "tail_bound", "terms_used"};
    std::vector<std::string> got;
    for (auto it = j.begin(); it != j.end(); ++it) got.push_back(it.key());
    CHECK(got == keys);
    CHECK(j["z"] == "0.3+1.7i");
    CHECK(j["terms_used"] == 42);
}

TEST_CASE("ball rows round trip") {
    const auto ball = fuchsian::enumerate_ball(geom::Point(0, 1), geom::Point(0, 1), 2.0);
    const Json rows = ball_rows(ball);
    CHECK(rows.size() == ball.elements.size());
    CHECK(parse_ball_rows(Json::parse(rows.dump())) == ball.elements);
    CHECK_THROWS_AS(parse_ball_rows(Json::parse("[[1,2,3]]")), DomainError);
    CHECK_THROWS_AS(parse_ball_rows(Json::parse("[[1,1,1,1]]")), DomainError);
}

TEST_CASE("suite registry and report shape") {
    CHECK(checks::suite_names().size() == 14);
    CHECK_THROWS_AS(checks::run_suite("nope", {}), UnknownSuite);
    const checks::CheckConfig cfg{0.5, 99};
    const auto a = checks::report_json(checks::run_suites("multiplier", cfg), cfg);
    const auto b = checks::report_json(checks::run_suites("multiplier", cfg), cfg);
    CHECK(a.dump() == b.dump());
    CHECK(a["schema"] == 1);
    CHECK(a["pass"] == true);
    for (const auto& e : a["suites"][0]["assertions"]) {
        CHECK(e.contains("tolerance"));
        CHECK(e.contains("anchor"));
        CHECK(e.contains("measured"));
    }
}
