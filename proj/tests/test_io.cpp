#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "cavrotor/io.hpp"

using namespace cavrotor;

TEST_CASE("numeric formatting keeps at least 12 significant digits") {
    const double v = 1.0 / 3.0;
    const std::string s = CsvTable::num(v);
    CHECK(std::stod(s) == doctest::Approx(v).epsilon(1e-14));
    CHECK(s.find("3.333333333333") != std::string::npos);
    CHECK(CsvTable::num(42) == std::string("42"));
}

TEST_CASE("csv body assembly and determinism") {
    CsvTable t;
    t.set_header({"a", "b"});
    t.add_row({CsvTable::num(0.1), CsvTable::num(2)});
    t.add_row({"x", "y"});
    CsvTable t2 = t;
    CHECK(t.body() == t2.body());
    std::istringstream in(t.body());
    std::string line;
    std::getline(in, line);
    CHECK(line == "a,b");
    std::getline(in, line);
    CHECK(line.find("1.0") != std::string::npos);
    CHECK(t.rows() == 2);
}

TEST_CASE("csv write is all-or-nothing") {
    CsvTable t;
    t.set_header({"x"});
    t.add_row({CsvTable::num(1.5)});
    const std::string path = "/tmp/cavrotor_io_test.csv";
    t.write(path);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == t.body());
    std::remove(path.c_str());
}

TEST_CASE("parameter json roundtrip") {
    ModelParams p;
    p.delta = 0.7;
    p.g = 1.3;
    p.b_field = -0.2;
    p.inertia = 123.5;
    p.n_dimers = 3;
    p.scaling = CouplingScaling::constant_volume;
    ModelParams q = params_from_json(params_to_json(p));
    CHECK(q.delta == doctest::Approx(p.delta));
    CHECK(q.g == doctest::Approx(p.g));
    CHECK(q.b_field == doctest::Approx(p.b_field));
    CHECK(q.inertia == doctest::Approx(p.inertia));
    CHECK(q.n_dimers == p.n_dimers);
    CHECK(q.scaling == p.scaling);

    // the frozen-rotor limit survives serialization
    p.inertia = std::numeric_limits<double>::infinity();
    CHECK(std::isinf(params_from_json(params_to_json(p)).inertia));
}

TEST_CASE("truncation json roundtrip") {
    TruncationSpec t;
    t.n_max = 11;
    t.k_max = 7;
    t.sector = -2;
    TruncationSpec u = trunc_from_json(trunc_to_json(t));
    CHECK(u.n_max == t.n_max);
    CHECK(u.k_max == t.k_max);
    REQUIRE(u.sector.has_value());
    CHECK(*u.sector == -2);
}

TEST_CASE("json file roundtrip") {
    nlohmann::json j;
    j["tool"] = kToolVersion;
    j["value"] = 0.25;
    const std::string path = "/tmp/cavrotor_io_test.json";
    write_json(path, j);
    nlohmann::json k = read_json(path);
    CHECK(k["tool"] == kToolVersion);
    CHECK(double(k["value"]) == doctest::Approx(0.25));
    std::remove(path.c_str());
}
