#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cfp/generator.hpp"
#include "cfp/io.hpp"

using namespace cfp;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/cfp_io_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("config json round-trip preserves points and epsilon") {
    Configuration c = Configuration::from_points({{0.5, -1.25}, {2, 0}, {0, 3}});
    c.epsilon = 1e-7;
    Configuration back = config_from_json(config_to_json(c));
    CHECK(back.n() == 3);
    CHECK(back.epsilon == 1e-7);
    for (int i = 0; i < 3; ++i) {
        CHECK(dist(back.positions[i], c.positions[i]) == 0.0);
    }
    CHECK(!back.exact.has_value());
}

TEST_CASE("config json round-trip preserves the exact block") {
    Configuration c = gen::strict_biangular(10, Angle::turns(1, 20));
    REQUIRE(c.exact.has_value());
    Configuration back = config_from_json(config_to_json(c));
    REQUIRE(back.exact.has_value());
    for (int i = 0; i < 10; ++i) {
        CHECK(back.exact->turns[i] == c.exact->turns[i]);
        CHECK(back.exact->radii[i] == c.exact->radii[i]);
    }
    // the exact block is authoritative: positions are rederived from it
    nlohmann::ordered_json j = config_to_json(c);
    j["points"][0]["x"] = 99.0;
    Configuration fixed = config_from_json(j);
    CHECK(dist(fixed.positions[0], c.positions[0]) < 1e-12);
}

TEST_CASE("config parsing rejects inconsistent and malformed input") {
    nlohmann::ordered_json j = config_to_json(gen::regular_ngon(5));
    j["n"] = 4;
    CHECK_THROWS_AS(config_from_json(j), ParseError);

    TempFile bad("malformed.json");
    {
        std::ofstream out(bad.path);
        out << "{ not json";
    }
    try {
        load_config(bad.path);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find(bad.path) != std::string::npos);
    }

    CHECK_THROWS_AS(load_config("/tmp/cfp_io_test_does_not_exist.json"), Error);
}

TEST_CASE("config files round-trip through disk") {
    TempFile f("config.json");
    Configuration c = gen::quasi_ngon(14, true, 3);
    save_config(c, f.path);
    Configuration back = load_config(f.path);
    CHECK(back.n() == 14);
    for (int i = 0; i < 14; ++i) {
        CHECK(dist(back.positions[i], c.positions[i]) < 1e-12);
    }
}

TEST_CASE("trace files round-trip positions, outcome and class sequence") {
    Configuration f = gen::strict_biangular(12, Angle::turns(1, 36));
    Trace t = run(f, RoundRobin{3}, ngon_step, 200);
    REQUIRE(t.outcome == Outcome::Formed);

    TempFile file("trace.jsonl");
    save_trace(t, file.path);
    Trace back = load_trace(file.path);

    CHECK(back.outcome == t.outcome);
    CHECK(back.formed_step == t.formed_step);
    CHECK(back.class_sequence == t.class_sequence);
    REQUIRE(back.steps.size() == t.steps.size());
    CHECK(back.initial.n() == 12);
    for (size_t s = 0; s < t.steps.size(); ++s) {
        CHECK(back.steps[s].active == t.steps[s].active);
        for (int i = 0; i < 12; ++i) {
            CHECK(dist(back.steps[s].after.positions[i], t.steps[s].after.positions[i]) <
                  1e-12);
        }
    }
}

TEST_CASE("repeated trace serialization is byte-identical") {
    Configuration f = gen::strict_biangular(10, Angle::turns(1, 30));
    Trace t = run(f, SeededRandomFair{9, 3}, ngon_step, 500, random_frames(9));
    std::ostringstream a, b;
    write_trace(t, a);
    write_trace(t, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("cfp-trace") != std::string::npos);
}

TEST_CASE("malformed trace lines carry file and line context") {
    TempFile file("broken.jsonl");
    {
        std::ofstream out(file.path);
        Configuration f = gen::strict_biangular(10, Angle::turns(1, 20));
        Trace t = run(f, Synchronous{}, ngon_step, 5);
        write_trace(t, out);
    }
    // corrupt the second line
    std::ifstream in(file.path);
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    size_t nl = all.find('\n');
    all.insert(nl + 1, "oops ");
    {
        std::ofstream out(file.path);
        out << all;
    }
    try {
        load_trace(file.path);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find(file.path) != std::string::npos);
        CHECK(msg.find("2") != std::string::npos);
    }
}

TEST_CASE("certificate files land on disk with the final verdict") {
    Certificate cert = demonstrate(utp_rule("stay-put"), 10, Angle::turns(1, 20), 5);
    TempFile file("cert.jsonl");
    save_certificate(cert, file.path);
    std::ifstream in(file.path);
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(all.find("cfp-utp-certificate") != std::string::npos);
    CHECK(all.find("\"verdict\":\"certified\"") != std::string::npos);
}
