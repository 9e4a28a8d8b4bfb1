#include <doctest.h>

#include <sstream>

#include "cfp/io.hpp"
#include "cfp/utp.hpp"

using namespace cfp;

namespace {

// a group alone forms a regular (n/2)-gon on the unit circle
void check_group_regular(const SpecialBiangular& sb, const std::vector<int>& group) {
    std::vector<Point> pts;
    for (int r : group) pts.push_back(sb.config.positions[r]);
    Configuration g = Configuration::from_points(pts);
    auto reg = is_regular_ngon(g);
    REQUIRE(reg.has_value());
    CHECK(close(reg->first.radius, 1.0, 1e-9));
}

}  // namespace

TEST_CASE("special biangular circle pins two interleaved regular groups") {
    SpecialBiangular sb = make_special_biangular(10, Angle::turns(1, 20));
    CHECK(sb.config.n() == 10);
    CHECK(close(sb.circle.radius, 1.0, 1e-12));
    CHECK(sb.group_g1.size() == 5);
    CHECK(sb.group_g2.size() == 5);
    check_group_regular(sb, sb.group_g1);
    check_group_regular(sb, sb.group_g2);

    auto desc = biangular(sb.config);
    REQUIRE(desc.has_value());
    CHECK(desc->strict);
    CHECK(angle_eq(desc->alpha, Angle::turns(1, 20), 1e-12));
    CHECK(angle_eq(desc->beta, Angle::turns(3, 20), 1e-12));
}

TEST_CASE("special biangular rejects degenerate alpha") {
    CHECK_THROWS_AS(make_special_biangular(10, Angle::turns(0, 1)), InvalidAlpha);
    CHECK_THROWS_AS(make_special_biangular(10, Angle::turns(1, 10)), InvalidAlpha);
    CHECK_THROWS_AS(make_special_biangular(9, Angle::turns(1, 20)), Error);
}

TEST_CASE("n = 4 special biangular has complementary gaps") {
    // alpha + beta = 4pi/n = pi
    SpecialBiangular sb = make_special_biangular(4, Angle::turns(1, 8));
    auto desc = biangular(sb.config);
    REQUIRE(desc.has_value());
    CHECK(angle_eq(desc->alpha, Angle::turns(1, 8), 1e-12));   // 45 degrees
    CHECK(angle_eq(desc->beta, Angle::turns(3, 8), 1e-12));    // 135 degrees
}

TEST_CASE("stay-put never forces the second group") {
    SpecialBiangular sb = make_special_biangular(10, Angle::turns(1, 20));
    Configuration before = sb.config;
    AdversaryStepResult r = adversary_step(sb, utp_rule("stay-put"));
    CHECK(!r.both_groups);
    CHECK(r.active == sb.group_g1);
    for (int i = 0; i < 10; ++i) {
        CHECK(dist(before.positions[i], sb.config.positions[i]) == 0.0);
    }
}

TEST_CASE("midpoint and bq-analogue trigger the double activation") {
    for (const char* name : {"midpoint", "bq-analogue"}) {
        CAPTURE(name);
        SpecialBiangular sb = make_special_biangular(10, Angle::turns(1, 20));
        AdversaryStepResult r = adversary_step(sb, utp_rule(name));
        CHECK(r.both_groups);
        CHECK(r.uniform);
        CHECK(!r.groups_merged);
        auto desc = biangular(sb.config);
        REQUIRE(desc.has_value());
        CHECK(desc->strict);  // still strict biangular, not regular
        CHECK(!is_regular_ngon(sb.config).has_value());
    }
}

TEST_CASE("rules that leave the circle violate the contract") {
    Rule off_circle = [](const View& v) {
        auto desc = biangular(view_config(v));
        if (!desc || !desc->strict) return MoveDecision::stay(v);
        Point away{v.my_position.x * 2.0, v.my_position.y * 2.0};
        return MoveDecision{away, std::nullopt};
    };
    SpecialBiangular sb = make_special_biangular(10, Angle::turns(1, 20));
    CHECK_THROWS_AS(adversary_step(sb, off_circle), RuleContractViolation);
}

TEST_CASE("moving onto a neighbor merges the groups") {
    // every activated robot jumps to its alpha-neighbor's position
    Rule merge = [](const View& v) {
        Configuration c = view_config(v);
        auto desc = biangular(c);
        if (!desc || !desc->strict) return MoveDecision::stay(v);
        int best = -1;
        double best_gap = 1e9;
        for (size_t i = 0; i < v.others.size(); ++i) {
            double g = angle_ccw(desc->circle.center, v.my_position, v.others[i]).radians();
            if (g < best_gap) {
                best_gap = g;
                best = static_cast<int>(i);
            }
        }
        return MoveDecision{v.others[best], std::nullopt};
    };
    SpecialBiangular sb = make_special_biangular(10, Angle::turns(1, 20));
    AdversaryStepResult r = adversary_step(sb, merge);
    CHECK(r.merge_hazard);
    CHECK(r.groups_merged);

    Certificate cert = demonstrate(merge, 10, Angle::turns(1, 20), 50);
    CHECK(cert.verdict == Verdict::GroupsMerged);
    CHECK(cert.steps_run >= 1);
}

TEST_CASE("demonstrate certifies the reference rules on a small budget") {
    for (const std::string& name : utp_rule_names()) {
        CAPTURE(name);
        Certificate cert = demonstrate(utp_rule(name), 10, Angle::turns(1, 20), 25);
        CHECK(cert.verdict == Verdict::Certified);
        CHECK(cert.steps_run == 25);
        CHECK(cert.n == 10);
        CHECK(cert.budget == 25);
        for (const auto& s : cert.steps) {
            CHECK(s.cls != ConfigKind::RegularNGon);
        }
    }
}

TEST_CASE("the rule registry rejects unknown names") {
    CHECK_THROWS_AS(utp_rule("no-such-rule"), Error);
    auto names = utp_rule_names();
    CHECK(names.size() == 3);
}

TEST_CASE("certificates carry per-step verdict lines") {
    Certificate cert = demonstrate(utp_rule("midpoint"), 12, Angle::turns(1, 36), 8);
    std::ostringstream out;
    write_certificate(cert, out);
    std::string text = out.str();
    CHECK(text.find("cfp-utp-certificate") != std::string::npos);
    CHECK(text.find("not-regular") != std::string::npos);
    CHECK(text.find("certified") != std::string::npos);

    std::ostringstream again;
    write_certificate(cert, again);
    CHECK(text == again.str());
}
