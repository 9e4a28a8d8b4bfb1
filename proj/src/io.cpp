#include "cfp/io.hpp"

#include <fstream>
#include <sstream>


namespace cfp {

using json = nlohmann::ordered_json;

namespace {

json point_to_json(const Point& p) { return json{{"x", p.x}, {"y", p.y}}; }

Point point_from_json(const json& j) {
    return Point{j.at("x").get<double>(), j.at("y").get<double>()};
}

json positions_to_json(const Configuration& c) {
    json arr = json::array();
    for (const auto& p : c.positions) arr.push_back(point_to_json(p));
    return arr;
}

}  // namespace

json config_to_json(const Configuration& config) {
    json j;
    j["n"] = config.n();
    j["epsilon"] = config.epsilon;
    j["points"] = positions_to_json(config);
    if (config.exact) {
        json ex;
        ex["center"] = point_to_json(config.exact->center);
        json robots = json::array();
        for (size_t i = 0; i < config.exact->turns.size(); ++i) {
            robots.push_back(json{{"turns_num", config.exact->turns[i].num()},
                                  {"turns_den", config.exact->turns[i].den()},
                                  {"radius", config.exact->radii[i]}});
        }
        ex["robots"] = std::move(robots);
        j["exact"] = std::move(ex);
    }
    return j;
}

Configuration config_from_json(const json& j) {
    try {
        double eps = j.value("epsilon", 1e-9);
        if (j.contains("exact")) {
            const json& ex = j.at("exact");
            Point center = point_from_json(ex.at("center"));
            std::vector<std::pair<Rational, double>> polar;
            for (const auto& r : ex.at("robots")) {
                polar.emplace_back(
                    Rational(r.at("turns_num").get<long long>(), r.at("turns_den").get<long long>()),
                    r.at("radius").get<double>());
            }
            Configuration c = Configuration::from_polar(center, std::move(polar), eps);
            if (j.contains("n") && j.at("n").get<int>() != c.n()) {
                throw ParseError("config: field 'n' disagrees with exact robot count");
            }
            return c;
        }
        std::vector<Point> pts;
        for (const auto& p : j.at("points")) pts.push_back(point_from_json(p));
        if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(pts.size())) {
            throw ParseError("config: field 'n' disagrees with point count");
        }
        return Configuration::from_points(std::move(pts), eps);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
}

void save_config(const Configuration& config, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error("cannot open for writing: " + path);
    f << config_to_json(config).dump(2) << "\n";
}

Configuration load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open: " + path);
    json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return config_from_json(j);
}

void write_trace(const Trace& trace, std::ostream& out) {
    json header;
    header["type"] = "header";
    header["format"] = "cfp-trace";
    header["version"] = 1;
    header["n"] = trace.initial.n();
    header["epsilon"] = trace.initial.epsilon;
    header["initial"] = config_to_json(trace.initial);
    out << header.dump() << "\n";
    for (size_t i = 0; i < trace.steps.size(); ++i) {
        const StepRecord& rec = trace.steps[i];
        json s;
        s["type"] = "step";
        s["t"] = static_cast<int>(i);
        s["active"] = rec.active;
        json targets = json::array();
        for (const auto& [r, p] : rec.targets) {
            targets.push_back(json{{"robot", r}, {"x", p.x}, {"y", p.y}});
        }
        s["targets"] = std::move(targets);
        s["after"] = config_to_json(rec.after);
        s["class_after"] = to_string(trace.class_sequence[i + 1]);
        if (!rec.warnings.empty()) s["warnings"] = rec.warnings;
        out << s.dump() << "\n";
    }
    json footer;
    footer["type"] = "outcome";
    footer["outcome"] = to_string(trace.outcome);
    footer["formed_step"] = trace.formed_step;
    json classes = json::array();
    for (auto k : trace.class_sequence) classes.push_back(to_string(k));
    footer["class_sequence"] = std::move(classes);
    out << footer.dump() << "\n";
}

void save_trace(const Trace& trace, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error("cannot open for writing: " + path);
    write_trace(trace, f);
}

namespace {

ConfigKind kind_from_string(const std::string& s) {
    for (auto k : {ConfigKind::RegularNGon, ConfigKind::StrictBiangular, ConfigKind::QuasiAligned,
                   ConfigKind::QuasiArbitrary, ConfigKind::Arbitrary}) {
        if (to_string(k) == s) return k;
    }
    throw ParseError("unknown configuration class: " + s);
}

}  // namespace

Trace load_trace(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open: " + path);
    Trace trace;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    Configuration current;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        const std::string type = j.value("type", "");
        if (type == "header") {
            if (j.value("format", "") != "cfp-trace") {
                throw ParseError(path + ":" + std::to_string(lineno) + ": not a cfp-trace file");
            }
            trace.initial = config_from_json(j.at("initial"));
            current = trace.initial;
            trace.class_sequence.push_back(classify(current).kind);
            have_header = true;
        } else if (type == "step") {
            if (!have_header) {
                throw ParseError(path + ":" + std::to_string(lineno) + ": step before header");
            }
            StepRecord rec;
            rec.before = current;
            rec.active = j.at("active").get<std::vector<int>>();
            for (const auto& t : j.at("targets")) {
                rec.targets.emplace_back(t.at("robot").get<int>(), point_from_json(t));
            }
            rec.after = config_from_json(j.at("after"));
            if (j.contains("warnings")) {
                rec.warnings = j.at("warnings").get<std::vector<std::string>>();
            }
            current = rec.after;
            trace.class_sequence.push_back(kind_from_string(j.at("class_after").get<std::string>()));
            trace.steps.push_back(std::move(rec));
        } else if (type == "outcome") {
            const std::string o = j.at("outcome").get<std::string>();
            if (o == "Formed") trace.outcome = Outcome::Formed;
            else if (o == "Quiescent") trace.outcome = Outcome::Quiescent;
            else trace.outcome = Outcome::BudgetExhausted;
            trace.formed_step = j.value("formed_step", -1);
        }
    }
    if (!have_header) throw ParseError(path + ": missing trace header");
    return trace;
}

void write_certificate(const Certificate& cert, std::ostream& out) {
    json header;
    header["type"] = "header";
    header["format"] = "cfp-utp-certificate";
    header["version"] = 1;
    header["n"] = cert.n;
    header["alpha"] = cert.alpha.str();
    if (cert.alpha.exact()) {
        header["alpha_turns_num"] = cert.alpha.turns_exact().num();
        header["alpha_turns_den"] = cert.alpha.turns_exact().den();
    }
    header["budget"] = cert.budget;
    out << header.dump() << "\n";
    for (const auto& s : cert.steps) {
        json j;
        j["type"] = "step";
        j["t"] = s.step;
        j["class"] = to_string(s.cls);
        j["verdict"] = s.cls == ConfigKind::RegularNGon ? "regular" : "not-regular";
        j["both_groups"] = s.both_groups;
        if (s.merge_hazard) j["merge_hazard"] = true;
        out << j.dump() << "\n";
    }
    json footer;
    footer["type"] = "verdict";
    footer["verdict"] = to_string(cert.verdict);
    footer["steps_run"] = cert.steps_run;
    if (!cert.message.empty()) footer["message"] = cert.message;
    out << footer.dump() << "\n";
}

void save_certificate(const Certificate& cert, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error("cannot open for writing: " + path);
    write_certificate(cert, f);
}

}  // namespace cfp
