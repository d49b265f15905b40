#include "qlsim/io.hpp"

#include <fstream>
#include <sstream>

namespace qlsim::io {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw UsageError("input document: " + what);
}

double number_at(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number())
        fail(std::string("missing or non-numeric field '") + field + "'");
    return j[field].get<double>();
}

}  // namespace

json to_json(const cxd& z) { return json::array({z.real(), z.imag()}); }

json to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json to_json(const Mat3& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

namespace {
template <int N>
json cmat_to_json(const CMat<N>& m) {
    json rows = json::array();
    for (int i = 0; i < N; ++i) {
        json row = json::array();
        for (int j = 0; j < N; ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}
}  // namespace

json to_json(const CMat2& m) { return cmat_to_json(m); }
json to_json(const CMat3& m) { return cmat_to_json(m); }

cxd complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail("complex values must be [re, im] arrays");
    return {j[0].get<double>(), j[1].get<double>()};
}

Vec3 vec3_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) fail("expected a 3-element array");
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
        if (!j[i].is_number()) fail("vector entries must be numbers");
        v[i] = j[i].get<double>();
    }
    return v;
}

Mat3 mat3_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) fail("expected a 3x3 matrix");
    Mat3 m;
    for (int i = 0; i < 3; ++i) {
        const Vec3 row = vec3_from_json(j[i]);
        for (int k = 0; k < 3; ++k) m(i, k) = row[k];
    }
    return m;
}

CMat3 cmat3_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) fail("expected a 3x3 complex matrix");
    CMat3 m;
    for (int i = 0; i < 3; ++i) {
        if (!j[i].is_array() || j[i].size() != 3) fail("expected 3 columns");
        for (int k = 0; k < 3; ++k) m(i, k) = complex_from_json(j[i][k]);
    }
    return m;
}

json gks_to_json(const GksForm& g) {
    return json{{"h", to_json(g.h)}, {"c", to_json(g.c.mat())}};
}

json affine_to_json(const AffineGenerator& a) {
    return json{{"m", to_json(a.m)}, {"b", to_json(a.b)}};
}

GksForm generator_from_json(const json& j) {
    if (j.contains("gks")) {
        const json& g = j["gks"];
        if (!g.contains("h") || !g.contains("c")) fail("gks needs 'h' and 'c'");
        GksForm out;
        out.h = vec3_from_json(g["h"]);
        out.c = GksMatrix(cmat3_from_json(g["c"]));
        return out;
    }
    if (j.contains("affine")) {
        const json& a = j["affine"];
        if (!a.contains("m") || !a.contains("b")) fail("affine needs 'm' and 'b'");
        AffineGenerator aff;
        aff.m = mat3_from_json(a["m"]);
        aff.b = vec3_from_json(a["b"]);
        return gks_from_affine(aff);
    }
    fail("generator document needs a 'gks' or 'affine' member");
}

ProcessorSpec processor_spec_from_json(const json& j) {
    if (!j.contains("euler")) fail("processor spec needs an 'euler' member");
    const json& e = j["euler"];
    ProcessorSpec s;
    s.euler = EulerAngles(number_at(e, "theta"), number_at(e, "phi"),
                          number_at(e, "psi"));
    if (j.contains("program")) {
        const json& p = j["program"];
        const double chi = p.contains("chi") ? number_at(p, "chi") : 0.0;
        s.program = ProgramState(number_at(p, "epsilon"), chi);
    }
    return s;
}

json processor_spec_to_json(const ProcessorSpec& s) {
    return json{{"euler",
                 {{"theta", s.euler.theta},
                  {"phi", s.euler.phi},
                  {"psi", s.euler.psi}}},
                {"program",
                 {{"epsilon", s.program.epsilon}, {"chi", s.program.chi}}}};
}

BellProgram bell_program_from_json(const json& j) {
    if (!j.contains("alpha") || !j["alpha"].is_array() || j["alpha"].size() != 3)
        fail("teleport program needs 'alpha' with three [re,im] entries");
    std::array<cxd, 3> alpha;
    for (int i = 0; i < 3; ++i) alpha[i] = complex_from_json(j["alpha"][i]);
    return BellProgram(number_at(j, "epsilon"), alpha);
}

json bell_program_to_json(const BellProgram& p) {
    json alpha = json::array();
    for (const auto& a : p.alpha) alpha.push_back(to_json(a));
    return json{{"epsilon", p.epsilon}, {"alpha", alpha}};
}

json trajectory_to_json(const Trajectory& t) {
    json points = json::array();
    for (std::size_t k = 0; k < t.times.size(); ++k)
        points.push_back(
            {{"t", t.times[k]}, {"r", to_json(t.states[k].vec())}});
    return json{{"schema_version", kSchemaVersion},
                {"dt", t.step},
                {"points", points}};
}

std::string trajectory_to_csv(const Trajectory& t) {
    std::ostringstream out;
    out.precision(17);
    out << "t,r1,r2,r3\n";
    for (std::size_t k = 0; k < t.times.size(); ++k) {
        const auto& r = t.states[k];
        out << t.times[k] << ',' << r[0] << ',' << r[1] << ',' << r[2] << '\n';
    }
    return out.str();
}

Trajectory trajectory_from_json(const json& j) {
    if (!j.contains("points") || !j["points"].is_array())
        fail("trajectory needs a 'points' array");
    Trajectory t;
    t.step = j.contains("dt") ? j["dt"].get<double>() : 0.0;
    for (const auto& p : j["points"]) {
        t.times.push_back(number_at(p, "t"));
        t.states.push_back(BlochVector(vec3_from_json(p["r"])));
    }
    return t;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("parse error in " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open output file: " + path);
    out << text;
}

}  // namespace qlsim::io
