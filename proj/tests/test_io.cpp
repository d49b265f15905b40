#include <doctest.h>

#include "qlsim/io.hpp"
#include "qlsim/random.hpp"

using namespace qlsim;
using nlohmann::json;

TEST_CASE("generator documents load from either representation") {
    const json gks_doc = {
        {"gks",
         {{"h", {0.0, 0.0, 0.0}},
          {"c",
           {{{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
            {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}},
            {{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}}}}}};
    const GksForm from_gks = io::generator_from_json(gks_doc);
    CHECK(from_gks.h.norm() == 0.0);
    CHECK(from_gks.c.mat()(2, 2) == cxd{1.0, 0.0});

    const json affine_doc = {
        {"affine",
         {{"m", {{-2.0, 0.0, 0.0}, {0.0, -2.0, 0.0}, {0.0, 0.0, 0.0}}},
          {"b", {0.0, 0.0, 0.0}}}}};
    const GksForm from_affine = io::generator_from_json(affine_doc);
    CHECK(from_affine.c.mat().max_abs_diff(from_gks.c.mat()) <= 1e-15);
}

TEST_CASE("generator serialization round trips") {
    Sampler s(127);
    for (int k = 0; k < 100; ++k) {
        const GksForm g = s.gks();
        const json doc = {{"gks", io::gks_to_json(g)}};
        const GksForm back = io::generator_from_json(doc);
        CHECK(back.h.max_abs_diff(g.h) == 0.0);
        CHECK(back.c.mat().max_abs_diff(g.c.mat()) == 0.0);

        const AffineGenerator a = affine_from_gks(g);
        const json adoc = {{"affine", io::affine_to_json(a)}};
        const GksForm back2 = io::generator_from_json(adoc);
        CHECK(back2.c.mat().max_abs_diff(g.c.mat()) <= 1e-12);
    }
}

TEST_CASE("processor spec and bell program round trip") {
    io::ProcessorSpec spec;
    spec.euler = EulerAngles(1.0, 0.3, 0.7);
    spec.program = ProgramState(0.25, 1.5);
    const io::ProcessorSpec back =
        io::processor_spec_from_json(io::processor_spec_to_json(spec));
    CHECK(back.euler.theta == spec.euler.theta);
    CHECK(back.program.epsilon == spec.program.epsilon);
    CHECK(back.program.chi == spec.program.chi);

    Sampler s(131);
    const BellProgram p = s.bell_program();
    const BellProgram q = io::bell_program_from_json(io::bell_program_to_json(p));
    CHECK(q.epsilon == p.epsilon);
    for (int i = 0; i < 3; ++i) CHECK(q.alpha[i] == p.alpha[i]);
}

TEST_CASE("trajectory serialization") {
    AffineGenerator g;
    g.m(0, 0) = g.m(1, 1) = -2.0;
    const Trajectory t = euler_trajectory(g, BlochVector(1, 0, 0), 0.1, 5);

    const Trajectory back = io::trajectory_from_json(io::trajectory_to_json(t));
    REQUIRE(back.times.size() == t.times.size());
    for (std::size_t k = 0; k < t.times.size(); ++k) {
        CHECK(back.times[k] == t.times[k]);
        CHECK(back.states[k].vec().max_abs_diff(t.states[k].vec()) == 0.0);
    }

    const std::string csv = io::trajectory_to_csv(t);
    CHECK(csv.rfind("t,r1,r2,r3\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);  // header + 6 rows
}

TEST_CASE("malformed documents raise usage errors") {
    CHECK_THROWS_AS(io::generator_from_json(json{{"nope", 1}}), UsageError);
    CHECK_THROWS_AS(io::generator_from_json(json{{"gks", {{"h", {1, 2}}}}}),
                    UsageError);
    CHECK_THROWS_AS(io::processor_spec_from_json(json::object()), UsageError);
    CHECK_THROWS_AS(
        io::bell_program_from_json(json{{"epsilon", 0.1}, {"alpha", {1, 2, 3}}}),
        UsageError);
    CHECK_THROWS_AS(io::complex_from_json(json{1.0}), UsageError);
    CHECK_THROWS_AS(io::load_json_file("/nonexistent/file.json"), UsageError);
}
