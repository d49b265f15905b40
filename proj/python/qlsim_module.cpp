#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qlsim/evolution.hpp"
#include "qlsim/verify.hpp"
#include "qlsim/random.hpp"

namespace py = pybind11;
using namespace qlsim;

namespace {

// list-of-lists views keep the module dependency-free on the python side

py::list mat2_to_py(const CMat2& m) {
    py::list rows;
    for (int i = 0; i < 2; ++i) {
        py::list row;
        for (int j = 0; j < 2; ++j) row.append(m(i, j));
        rows.append(row);
    }
    return rows;
}

py::list mat3c_to_py(const CMat3& m) {
    py::list rows;
    for (int i = 0; i < 3; ++i) {
        py::list row;
        for (int j = 0; j < 3; ++j) row.append(m(i, j));
        rows.append(row);
    }
    return rows;
}

py::list mat3_to_py(const Mat3& m) {
    py::list rows;
    for (int i = 0; i < 3; ++i) {
        py::list row;
        for (int j = 0; j < 3; ++j) row.append(m(i, j));
        rows.append(row);
    }
    return rows;
}

py::list vec3_to_py(const Vec3& v) {
    py::list out;
    for (int i = 0; i < 3; ++i) out.append(v[i]);
    return out;
}

CMat2 mat2_from_py(const std::vector<std::vector<cxd>>& rows) {
    if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
        throw UsageError("expected a 2x2 matrix");
    CMat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = rows[i][j];
    return m;
}

CMat3 mat3c_from_py(const std::vector<std::vector<cxd>>& rows) {
    if (rows.size() != 3) throw UsageError("expected a 3x3 matrix");
    CMat3 m;
    for (int i = 0; i < 3; ++i) {
        if (rows[i].size() != 3) throw UsageError("expected 3 columns");
        for (int j = 0; j < 3; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Mat3 mat3_from_py(const std::vector<std::vector<double>>& rows) {
    if (rows.size() != 3) throw UsageError("expected a 3x3 matrix");
    Mat3 m;
    for (int i = 0; i < 3; ++i) {
        if (rows[i].size() != 3) throw UsageError("expected 3 columns");
        for (int j = 0; j < 3; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec3 vec3_from_py(const std::vector<double>& v) {
    if (v.size() != 3) throw UsageError("expected a 3-vector");
    return Vec3{{v[0], v[1], v[2]}};
}

GksForm gks_from_py(const std::vector<double>& h,
                    const std::vector<std::vector<cxd>>& c) {
    GksForm g;
    g.h = vec3_from_py(h);
    g.c = GksMatrix(mat3c_from_py(c));
    return g;
}

AffineGenerator affine_from_py(const std::vector<std::vector<double>>& m,
                               const std::vector<double>& b) {
    AffineGenerator a;
    a.m = mat3_from_py(m);
    a.b = vec3_from_py(b);
    return a;
}

std::array<cxd, 3> alpha_from_py(const std::vector<cxd>& alpha) {
    if (alpha.size() != 3) throw UsageError("expected three alpha amplitudes");
    return {alpha[0], alpha[1], alpha[2]};
}

}  // namespace

PYBIND11_MODULE(_qlsim, m) {
    m.doc() = "Single-qubit Markovian generator simulation kernel";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<InvalidStateError>(m, "InvalidStateError",
                                              PyExc_ValueError);
    py::register_exception<InvalidChannelError>(m, "InvalidChannelError",
                                                PyExc_ValueError);
    py::register_exception<StepTooLargeError>(m, "StepTooLargeError",
                                              PyExc_RuntimeError);

    m.def("pauli", [](int i) { return mat2_to_py(pauli(i)); });

    m.def("bloch_from_density", [](const std::vector<std::vector<cxd>>& rho) {
        return vec3_to_py(
            bloch_from_density(DensityMatrix(mat2_from_py(rho))).vec());
    });
    m.def("density_from_bloch", [](const std::vector<double>& r) {
        return mat2_to_py(density_from_bloch(BlochVector(vec3_from_py(r))).mat());
    });
    m.def("apply_kraus", [](const std::vector<std::vector<std::vector<cxd>>>& ops,
                            const std::vector<std::vector<cxd>>& rho) {
        std::vector<CMat2> kraus;
        kraus.reserve(ops.size());
        for (const auto& op : ops) kraus.push_back(mat2_from_py(op));
        return mat2_to_py(
            apply_kraus(kraus, DensityMatrix(mat2_from_py(rho))).mat());
    });

    m.def("apply_generator", [](const std::vector<double>& h,
                                const std::vector<std::vector<cxd>>& c,
                                const std::vector<std::vector<cxd>>& rho) {
        return mat2_to_py(apply_generator(gks_from_py(h, c),
                                          DensityMatrix(mat2_from_py(rho))));
    });
    m.def("affine_from_gks", [](const std::vector<double>& h,
                                const std::vector<std::vector<cxd>>& c) {
        const AffineGenerator a = affine_from_gks(gks_from_py(h, c));
        return py::make_tuple(mat3_to_py(a.m), vec3_to_py(a.b));
    });
    m.def("gks_from_affine", [](const std::vector<std::vector<double>>& mm,
                                const std::vector<double>& b) {
        const GksForm g = gks_from_affine(affine_from_py(mm, b));
        return py::make_tuple(vec3_to_py(g.h), mat3c_to_py(g.c.mat()));
    });
    m.def("is_markovian", [](const std::vector<std::vector<cxd>>& c) {
        return validate_gks(GksMatrix(mat3c_from_py(c))) ==
               GksClassification::ValidMarkovian;
    });
    m.def("is_unital", [](const std::vector<std::vector<double>>& mm,
                          const std::vector<double>& b) {
        return is_unital(affine_from_py(mm, b));
    });
    m.def("conjugate_gks", [](const std::vector<std::vector<cxd>>& c,
                              const std::vector<std::vector<double>>& r) {
        return mat3c_to_py(
            conjugate_gks(GksMatrix(mat3c_from_py(c)), mat3_from_py(r)).mat());
    });

    m.def("su2_from_euler", [](double theta, double phi, double psi) {
        return mat2_to_py(su2_from_euler(EulerAngles(theta, phi, psi)));
    });
    m.def("adjoint_rotation", [](double theta, double phi, double psi) {
        return mat3_to_py(adjoint_rotation(EulerAngles(theta, phi, psi)));
    });
    m.def("processor_step",
          [](double epsilon, double chi, double theta, double phi, double psi,
             const std::vector<std::vector<cxd>>& rho) {
              return mat2_to_py(
                  processor_step_closed(ProgramState(epsilon, chi),
                                        su2_from_euler(EulerAngles(theta, phi, psi)),
                                        DensityMatrix(mat2_from_py(rho)))
                      .mat());
          });
    m.def("scheme_hamiltonian", [](double theta, double phi, double psi) {
        return vec3_to_py(scheme_hamiltonian(EulerAngles(theta, phi, psi)));
    });
    m.def("scheme_gks", [](double theta, double phi, double psi) {
        return mat3c_to_py(scheme_gks(EulerAngles(theta, phi, psi)).mat());
    });
    m.def("scheme_gks_traceless", [](double theta, double phi) {
        return mat3c_to_py(scheme_gks_traceless(theta, phi).mat());
    });
    m.def("phase_damping_axis", [](double theta, double phi) {
        return vec3_to_py(phase_damping_axis(theta, phi));
    });

    m.def("teleport_channel", [](double epsilon, const std::vector<cxd>& alpha,
                                 const std::vector<std::vector<cxd>>& rho) {
        return mat2_to_py(
            teleport_channel_closed(BellProgram(epsilon, alpha_from_py(alpha)),
                                    DensityMatrix(mat2_from_py(rho)))
                .mat());
    });
    m.def("teleport_gks", [](const std::vector<cxd>& alpha) {
        return mat3c_to_py(teleport_gks(alpha_from_py(alpha)).mat());
    });

    m.def("euler_trajectory",
          [](const std::vector<std::vector<double>>& mm,
             const std::vector<double>& b, const std::vector<double>& r0,
             double dt, std::size_t steps) {
              const Trajectory t =
                  euler_trajectory(affine_from_py(mm, b),
                                   BlochVector(vec3_from_py(r0)), dt, steps);
              py::list points;
              for (std::size_t k = 0; k < t.times.size(); ++k)
                  points.append(py::make_tuple(t.times[k],
                                               vec3_to_py(t.states[k].vec())));
              return points;
          });
    m.def("exact_channel", [](const std::vector<std::vector<double>>& mm,
                              const std::vector<double>& b, double t) {
        const AffineChannel c = exact_channel(affine_from_py(mm, b), t);
        return py::make_tuple(mat3_to_py(c.m), vec3_to_py(c.b));
    });

    m.def("run_verification", [](std::uint64_t seed, std::size_t cases) {
        VerifyOptions opt;
        opt.seed = seed;
        opt.cases = cases;
        py::list out;
        for (const auto& r : run_verification(opt)) {
            py::dict d;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["max_error"] = r.max_error;
            d["threshold"] = r.threshold;
            d["cases"] = r.cases;
            out.append(d);
        }
        return out;
    }, py::arg("seed") = 20240901, py::arg("cases") = 200);
}
