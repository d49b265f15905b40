#pragma once

#include <string>

#include <json.hpp>

#include "qlsim/evolution.hpp"
#include "qlsim/processor.hpp"
#include "qlsim/teleport.hpp"

namespace qlsim::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Complex numbers serialize as [re, im]; matrices as row-major nested arrays.
json to_json(const cxd& z);
json to_json(const Vec3& v);
json to_json(const Mat3& m);
json to_json(const CMat2& m);
json to_json(const CMat3& m);

cxd complex_from_json(const json& j);
Vec3 vec3_from_json(const json& j);
Mat3 mat3_from_json(const json& j);
CMat3 cmat3_from_json(const json& j);

json gks_to_json(const GksForm& g);
json affine_to_json(const AffineGenerator& a);

/// Generator document: {"gks": {"h": [...], "c": [[[re,im]...]...]}} or
/// {"affine": {"m": [[...]], "b": [...]}}. Either loads to a GksForm.
GksForm generator_from_json(const json& j);

/// {"euler": {"theta": t, "phi": p, "psi": s}, "program": {"epsilon": e, "chi": c}}
struct ProcessorSpec {
    EulerAngles euler{0.0, 0.0, 0.0};
    ProgramState program{0.0, 0.0};
};
ProcessorSpec processor_spec_from_json(const json& j);
json processor_spec_to_json(const ProcessorSpec& s);

/// {"epsilon": e, "alpha": [[re,im],[re,im],[re,im]]}
BellProgram bell_program_from_json(const json& j);
json bell_program_to_json(const BellProgram& p);

json trajectory_to_json(const Trajectory& t);
std::string trajectory_to_csv(const Trajectory& t);
Trajectory trajectory_from_json(const json& j);

/// Parse failures raise UsageError with the offending field in the message.
json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qlsim::io
