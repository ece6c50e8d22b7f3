#pragma once

#include <json.hpp>

#include "dehnkit/checkerboard.hpp"
#include "dehnkit/matrix.hpp"
#include "dehnkit/presentation.hpp"

namespace dehnkit {

using Json = nlohmann::ordered_json;

Json to_json(const LinkDiagram& d);
Json to_json(const Face& f);
Json to_json(const Shading& s);
Json to_json(const CheckerboardGraph& g, const Shading& s);
Json to_json(const Presentation& p);
Json to_json(const IntMatrix& m);
Json to_json(const LaurentMatrix& m);

/// Accepts the object produced by to_json(LinkDiagram) or a bare PD string.
LinkDiagram diagram_from_json(const Json& j);
/// Reads "outer_face" from a diagram object, if present.
ShadeOptions shade_options_from_json(const Json& j);

IntMatrix int_matrix_from_json(const Json& j);

std::string presentation_to_latex(const Presentation& p);

}  // namespace dehnkit
