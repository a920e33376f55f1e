#pragma once

#include <string>
#include <string_view>

namespace mol {

/// Lateral boundary condition type (in x).
enum class BoundaryKind { dirichlet, neumann };

/// Corner entry of the semi-discretization stencil: Dirichlet -> 2, Neumann -> 1.
constexpr double corner_value(BoundaryKind bc) {
    return bc == BoundaryKind::dirichlet ? 2.0 : 1.0;
}

inline const char* to_string(BoundaryKind bc) {
    return bc == BoundaryKind::dirichlet ? "dirichlet" : "neumann";
}

/// Parses "dirichlet"/"neumann" (also accepts "d"/"n"). Throws input_error otherwise.
BoundaryKind boundary_from_string(std::string_view s);

} // namespace mol
