#pragma once

#include <actpres/builtins.hpp>
#include <actpres/truncated.hpp>

#include <string>
#include <vector>

namespace actpres::builtins {

struct BuiltinInfo {
    std::string name;
    std::string description;
};

inline std::vector<BuiltinInfo> list_builtins() {
    return {{"simplex:N", "symmetric group S_N on the complete graph K_N (N >= 3)"},
            {"dodecahedron", "rotation group of the dodecahedron (order 60)"},
            {"binary-icosahedral", "binary icosahedral group (order 120) acting through the dodecahedron"},
            {"truncated-dodecahedron", "rotation group acting freely on the truncated dodecahedron"},
            {"dihedral:N", "dihedral group of order 2N on the N-cycle (N >= 3)"},
            {"barycentric-triangle", "S3 on the subdivided triangle, two vertex orbits"}};
}

inline DerivationInput make_builtin(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::optional<std::size_t> arg;
    if (colon != std::string::npos) {
        try {
            std::size_t used = 0;
            arg = std::stoul(text.substr(colon + 1), &used);
            if (used != text.size() - colon - 1) throw std::invalid_argument(text);
        } catch (const std::exception&) {
            throw InputError("bad builtin parameter in '" + text + "'");
        }
    }
    if (name == "simplex" && arg) return simplex_action(*arg);
    if (name == "dihedral" && arg) return dihedral_cycle_action(*arg);
    if (arg) throw InputError("builtin '" + name + "' takes no parameter");
    if (name == "dodecahedron") return dodecahedron_action();
    if (name == "binary-icosahedral") return binary_icosahedral_action().input;
    if (name == "truncated-dodecahedron") return truncated_dodecahedron_action();
    if (name == "barycentric-triangle") return barycentric_triangle_action();
    throw InputError("unknown builtin '" + text + "' (see list-builtins)");
}

} // namespace actpres::builtins
