#pragma once

// Built-in identity catalog. One JSON object per line.

#include <string_view>

namespace qtriple {

inline constexpr std::string_view builtin_identity_json = R"json(
[
{"id": "thm1.k2r1.1", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 1, "h": 0, "u": 1, "v": 0, "i": 1, "j": 1, "eps": [1, 1, 1]}, "citation": "three-theta decomposition, grid point k=2, r=1"},
{"id": "thm1.k2r1.2", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 1, "h": 0, "u": 0, "v": 1, "i": 2, "j": 0, "eps": [-1, 1, 1]}, "citation": "three-theta decomposition, grid point k=2, r=1"},
{"id": "thm1.k2r1.3", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 1, "h": 0, "u": 1, "v": 0, "i": 0, "j": 2, "eps": [1, -1, -1]}, "citation": "three-theta decomposition, grid point k=2, r=1"},
{"id": "thm1.k2r1.4", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 0, "h": 1, "u": 1, "v": 0, "i": 1, "j": 1, "eps": [-1, -1, 1]}, "citation": "three-theta decomposition, grid point k=2, r=1"},
{"id": "thm1.k2r1.5", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 2, "h": 0, "u": 2, "v": 0, "i": 2, "j": 2, "eps": [1, 1, 1]}, "citation": "three-theta decomposition, grid point k=2, r=1"},
{"id": "thm1.k2r1.6", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 1, "h": 1, "u": 0, "v": 2, "i": 4, "j": 0, "eps": [-1, 1, 1]}, "citation": "three-theta decomposition, grid point k=2, r=1"},
{"id": "thm1.k2r1.7", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 2, "h": 0, "u": 1, "v": 1, "i": 0, "j": 4, "eps": [1, -1, -1]}, "citation": "three-theta decomposition, grid point k=2, r=1"},
{"id": "thm1.k2r1.8", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 0, "h": 2, "u": 2, "v": 0, "i": 1, "j": 3, "eps": [-1, -1, 1]}, "citation": "three-theta decomposition, grid point k=2, r=1"},
{"id": "thm1.k3r2.1", "kind": "thm1", "params": {"k": 3, "r": 2, "g": 2, "h": 0, "u": 2, "v": 0, "i": 1, "j": 1, "eps": [1, 1, 1]}, "citation": "three-theta decomposition, grid point k=3, r=2"},
{"id": "thm1.k3r2.2", "kind": "thm1", "params": {"k": 3, "r": 2, "g": 1, "h": 1, "u": 0, "v": 2, "i": 2, "j": 0, "eps": [-1, 1, 1]}, "citation": "three-theta decomposition, grid point k=3, r=2"},
{"id": "thm1.k3r2.3", "kind": "thm1", "params": {"k": 3, "r": 2, "g": 2, "h": 0, "u": 1, "v": 1, "i": 0, "j": 2, "eps": [1, -1, -1]}, "citation": "three-theta decomposition, grid point k=3, r=2"},
{"id": "thm1.k3r2.4", "kind": "thm1", "params": {"k": 3, "r": 2, "g": 0, "h": 2, "u": 2, "v": 0, "i": 1, "j": 1, "eps": [-1, -1, 1]}, "citation": "three-theta decomposition, grid point k=3, r=2"},
{"id": "thm1.k3r2.5", "kind": "thm1", "params": {"k": 3, "r": 2, "g": 4, "h": 0, "u": 4, "v": 0, "i": 2, "j": 2, "eps": [1, 1, 1]}, "citation": "three-theta decomposition, grid point k=3, r=2"},
{"id": "thm1.k3r2.6", "kind": "thm1", "params": {"k": 3, "r": 2, "g": 3, "h": 1, "u": 0, "v": 4, "i": 4, "j": 0, "eps": [-1, 1, 1]}, "citation": "three-theta decomposition, grid point k=3, r=2"},
{"id": "thm1.k3r2.7", "kind": "thm1", "params": {"k": 3, "r": 2, "g": 4, "h": 0, "u": 1, "v": 3, "i": 0, "j": 4, "eps": [1, -1, -1]}, "citation": "three-theta decomposition, grid point k=3, r=2"},
{"id": "thm1.k3r2.8", "kind": "thm1", "params": {"k": 3, "r": 2, "g": 0, "h": 4, "u": 4, "v": 0, "i": 1, "j": 3, "eps": [-1, -1, 1]}, "citation": "three-theta decomposition, grid point k=3, r=2"},
{"id": "thm1.k4r1.1", "kind": "thm1", "params": {"k": 4, "r": 1, "g": 3, "h": 0, "u": 3, "v": 0, "i": 1, "j": 1, "eps": [1, 1, 1]}, "citation": "three-theta decomposition, grid point k=4, r=1"},
{"id": "thm1.k4r1.2", "kind": "thm1", "params": {"k": 4, "r": 1, "g": 2, "h": 1, "u": 0, "v": 3, "i": 2, "j": 0, "eps": [-1, 1, 1]}, "citation": "three-theta decomposition, grid point k=4, r=1"},
{"id": "thm1.k4r1.3", "kind": "thm1", "params": {"k": 4, "r": 1, "g": 3, "h": 0, "u": 1, "v": 2, "i": 0, "j": 2, "eps": [1, -1, -1]}, "citation": "three-theta decomposition, grid point k=4, r=1"},
{"id": "thm1.k4r1.4", "kind": "thm1", "params": {"k": 4, "r": 1, "g": 0, "h": 3, "u": 3, "v": 0, "i": 1, "j": 1, "eps": [-1, -1, 1]}, "citation": "three-theta decomposition, grid point k=4, r=1"},
{"id": "thm1.k4r1.5", "kind": "thm1", "params": {"k": 4, "r": 1, "g": 6, "h": 0, "u": 6, "v": 0, "i": 2, "j": 2, "eps": [1, 1, 1]}, "citation": "three-theta decomposition, grid point k=4, r=1"},
{"id": "thm1.k4r1.6", "kind": "thm1", "params": {"k": 4, "r": 1, "g": 5, "h": 1, "u": 0, "v": 6, "i": 4, "j": 0, "eps": [-1, 1, 1]}, "citation": "three-theta decomposition, grid point k=4, r=1"},
{"id": "thm1.k4r1.7", "kind": "thm1", "params": {"k": 4, "r": 1, "g": 6, "h": 0, "u": 1, "v": 5, "i": 0, "j": 4, "eps": [1, -1, -1]}, "citation": "three-theta decomposition, grid point k=4, r=1"},
{"id": "thm1.k4r1.8", "kind": "thm1", "params": {"k": 4, "r": 1, "g": 0, "h": 6, "u": 6, "v": 0, "i": 1, "j": 3, "eps": [-1, -1, 1]}, "citation": "three-theta decomposition, grid point k=4, r=1"},
{"id": "thm1.k4r3.1", "kind": "thm1", "params": {"k": 4, "r": 3, "g": 3, "h": 0, "u": 3, "v": 0, "i": 1, "j": 1, "eps": [1, 1, 1]}, "citation": "three-theta decomposition, grid point k=4, r=3"},
{"id": "thm1.k4r3.2", "kind": "thm1", "params": {"k": 4, "r": 3, "g": 2, "h": 1, "u": 0, "v": 3, "i": 2, "j": 0, "eps": [-1, 1, 1]}, "citation": "three-theta decomposition, grid point k=4, r=3"},
{"id": "thm1.k4r3.3", "kind": "thm1", "params": {"k": 4, "r": 3, "g": 3, "h": 0, "u": 1, "v": 2, "i": 0, "j": 2, "eps": [1, -1, -1]}, "citation": "three-theta decomposition, grid point k=4, r=3"},
{"id": "thm1.k4r3.4", "kind": "thm1", "params": {"k": 4, "r": 3, "g": 0, "h": 3, "u": 3, "v": 0, "i": 1, "j": 1, "eps": [-1, -1, 1]}, "citation": "three-theta decomposition, grid point k=4, r=3"},
{"id": "thm1.k4r3.5", "kind": "thm1", "params": {"k": 4, "r": 3, "g": 6, "h": 0, "u": 6, "v": 0, "i": 2, "j": 2, "eps": [1, 1, 1]}, "citation": "three-theta decomposition, grid point k=4, r=3"},
{"id": "thm1.k4r3.6", "kind": "thm1", "params": {"k": 4, "r": 3, "g": 5, "h": 1, "u": 0, "v": 6, "i": 4, "j": 0, "eps": [-1, 1, 1]}, "citation": "three-theta decomposition, grid point k=4, r=3"},
{"id": "thm1.k4r3.7", "kind": "thm1", "params": {"k": 4, "r": 3, "g": 6, "h": 0, "u": 1, "v": 5, "i": 0, "j": 4, "eps": [1, -1, -1]}, "citation": "three-theta decomposition, grid point k=4, r=3"},
{"id": "thm1.k4r3.8", "kind": "thm1", "params": {"k": 4, "r": 3, "g": 0, "h": 6, "u": 6, "v": 0, "i": 1, "j": 3, "eps": [-1, -1, 1]}, "citation": "three-theta decomposition, grid point k=4, r=3"},
{"id": "thm1.k5r2.1", "kind": "thm1", "params": {"k": 5, "r": 2, "g": 6, "h": 0, "u": 6, "v": 0, "i": 1, "j": 1, "eps": [1, 1, 1]}, "citation": "three-theta decomposition, grid point k=5, r=2"},
{"id": "thm1.k5r2.2", "kind": "thm1", "params": {"k": 5, "r": 2, "g": 5, "h": 1, "u": 0, "v": 6, "i": 2, "j": 0, "eps": [-1, 1, 1]}, "citation": "three-theta decomposition, grid point k=5, r=2"},
{"id": "thm1.k5r2.3", "kind": "thm1", "params": {"k": 5, "r": 2, "g": 6, "h": 0, "u": 1, "v": 5, "i": 0, "j": 2, "eps": [1, -1, -1]}, "citation": "three-theta decomposition, grid point k=5, r=2"},
{"id": "thm1.k5r2.4", "kind": "thm1", "params": {"k": 5, "r": 2, "g": 0, "h": 6, "u": 6, "v": 0, "i": 1, "j": 1, "eps": [-1, -1, 1]}, "citation": "three-theta decomposition, grid point k=5, r=2"},
{"id": "thm1.k5r2.5", "kind": "thm1", "params": {"k": 5, "r": 2, "g": 12, "h": 0, "u": 12, "v": 0, "i": 2, "j": 2, "eps": [1, 1, 1]}, "citation": "three-theta decomposition, grid point k=5, r=2"},
{"id": "thm1.k5r2.6", "kind": "thm1", "params": {"k": 5, "r": 2, "g": 11, "h": 1, "u": 0, "v": 12, "i": 4, "j": 0, "eps": [-1, 1, 1]}, "citation": "three-theta decomposition, grid point k=5, r=2"},
{"id": "thm1.k5r2.7", "kind": "thm1", "params": {"k": 5, "r": 2, "g": 12, "h": 0, "u": 1, "v": 11, "i": 0, "j": 4, "eps": [1, -1, -1]}, "citation": "three-theta decomposition, grid point k=5, r=2"},
{"id": "thm1.k5r2.8", "kind": "thm1", "params": {"k": 5, "r": 2, "g": 0, "h": 12, "u": 12, "v": 0, "i": 1, "j": 3, "eps": [-1, -1, 1]}, "citation": "three-theta decomposition, grid point k=5, r=2"},
{"id": "thm1.k5r4.1", "kind": "thm1", "params": {"k": 5, "r": 4, "g": 4, "h": 0, "u": 4, "v": 0, "i": 1, "j": 1, "eps": [1, 1, 1]}, "citation": "three-theta decomposition, grid point k=5, r=4"},
{"id": "thm1.k5r4.2", "kind": "thm1", "params": {"k": 5, "r": 4, "g": 3, "h": 1, "u": 0, "v": 4, "i": 2, "j": 0, "eps": [-1, 1, 1]}, "citation": "three-theta decomposition, grid point k=5, r=4"},
{"id": "thm1.k5r4.3", "kind": "thm1", "params": {"k": 5, "r": 4, "g": 4, "h": 0, "u": 1, "v": 3, "i": 0, "j": 2, "eps": [1, -1, -1]}, "citation": "three-theta decomposition, grid point k=5, r=4"},
{"id": "thm1.k5r4.4", "kind": "thm1", "params": {"k": 5, "r": 4, "g": 0, "h": 4, "u": 4, "v": 0, "i": 1, "j": 1, "eps": [-1, -1, 1]}, "citation": "three-theta decomposition, grid point k=5, r=4"},
{"id": "thm1.k5r4.5", "kind": "thm1", "params": {"k": 5, "r": 4, "g": 8, "h": 0, "u": 8, "v": 0, "i": 2, "j": 2, "eps": [1, 1, 1]}, "citation": "three-theta decomposition, grid point k=5, r=4"},
{"id": "thm1.k5r4.6", "kind": "thm1", "params": {"k": 5, "r": 4, "g": 7, "h": 1, "u": 0, "v": 8, "i": 4, "j": 0, "eps": [-1, 1, 1]}, "citation": "three-theta decomposition, grid point k=5, r=4"},
{"id": "thm1.k5r4.7", "kind": "thm1", "params": {"k": 5, "r": 4, "g": 8, "h": 0, "u": 1, "v": 7, "i": 0, "j": 4, "eps": [1, -1, -1]}, "citation": "three-theta decomposition, grid point k=5, r=4"},
{"id": "thm1.k5r4.8", "kind": "thm1", "params": {"k": 5, "r": 4, "g": 0, "h": 8, "u": 8, "v": 0, "i": 1, "j": 3, "eps": [-1, -1, 1]}, "citation": "three-theta decomposition, grid point k=5, r=4"},
{"id": "thm1.k6r1.1", "kind": "thm1", "params": {"k": 6, "r": 1, "g": 5, "h": 0, "u": 5, "v": 0, "i": 1, "j": 1, "eps": [1, 1, 1]}, "citation": "three-theta decomposition, grid point k=6, r=1"},
{"id": "thm1.k6r1.2", "kind": "thm1", "params": {"k": 6, "r": 1, "g": 4, "h": 1, "u": 0, "v": 5, "i": 2, "j": 0, "eps": [-1, 1, 1]}, "citation": "three-theta decomposition, grid point k=6, r=1"},
{"id": "thm1.k6r1.3", "kind": "thm1", "params": {"k": 6, "r": 1, "g": 5, "h": 0, "u": 1, "v": 4, "i": 0, "j": 2, "eps": [1, -1, -1]}, "citation": "three-theta decomposition, grid point k=6, r=1"},
{"id": "thm1.k6r1.4", "kind": "thm1", "params": {"k": 6, "r": 1, "g": 0, "h": 5, "u": 5, "v": 0, "i": 1, "j": 1, "eps": [-1, -1, 1]}, "citation": "three-theta decomposition, grid point k=6, r=1"},
{"id": "thm1.k6r1.5", "kind": "thm1", "params": {"k": 6, "r": 1, "g": 10, "h": 0, "u": 10, "v": 0, "i": 2, "j": 2, "eps": [1, 1, 1]}, "citation": "three-theta decomposition, grid point k=6, r=1"},
{"id": "thm1.k6r1.6", "kind": "thm1", "params": {"k": 6, "r": 1, "g": 9, "h": 1, "u": 0, "v": 10, "i": 4, "j": 0, "eps": [-1, 1, 1]}, "citation": "three-theta decomposition, grid point k=6, r=1"},
{"id": "thm1.k6r1.7", "kind": "thm1", "params": {"k": 6, "r": 1, "g": 10, "h": 0, "u": 1, "v": 9, "i": 0, "j": 4, "eps": [1, -1, -1]}, "citation": "three-theta decomposition, grid point k=6, r=1"},
{"id": "thm1.k6r1.8", "kind": "thm1", "params": {"k": 6, "r": 1, "g": 0, "h": 10, "u": 10, "v": 0, "i": 1, "j": 3, "eps": [-1, -1, 1]}, "citation": "three-theta decomposition, grid point k=6, r=1"},
{"id": "thm1.k6r5.1", "kind": "thm1", "params": {"k": 6, "r": 5, "g": 5, "h": 0, "u": 5, "v": 0, "i": 1, "j": 1, "eps": [1, 1, 1]}, "citation": "three-theta decomposition, grid point k=6, r=5"},
{"id": "thm1.k6r5.2", "kind": "thm1", "params": {"k": 6, "r": 5, "g": 4, "h": 1, "u": 0, "v": 5, "i": 2, "j": 0, "eps": [-1, 1, 1]}, "citation": "three-theta decomposition, grid point k=6, r=5"},
{"id": "thm1.k6r5.3", "kind": "thm1", "params": {"k": 6, "r": 5, "g": 5, "h": 0, "u": 1, "v": 4, "i": 0, "j": 2, "eps": [1, -1, -1]}, "citation": "three-theta decomposition, grid point k=6, r=5"},
{"id": "thm1.k6r5.4", "kind": "thm1", "params": {"k": 6, "r": 5, "g": 0, "h": 5, "u": 5, "v": 0, "i": 1, "j": 1, "eps": [-1, -1, 1]}, "citation": "three-theta decomposition, grid point k=6, r=5"},
{"id": "thm1.k6r5.5", "kind": "thm1", "params": {"k": 6, "r": 5, "g": 10, "h": 0, "u": 10, "v": 0, "i": 2, "j": 2, "eps": [1, 1, 1]}, "citation": "three-theta decomposition, grid point k=6, r=5"},
{"id": "thm1.k6r5.6", "kind": "thm1", "params": {"k": 6, "r": 5, "g": 9, "h": 1, "u": 0, "v": 10, "i": 4, "j": 0, "eps": [-1, 1, 1]}, "citation": "three-theta decomposition, grid point k=6, r=5"},
{"id": "thm1.k6r5.7", "kind": "thm1", "params": {"k": 6, "r": 5, "g": 10, "h": 0, "u": 1, "v": 9, "i": 0, "j": 4, "eps": [1, -1, -1]}, "citation": "three-theta decomposition, grid point k=6, r=5"},
{"id": "thm1.k6r5.8", "kind": "thm1", "params": {"k": 6, "r": 5, "g": 0, "h": 10, "u": 10, "v": 0, "i": 1, "j": 3, "eps": [-1, -1, 1]}, "citation": "three-theta decomposition, grid point k=6, r=5"},
{"id": "thm1.special.psi-psi-phi", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 1, "h": 0, "u": 1, "v": 0, "i": 1, "j": 1, "eps": [1, 1, 1]}, "prose_lhs": "psi(q)^2*phi(q)", "lhs_scale": 4, "citation": "three-theta decomposition specialised to psi(q)^2*phi(q)"},
{"id": "thm1.special.phi-phi-psi4", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 1, "h": 1, "u": 1, "v": 1, "i": 4, "j": 0, "eps": [1, 1, 1]}, "prose_lhs": "phi(q)^2*psi(q^4)", "lhs_scale": 2, "citation": "three-theta decomposition specialised to phi(q)^2*psi(q^4)"},
{"id": "thm1.special.phi-phi-phi2", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 1, "h": 1, "u": 1, "v": 1, "i": 2, "j": 2, "eps": [1, 1, 1]}, "prose_lhs": "phi(q)^2*phi(q^2)", "lhs_scale": 1, "citation": "three-theta decomposition specialised to phi(q)^2*phi(q^2)"},
{"id": "thm1.special.psi-psi-psi2", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 3, "h": 1, "u": 3, "v": 1, "i": 6, "j": 2, "eps": [1, 1, 1]}, "prose_lhs": "psi(q)^2*psi(q^2)", "lhs_scale": 1, "citation": "three-theta decomposition specialised to psi(q)^2*psi(q^2)"},
{"id": "thm1.special.Y-Y-Y2", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 5, "h": 1, "u": 5, "v": 1, "i": 10, "j": 2, "eps": [1, 1, 1]}, "prose_lhs": "Y(q)^2*Y(q^2)", "lhs_scale": 1, "citation": "three-theta decomposition specialised to Y(q)^2*Y(q^2)"},
{"id": "thm1.special.Y-Y-psi12", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 5, "h": 1, "u": 5, "v": 1, "i": 12, "j": 0, "eps": [1, 1, 1]}, "prose_lhs": "psi(q^12)*Y(q)^2", "lhs_scale": 2, "citation": "three-theta decomposition specialised to psi(q^12)*Y(q)^2"},
{"id": "thm1.special.Y-Y-X4", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 5, "h": 1, "u": 5, "v": 1, "i": 8, "j": 4, "eps": [1, 1, 1]}, "prose_lhs": "Y(q)^2*X(q^4)", "lhs_scale": 1, "citation": "three-theta decomposition specialised to Y(q)^2*X(q^4)"},
{"id": "thm1.special.phi3-phi3-Y2", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 3, "h": 3, "u": 3, "v": 3, "i": 10, "j": 2, "eps": [1, 1, 1]}, "prose_lhs": "phi(q^3)^2*Y(q^2)", "lhs_scale": 1, "citation": "three-theta decomposition specialised to phi(q^3)^2*Y(q^2)"},
{"id": "thm1.special.phi3-phi3-X4", "kind": "thm1", "params": {"k": 2, "r": 1, "g": 3, "h": 3, "u": 3, "v": 3, "i": 8, "j": 4, "eps": [1, 1, 1]}, "prose_lhs": "phi(q^3)^2*X(q^4)", "lhs_scale": 1, "citation": "three-theta decomposition specialised to phi(q^3)^2*X(q^4)"},
{"id": "thm1.special.Y-Y-X2", "kind": "thm1", "params": {"k": 3, "r": 2, "g": 5, "h": 1, "u": 5, "v": 1, "i": 4, "j": 2, "eps": [1, 1, 1]}, "prose_lhs": "Y(q)^2*X(q^2)", "lhs_scale": 1, "citation": "three-theta decomposition specialised to Y(q)^2*X(q^2)"},
{"id": "thm2.k2r1.1", "kind": "thm2", "params": {"k": 2, "r": 1, "s": 1, "t": 0, "i": 0, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=2, r=1"},
{"id": "thm2.k2r1.2", "kind": "thm2", "params": {"k": 2, "r": 1, "s": 1, "t": 0, "i": 0, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=2, r=1"},
{"id": "thm2.k2r1.3", "kind": "thm2", "params": {"k": 2, "r": 1, "s": 1, "t": 0, "i": 1, "j": 0, "eps": 1}, "citation": "two-theta decomposition, grid point k=2, r=1"},
{"id": "thm2.k2r1.4", "kind": "thm2", "params": {"k": 2, "r": 1, "s": 1, "t": 0, "i": 1, "j": 0, "eps": -1}, "citation": "two-theta decomposition, grid point k=2, r=1"},
{"id": "thm2.k2r1.5", "kind": "thm2", "params": {"k": 2, "r": 1, "s": 1, "t": 1, "i": 0, "j": 2, "eps": 1}, "citation": "two-theta decomposition, grid point k=2, r=1"},
{"id": "thm2.k2r1.6", "kind": "thm2", "params": {"k": 2, "r": 1, "s": 1, "t": 1, "i": 0, "j": 2, "eps": -1}, "citation": "two-theta decomposition, grid point k=2, r=1"},
{"id": "thm2.k2r1.7", "kind": "thm2", "params": {"k": 2, "r": 1, "s": 1, "t": 1, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=2, r=1"},
{"id": "thm2.k2r1.8", "kind": "thm2", "params": {"k": 2, "r": 1, "s": 1, "t": 1, "i": 1, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=2, r=1"},
{"id": "thm2.k2r1.9", "kind": "thm2", "params": {"k": 2, "r": 1, "s": 2, "t": 0, "i": 0, "j": 2, "eps": 1}, "citation": "two-theta decomposition, grid point k=2, r=1"},
{"id": "thm2.k2r1.10", "kind": "thm2", "params": {"k": 2, "r": 1, "s": 2, "t": 0, "i": 0, "j": 2, "eps": -1}, "citation": "two-theta decomposition, grid point k=2, r=1"},
{"id": "thm2.k2r1.11", "kind": "thm2", "params": {"k": 2, "r": 1, "s": 2, "t": 0, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=2, r=1"},
{"id": "thm2.k2r1.12", "kind": "thm2", "params": {"k": 2, "r": 1, "s": 2, "t": 0, "i": 1, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=2, r=1"},
{"id": "thm2.k3r2.13", "kind": "thm2", "params": {"k": 3, "r": 2, "s": 1, "t": 1, "i": 0, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=3, r=2"},
{"id": "thm2.k3r2.14", "kind": "thm2", "params": {"k": 3, "r": 2, "s": 1, "t": 1, "i": 0, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=3, r=2"},
{"id": "thm2.k3r2.15", "kind": "thm2", "params": {"k": 3, "r": 2, "s": 1, "t": 1, "i": 1, "j": 0, "eps": 1}, "citation": "two-theta decomposition, grid point k=3, r=2"},
{"id": "thm2.k3r2.16", "kind": "thm2", "params": {"k": 3, "r": 2, "s": 1, "t": 1, "i": 1, "j": 0, "eps": -1}, "citation": "two-theta decomposition, grid point k=3, r=2"},
{"id": "thm2.k3r2.17", "kind": "thm2", "params": {"k": 3, "r": 2, "s": 2, "t": 0, "i": 0, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=3, r=2"},
{"id": "thm2.k3r2.18", "kind": "thm2", "params": {"k": 3, "r": 2, "s": 2, "t": 0, "i": 0, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=3, r=2"},
{"id": "thm2.k3r2.19", "kind": "thm2", "params": {"k": 3, "r": 2, "s": 2, "t": 0, "i": 1, "j": 0, "eps": 1}, "citation": "two-theta decomposition, grid point k=3, r=2"},
{"id": "thm2.k3r2.20", "kind": "thm2", "params": {"k": 3, "r": 2, "s": 2, "t": 0, "i": 1, "j": 0, "eps": -1}, "citation": "two-theta decomposition, grid point k=3, r=2"},
{"id": "thm2.k3r2.21", "kind": "thm2", "params": {"k": 3, "r": 2, "s": 1, "t": 3, "i": 0, "j": 2, "eps": 1}, "citation": "two-theta decomposition, grid point k=3, r=2"},
{"id": "thm2.k3r2.22", "kind": "thm2", "params": {"k": 3, "r": 2, "s": 1, "t": 3, "i": 0, "j": 2, "eps": -1}, "citation": "two-theta decomposition, grid point k=3, r=2"},
{"id": "thm2.k3r2.23", "kind": "thm2", "params": {"k": 3, "r": 2, "s": 1, "t": 3, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=3, r=2"},
{"id": "thm2.k3r2.24", "kind": "thm2", "params": {"k": 3, "r": 2, "s": 1, "t": 3, "i": 1, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=3, r=2"},
{"id": "thm2.k3r2.25", "kind": "thm2", "params": {"k": 3, "r": 2, "s": 4, "t": 0, "i": 0, "j": 2, "eps": 1}, "citation": "two-theta decomposition, grid point k=3, r=2"},
{"id": "thm2.k3r2.26", "kind": "thm2", "params": {"k": 3, "r": 2, "s": 4, "t": 0, "i": 0, "j": 2, "eps": -1}, "citation": "two-theta decomposition, grid point k=3, r=2"},
{"id": "thm2.k3r2.27", "kind": "thm2", "params": {"k": 3, "r": 2, "s": 4, "t": 0, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=3, r=2"},
{"id": "thm2.k3r2.28", "kind": "thm2", "params": {"k": 3, "r": 2, "s": 4, "t": 0, "i": 1, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=3, r=2"},
{"id": "thm2.k4r1.29", "kind": "thm2", "params": {"k": 4, "r": 1, "s": 1, "t": 2, "i": 0, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=4, r=1"},
{"id": "thm2.k4r1.30", "kind": "thm2", "params": {"k": 4, "r": 1, "s": 1, "t": 2, "i": 0, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=4, r=1"},
{"id": "thm2.k4r1.31", "kind": "thm2", "params": {"k": 4, "r": 1, "s": 1, "t": 2, "i": 1, "j": 0, "eps": 1}, "citation": "two-theta decomposition, grid point k=4, r=1"},
{"id": "thm2.k4r1.32", "kind": "thm2", "params": {"k": 4, "r": 1, "s": 1, "t": 2, "i": 1, "j": 0, "eps": -1}, "citation": "two-theta decomposition, grid point k=4, r=1"},
{"id": "thm2.k4r1.33", "kind": "thm2", "params": {"k": 4, "r": 1, "s": 3, "t": 0, "i": 0, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=4, r=1"},
{"id": "thm2.k4r1.34", "kind": "thm2", "params": {"k": 4, "r": 1, "s": 3, "t": 0, "i": 0, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=4, r=1"},
{"id": "thm2.k4r1.35", "kind": "thm2", "params": {"k": 4, "r": 1, "s": 3, "t": 0, "i": 1, "j": 0, "eps": 1}, "citation": "two-theta decomposition, grid point k=4, r=1"},
{"id": "thm2.k4r1.36", "kind": "thm2", "params": {"k": 4, "r": 1, "s": 3, "t": 0, "i": 1, "j": 0, "eps": -1}, "citation": "two-theta decomposition, grid point k=4, r=1"},
{"id": "thm2.k4r1.37", "kind": "thm2", "params": {"k": 4, "r": 1, "s": 1, "t": 5, "i": 0, "j": 2, "eps": 1}, "citation": "two-theta decomposition, grid point k=4, r=1"},
{"id": "thm2.k4r1.38", "kind": "thm2", "params": {"k": 4, "r": 1, "s": 1, "t": 5, "i": 0, "j": 2, "eps": -1}, "citation": "two-theta decomposition, grid point k=4, r=1"},
{"id": "thm2.k4r1.39", "kind": "thm2", "params": {"k": 4, "r": 1, "s": 1, "t": 5, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=4, r=1"},
{"id": "thm2.k4r1.40", "kind": "thm2", "params": {"k": 4, "r": 1, "s": 1, "t": 5, "i": 1, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=4, r=1"},
{"id": "thm2.k4r1.41", "kind": "thm2", "params": {"k": 4, "r": 1, "s": 6, "t": 0, "i": 0, "j": 2, "eps": 1}, "citation": "two-theta decomposition, grid point k=4, r=1"},
{"id": "thm2.k4r1.42", "kind": "thm2", "params": {"k": 4, "r": 1, "s": 6, "t": 0, "i": 0, "j": 2, "eps": -1}, "citation": "two-theta decomposition, grid point k=4, r=1"},
{"id": "thm2.k4r1.43", "kind": "thm2", "params": {"k": 4, "r": 1, "s": 6, "t": 0, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=4, r=1"},
{"id": "thm2.k4r1.44", "kind": "thm2", "params": {"k": 4, "r": 1, "s": 6, "t": 0, "i": 1, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=4, r=1"},
{"id": "thm2.k4r3.45", "kind": "thm2", "params": {"k": 4, "r": 3, "s": 1, "t": 2, "i": 0, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=4, r=3"},
{"id": "thm2.k4r3.46", "kind": "thm2", "params": {"k": 4, "r": 3, "s": 1, "t": 2, "i": 0, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=4, r=3"},
{"id": "thm2.k4r3.47", "kind": "thm2", "params": {"k": 4, "r": 3, "s": 1, "t": 2, "i": 1, "j": 0, "eps": 1}, "citation": "two-theta decomposition, grid point k=4, r=3"},
{"id": "thm2.k4r3.48", "kind": "thm2", "params": {"k": 4, "r": 3, "s": 1, "t": 2, "i": 1, "j": 0, "eps": -1}, "citation": "two-theta decomposition, grid point k=4, r=3"},
{"id": "thm2.k4r3.49", "kind": "thm2", "params": {"k": 4, "r": 3, "s": 3, "t": 0, "i": 0, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=4, r=3"},
{"id": "thm2.k4r3.50", "kind": "thm2", "params": {"k": 4, "r": 3, "s": 3, "t": 0, "i": 0, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=4, r=3"},
{"id": "thm2.k4r3.51", "kind": "thm2", "params": {"k": 4, "r": 3, "s": 3, "t": 0, "i": 1, "j": 0, "eps": 1}, "citation": "two-theta decomposition, grid point k=4, r=3"},
{"id": "thm2.k4r3.52", "kind": "thm2", "params": {"k": 4, "r": 3, "s": 3, "t": 0, "i": 1, "j": 0, "eps": -1}, "citation": "two-theta decomposition, grid point k=4, r=3"},
{"id": "thm2.k4r3.53", "kind": "thm2", "params": {"k": 4, "r": 3, "s": 1, "t": 5, "i": 0, "j": 2, "eps": 1}, "citation": "two-theta decomposition, grid point k=4, r=3"},
{"id": "thm2.k4r3.54", "kind": "thm2", "params": {"k": 4, "r": 3, "s": 1, "t": 5, "i": 0, "j": 2, "eps": -1}, "citation": "two-theta decomposition, grid point k=4, r=3"},
{"id": "thm2.k4r3.55", "kind": "thm2", "params": {"k": 4, "r": 3, "s": 1, "t": 5, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=4, r=3"},
{"id": "thm2.k4r3.56", "kind": "thm2", "params": {"k": 4, "r": 3, "s": 1, "t": 5, "i": 1, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=4, r=3"},
{"id": "thm2.k4r3.57", "kind": "thm2", "params": {"k": 4, "r": 3, "s": 6, "t": 0, "i": 0, "j": 2, "eps": 1}, "citation": "two-theta decomposition, grid point k=4, r=3"},
{"id": "thm2.k4r3.58", "kind": "thm2", "params": {"k": 4, "r": 3, "s": 6, "t": 0, "i": 0, "j": 2, "eps": -1}, "citation": "two-theta decomposition, grid point k=4, r=3"},
{"id": "thm2.k4r3.59", "kind": "thm2", "params": {"k": 4, "r": 3, "s": 6, "t": 0, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=4, r=3"},
{"id": "thm2.k4r3.60", "kind": "thm2", "params": {"k": 4, "r": 3, "s": 6, "t": 0, "i": 1, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=4, r=3"},
{"id": "thm2.k5r2.61", "kind": "thm2", "params": {"k": 5, "r": 2, "s": 1, "t": 5, "i": 0, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=5, r=2"},
{"id": "thm2.k5r2.62", "kind": "thm2", "params": {"k": 5, "r": 2, "s": 1, "t": 5, "i": 0, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=5, r=2"},
{"id": "thm2.k5r2.63", "kind": "thm2", "params": {"k": 5, "r": 2, "s": 1, "t": 5, "i": 1, "j": 0, "eps": 1}, "citation": "two-theta decomposition, grid point k=5, r=2"},
{"id": "thm2.k5r2.64", "kind": "thm2", "params": {"k": 5, "r": 2, "s": 1, "t": 5, "i": 1, "j": 0, "eps": -1}, "citation": "two-theta decomposition, grid point k=5, r=2"},
{"id": "thm2.k5r2.65", "kind": "thm2", "params": {"k": 5, "r": 2, "s": 6, "t": 0, "i": 0, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=5, r=2"},
{"id": "thm2.k5r2.66", "kind": "thm2", "params": {"k": 5, "r": 2, "s": 6, "t": 0, "i": 0, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=5, r=2"},
{"id": "thm2.k5r2.67", "kind": "thm2", "params": {"k": 5, "r": 2, "s": 6, "t": 0, "i": 1, "j": 0, "eps": 1}, "citation": "two-theta decomposition, grid point k=5, r=2"},
{"id": "thm2.k5r2.68", "kind": "thm2", "params": {"k": 5, "r": 2, "s": 6, "t": 0, "i": 1, "j": 0, "eps": -1}, "citation": "two-theta decomposition, grid point k=5, r=2"},
{"id": "thm2.k5r2.69", "kind": "thm2", "params": {"k": 5, "r": 2, "s": 1, "t": 11, "i": 0, "j": 2, "eps": 1}, "citation": "two-theta decomposition, grid point k=5, r=2"},
{"id": "thm2.k5r2.70", "kind": "thm2", "params": {"k": 5, "r": 2, "s": 1, "t": 11, "i": 0, "j": 2, "eps": -1}, "citation": "two-theta decomposition, grid point k=5, r=2"},
{"id": "thm2.k5r2.71", "kind": "thm2", "params": {"k": 5, "r": 2, "s": 1, "t": 11, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=5, r=2"},
{"id": "thm2.k5r2.72", "kind": "thm2", "params": {"k": 5, "r": 2, "s": 1, "t": 11, "i": 1, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=5, r=2"},
{"id": "thm2.k5r2.73", "kind": "thm2", "params": {"k": 5, "r": 2, "s": 12, "t": 0, "i": 0, "j": 2, "eps": 1}, "citation": "two-theta decomposition, grid point k=5, r=2"},
{"id": "thm2.k5r2.74", "kind": "thm2", "params": {"k": 5, "r": 2, "s": 12, "t": 0, "i": 0, "j": 2, "eps": -1}, "citation": "two-theta decomposition, grid point k=5, r=2"},
{"id": "thm2.k5r2.75", "kind": "thm2", "params": {"k": 5, "r": 2, "s": 12, "t": 0, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=5, r=2"},
{"id": "thm2.k5r2.76", "kind": "thm2", "params": {"k": 5, "r": 2, "s": 12, "t": 0, "i": 1, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=5, r=2"},
{"id": "thm2.k5r4.77", "kind": "thm2", "params": {"k": 5, "r": 4, "s": 1, "t": 3, "i": 0, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=5, r=4"},
{"id": "thm2.k5r4.78", "kind": "thm2", "params": {"k": 5, "r": 4, "s": 1, "t": 3, "i": 0, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=5, r=4"},
{"id": "thm2.k5r4.79", "kind": "thm2", "params": {"k": 5, "r": 4, "s": 1, "t": 3, "i": 1, "j": 0, "eps": 1}, "citation": "two-theta decomposition, grid point k=5, r=4"},
{"id": "thm2.k5r4.80", "kind": "thm2", "params": {"k": 5, "r": 4, "s": 1, "t": 3, "i": 1, "j": 0, "eps": -1}, "citation": "two-theta decomposition, grid point k=5, r=4"},
{"id": "thm2.k5r4.81", "kind": "thm2", "params": {"k": 5, "r": 4, "s": 4, "t": 0, "i": 0, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=5, r=4"},
{"id": "thm2.k5r4.82", "kind": "thm2", "params": {"k": 5, "r": 4, "s": 4, "t": 0, "i": 0, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=5, r=4"},
{"id": "thm2.k5r4.83", "kind": "thm2", "params": {"k": 5, "r": 4, "s": 4, "t": 0, "i": 1, "j": 0, "eps": 1}, "citation": "two-theta decomposition, grid point k=5, r=4"},
{"id": "thm2.k5r4.84", "kind": "thm2", "params": {"k": 5, "r": 4, "s": 4, "t": 0, "i": 1, "j": 0, "eps": -1}, "citation": "two-theta decomposition, grid point k=5, r=4"},
{"id": "thm2.k5r4.85", "kind": "thm2", "params": {"k": 5, "r": 4, "s": 1, "t": 7, "i": 0, "j": 2, "eps": 1}, "citation": "two-theta decomposition, grid point k=5, r=4"},
{"id": "thm2.k5r4.86", "kind": "thm2", "params": {"k": 5, "r": 4, "s": 1, "t": 7, "i": 0, "j": 2, "eps": -1}, "citation": "two-theta decomposition, grid point k=5, r=4"},
{"id": "thm2.k5r4.87", "kind": "thm2", "params": {"k": 5, "r": 4, "s": 1, "t": 7, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=5, r=4"},
{"id": "thm2.k5r4.88", "kind": "thm2", "params": {"k": 5, "r": 4, "s": 1, "t": 7, "i": 1, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=5, r=4"},
{"id": "thm2.k5r4.89", "kind": "thm2", "params": {"k": 5, "r": 4, "s": 8, "t": 0, "i": 0, "j": 2, "eps": 1}, "citation": "two-theta decomposition, grid point k=5, r=4"},
{"id": "thm2.k5r4.90", "kind": "thm2", "params": {"k": 5, "r": 4, "s": 8, "t": 0, "i": 0, "j": 2, "eps": -1}, "citation": "two-theta decomposition, grid point k=5, r=4"},
{"id": "thm2.k5r4.91", "kind": "thm2", "params": {"k": 5, "r": 4, "s": 8, "t": 0, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=5, r=4"},
{"id": "thm2.k5r4.92", "kind": "thm2", "params": {"k": 5, "r": 4, "s": 8, "t": 0, "i": 1, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=5, r=4"},
{"id": "thm2.k6r1.93", "kind": "thm2", "params": {"k": 6, "r": 1, "s": 1, "t": 4, "i": 0, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=6, r=1"},
{"id": "thm2.k6r1.94", "kind": "thm2", "params": {"k": 6, "r": 1, "s": 1, "t": 4, "i": 0, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=6, r=1"},
{"id": "thm2.k6r1.95", "kind": "thm2", "params": {"k": 6, "r": 1, "s": 1, "t": 4, "i": 1, "j": 0, "eps": 1}, "citation": "two-theta decomposition, grid point k=6, r=1"},
{"id": "thm2.k6r1.96", "kind": "thm2", "params": {"k": 6, "r": 1, "s": 1, "t": 4, "i": 1, "j": 0, "eps": -1}, "citation": "two-theta decomposition, grid point k=6, r=1"},
{"id": "thm2.k6r1.97", "kind": "thm2", "params": {"k": 6, "r": 1, "s": 5, "t": 0, "i": 0, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=6, r=1"},
{"id": "thm2.k6r1.98", "kind": "thm2", "params": {"k": 6, "r": 1, "s": 5, "t": 0, "i": 0, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=6, r=1"},
{"id": "thm2.k6r1.99", "kind": "thm2", "params": {"k": 6, "r": 1, "s": 5, "t": 0, "i": 1, "j": 0, "eps": 1}, "citation": "two-theta decomposition, grid point k=6, r=1"},
{"id": "thm2.k6r1.100", "kind": "thm2", "params": {"k": 6, "r": 1, "s": 5, "t": 0, "i": 1, "j": 0, "eps": -1}, "citation": "two-theta decomposition, grid point k=6, r=1"},
{"id": "thm2.k6r1.101", "kind": "thm2", "params": {"k": 6, "r": 1, "s": 1, "t": 9, "i": 0, "j": 2, "eps": 1}, "citation": "two-theta decomposition, grid point k=6, r=1"},
{"id": "thm2.k6r1.102", "kind": "thm2", "params": {"k": 6, "r": 1, "s": 1, "t": 9, "i": 0, "j": 2, "eps": -1}, "citation": "two-theta decomposition, grid point k=6, r=1"},
{"id": "thm2.k6r1.103", "kind": "thm2", "params": {"k": 6, "r": 1, "s": 1, "t": 9, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=6, r=1"},
{"id": "thm2.k6r1.104", "kind": "thm2", "params": {"k": 6, "r": 1, "s": 1, "t": 9, "i": 1, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=6, r=1"},
{"id": "thm2.k6r1.105", "kind": "thm2", "params": {"k": 6, "r": 1, "s": 10, "t": 0, "i": 0, "j": 2, "eps": 1}, "citation": "two-theta decomposition, grid point k=6, r=1"},
{"id": "thm2.k6r1.106", "kind": "thm2", "params": {"k": 6, "r": 1, "s": 10, "t": 0, "i": 0, "j": 2, "eps": -1}, "citation": "two-theta decomposition, grid point k=6, r=1"},
{"id": "thm2.k6r1.107", "kind": "thm2", "params": {"k": 6, "r": 1, "s": 10, "t": 0, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=6, r=1"},
{"id": "thm2.k6r1.108", "kind": "thm2", "params": {"k": 6, "r": 1, "s": 10, "t": 0, "i": 1, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=6, r=1"},
{"id": "thm2.k6r5.109", "kind": "thm2", "params": {"k": 6, "r": 5, "s": 1, "t": 4, "i": 0, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=6, r=5"},
{"id": "thm2.k6r5.110", "kind": "thm2", "params": {"k": 6, "r": 5, "s": 1, "t": 4, "i": 0, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=6, r=5"},
{"id": "thm2.k6r5.111", "kind": "thm2", "params": {"k": 6, "r": 5, "s": 1, "t": 4, "i": 1, "j": 0, "eps": 1}, "citation": "two-theta decomposition, grid point k=6, r=5"},
{"id": "thm2.k6r5.112", "kind": "thm2", "params": {"k": 6, "r": 5, "s": 1, "t": 4, "i": 1, "j": 0, "eps": -1}, "citation": "two-theta decomposition, grid point k=6, r=5"},
{"id": "thm2.k6r5.113", "kind": "thm2", "params": {"k": 6, "r": 5, "s": 5, "t": 0, "i": 0, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=6, r=5"},
{"id": "thm2.k6r5.114", "kind": "thm2", "params": {"k": 6, "r": 5, "s": 5, "t": 0, "i": 0, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=6, r=5"},
{"id": "thm2.k6r5.115", "kind": "thm2", "params": {"k": 6, "r": 5, "s": 5, "t": 0, "i": 1, "j": 0, "eps": 1}, "citation": "two-theta decomposition, grid point k=6, r=5"},
{"id": "thm2.k6r5.116", "kind": "thm2", "params": {"k": 6, "r": 5, "s": 5, "t": 0, "i": 1, "j": 0, "eps": -1}, "citation": "two-theta decomposition, grid point k=6, r=5"},
{"id": "thm2.k6r5.117", "kind": "thm2", "params": {"k": 6, "r": 5, "s": 1, "t": 9, "i": 0, "j": 2, "eps": 1}, "citation": "two-theta decomposition, grid point k=6, r=5"},
{"id": "thm2.k6r5.118", "kind": "thm2", "params": {"k": 6, "r": 5, "s": 1, "t": 9, "i": 0, "j": 2, "eps": -1}, "citation": "two-theta decomposition, grid point k=6, r=5"},
{"id": "thm2.k6r5.119", "kind": "thm2", "params": {"k": 6, "r": 5, "s": 1, "t": 9, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=6, r=5"},
{"id": "thm2.k6r5.120", "kind": "thm2", "params": {"k": 6, "r": 5, "s": 1, "t": 9, "i": 1, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=6, r=5"},
{"id": "thm2.k6r5.121", "kind": "thm2", "params": {"k": 6, "r": 5, "s": 10, "t": 0, "i": 0, "j": 2, "eps": 1}, "citation": "two-theta decomposition, grid point k=6, r=5"},
{"id": "thm2.k6r5.122", "kind": "thm2", "params": {"k": 6, "r": 5, "s": 10, "t": 0, "i": 0, "j": 2, "eps": -1}, "citation": "two-theta decomposition, grid point k=6, r=5"},
{"id": "thm2.k6r5.123", "kind": "thm2", "params": {"k": 6, "r": 5, "s": 10, "t": 0, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, grid point k=6, r=5"},
{"id": "thm2.k6r5.124", "kind": "thm2", "params": {"k": 6, "r": 5, "s": 10, "t": 0, "i": 1, "j": 1, "eps": -1}, "citation": "two-theta decomposition, grid point k=6, r=5"},
{"id": "thm2.example.1", "kind": "thm2", "params": {"k": 2, "r": 1, "s": 2, "t": 0, "i": 1, "j": 1, "eps": 1}, "citation": "two-theta decomposition, f(q^2,1)phi(q)"},
{"id": "thm2.example.2", "kind": "thm2", "params": {"k": 2, "r": 1, "s": 1, "t": 1, "i": 2, "j": 0, "eps": -1}, "citation": "two-theta decomposition, phi(q)f(-q^2,-1)"},
{"id": "cor1.k2r1", "kind": "corollary", "corollary": 1, "k": 2, "r": 1, "citation": "corollary 1 of the three-theta decomposition"},
{"id": "cor1.k3r2", "kind": "corollary", "corollary": 1, "k": 3, "r": 2, "citation": "corollary 1 of the three-theta decomposition"},
{"id": "cor1.k4r1", "kind": "corollary", "corollary": 1, "k": 4, "r": 1, "citation": "corollary 1 of the three-theta decomposition"},
{"id": "cor1.k4r3", "kind": "corollary", "corollary": 1, "k": 4, "r": 3, "citation": "corollary 1 of the three-theta decomposition"},
{"id": "cor1.k5r2", "kind": "corollary", "corollary": 1, "k": 5, "r": 2, "citation": "corollary 1 of the three-theta decomposition"},
{"id": "cor1.k5r4", "kind": "corollary", "corollary": 1, "k": 5, "r": 4, "citation": "corollary 1 of the three-theta decomposition"},
{"id": "cor1.k6r1", "kind": "corollary", "corollary": 1, "k": 6, "r": 1, "citation": "corollary 1 of the three-theta decomposition"},
{"id": "cor1.k6r5", "kind": "corollary", "corollary": 1, "k": 6, "r": 5, "citation": "corollary 1 of the three-theta decomposition"},
{"id": "cor2.k2r1", "kind": "corollary", "corollary": 2, "k": 2, "r": 1, "citation": "corollary 2 of the three-theta decomposition"},
{"id": "cor2.k3r2", "kind": "corollary", "corollary": 2, "k": 3, "r": 2, "citation": "corollary 2 of the three-theta decomposition"},
{"id": "cor2.k4r1", "kind": "corollary", "corollary": 2, "k": 4, "r": 1, "citation": "corollary 2 of the three-theta decomposition"},
{"id": "cor2.k4r3", "kind": "corollary", "corollary": 2, "k": 4, "r": 3, "citation": "corollary 2 of the three-theta decomposition"},
{"id": "cor2.k5r2", "kind": "corollary", "corollary": 2, "k": 5, "r": 2, "citation": "corollary 2 of the three-theta decomposition"},
{"id": "cor2.k5r4", "kind": "corollary", "corollary": 2, "k": 5, "r": 4, "citation": "corollary 2 of the three-theta decomposition"},
{"id": "cor2.k6r1", "kind": "corollary", "corollary": 2, "k": 6, "r": 1, "citation": "corollary 2 of the three-theta decomposition"},
{"id": "cor2.k6r5", "kind": "corollary", "corollary": 2, "k": 6, "r": 5, "citation": "corollary 2 of the three-theta decomposition"},
{"id": "cor3.k2r1", "kind": "corollary", "corollary": 3, "k": 2, "r": 1, "citation": "corollary 3 of the three-theta decomposition"},
{"id": "cor3.k3r2", "kind": "corollary", "corollary": 3, "k": 3, "r": 2, "citation": "corollary 3 of the three-theta decomposition"},
{"id": "cor3.k4r1", "kind": "corollary", "corollary": 3, "k": 4, "r": 1, "citation": "corollary 3 of the three-theta decomposition"},
{"id": "cor3.k4r3", "kind": "corollary", "corollary": 3, "k": 4, "r": 3, "citation": "corollary 3 of the three-theta decomposition"},
{"id": "cor3.k5r2", "kind": "corollary", "corollary": 3, "k": 5, "r": 2, "citation": "corollary 3 of the three-theta decomposition"},
{"id": "cor3.k5r4", "kind": "corollary", "corollary": 3, "k": 5, "r": 4, "citation": "corollary 3 of the three-theta decomposition"},
{"id": "cor3.k6r1", "kind": "corollary", "corollary": 3, "k": 6, "r": 1, "citation": "corollary 3 of the three-theta decomposition"},
{"id": "cor3.k6r5", "kind": "corollary", "corollary": 3, "k": 6, "r": 5, "citation": "corollary 3 of the three-theta decomposition"},
{"id": "cor4.k2r1", "kind": "corollary", "corollary": 4, "k": 2, "r": 1, "citation": "corollary 4 of the three-theta decomposition"},
{"id": "cor4.k3r2", "kind": "corollary", "corollary": 4, "k": 3, "r": 2, "citation": "corollary 4 of the three-theta decomposition"},
{"id": "cor4.k4r1", "kind": "corollary", "corollary": 4, "k": 4, "r": 1, "citation": "corollary 4 of the three-theta decomposition"},
{"id": "cor4.k4r3", "kind": "corollary", "corollary": 4, "k": 4, "r": 3, "citation": "corollary 4 of the three-theta decomposition"},
{"id": "cor4.k5r2", "kind": "corollary", "corollary": 4, "k": 5, "r": 2, "citation": "corollary 4 of the three-theta decomposition"},
{"id": "cor4.k5r4", "kind": "corollary", "corollary": 4, "k": 5, "r": 4, "citation": "corollary 4 of the three-theta decomposition"},
{"id": "cor4.k6r1", "kind": "corollary", "corollary": 4, "k": 6, "r": 1, "citation": "corollary 4 of the three-theta decomposition"},
{"id": "cor4.k6r5", "kind": "corollary", "corollary": 4, "k": 6, "r": 5, "citation": "corollary 4 of the three-theta decomposition"},
{"id": "clp2.1.m1", "kind": "clp2", "n": 1, "m": 1, "citation": "two-theta corollary 1 at m=1"},
{"id": "clp2.1.m2", "kind": "clp2", "n": 1, "m": 2, "citation": "two-theta corollary 1 at m=2"},
{"id": "clp2.1.m3", "kind": "clp2", "n": 1, "m": 3, "citation": "two-theta corollary 1 at m=3"},
{"id": "clp2.1.m4", "kind": "clp2", "n": 1, "m": 4, "citation": "two-theta corollary 1 at m=4"},
{"id": "clp2.1.m5", "kind": "clp2", "n": 1, "m": 5, "citation": "two-theta corollary 1 at m=5"},
{"id": "clp2.1.m6", "kind": "clp2", "n": 1, "m": 6, "citation": "two-theta corollary 1 at m=6"},
{"id": "clp2.2.m1", "kind": "clp2", "n": 2, "m": 1, "citation": "two-theta corollary 2 at m=1"},
{"id": "clp2.2.m2", "kind": "clp2", "n": 2, "m": 2, "citation": "two-theta corollary 2 at m=2"},
{"id": "clp2.2.m3", "kind": "clp2", "n": 2, "m": 3, "citation": "two-theta corollary 2 at m=3"},
{"id": "clp2.2.m4", "kind": "clp2", "n": 2, "m": 4, "citation": "two-theta corollary 2 at m=4"},
{"id": "clp2.2.m5", "kind": "clp2", "n": 2, "m": 5, "citation": "two-theta corollary 2 at m=5"},
{"id": "clp2.2.m6", "kind": "clp2", "n": 2, "m": 6, "citation": "two-theta corollary 2 at m=6"},
{"id": "clp2.3.m1", "kind": "clp2", "n": 3, "m": 1, "citation": "two-theta corollary 3 at m=1"},
{"id": "clp2.3.m2", "kind": "clp2", "n": 3, "m": 2, "citation": "two-theta corollary 3 at m=2"},
{"id": "clp2.3.m3", "kind": "clp2", "n": 3, "m": 3, "citation": "two-theta corollary 3 at m=3"},
{"id": "clp2.3.m4", "kind": "clp2", "n": 3, "m": 4, "citation": "two-theta corollary 3 at m=4"},
{"id": "clp2.3.m5", "kind": "clp2", "n": 3, "m": 5, "citation": "two-theta corollary 3 at m=5"},
{"id": "clp2.3.m6", "kind": "clp2", "n": 3, "m": 6, "citation": "two-theta corollary 3 at m=6"},
{"id": "clp2.4.m1", "kind": "clp2", "n": 4, "m": 1, "citation": "two-theta corollary 4 at m=1"},
{"id": "clp2.4.m2", "kind": "clp2", "n": 4, "m": 2, "citation": "two-theta corollary 4 at m=2"},
{"id": "clp2.4.m3", "kind": "clp2", "n": 4, "m": 3, "citation": "two-theta corollary 4 at m=3"},
{"id": "clp2.4.m4", "kind": "clp2", "n": 4, "m": 4, "citation": "two-theta corollary 4 at m=4"},
{"id": "clp2.4.m5", "kind": "clp2", "n": 4, "m": 5, "citation": "two-theta corollary 4 at m=5"},
{"id": "clp2.4.m6", "kind": "clp2", "n": 4, "m": 6, "citation": "two-theta corollary 4 at m=6"},
{"id": "clp2.5.m1", "kind": "clp2", "n": 5, "m": 1, "citation": "two-theta corollary 5 at m=1"},
{"id": "clp2.5.m2", "kind": "clp2", "n": 5, "m": 2, "citation": "two-theta corollary 5 at m=2"},
{"id": "clp2.5.m3", "kind": "clp2", "n": 5, "m": 3, "citation": "two-theta corollary 5 at m=3"},
{"id": "clp2.5.m4", "kind": "clp2", "n": 5, "m": 4, "citation": "two-theta corollary 5 at m=4"},
{"id": "clp2.5.m5", "kind": "clp2", "n": 5, "m": 5, "citation": "two-theta corollary 5 at m=5"},
{"id": "clp2.5.m6", "kind": "clp2", "n": 5, "m": 6, "citation": "two-theta corollary 5 at m=6"},
{"id": "clp2.6.m1", "kind": "clp2", "n": 6, "m": 1, "citation": "two-theta corollary 6 at m=1"},
{"id": "clp2.6.m2", "kind": "clp2", "n": 6, "m": 2, "citation": "two-theta corollary 6 at m=2"},
{"id": "clp2.6.m3", "kind": "clp2", "n": 6, "m": 3, "citation": "two-theta corollary 6 at m=3"},
{"id": "clp2.6.m4", "kind": "clp2", "n": 6, "m": 4, "citation": "two-theta corollary 6 at m=4"},
{"id": "clp2.6.m5", "kind": "clp2", "n": 6, "m": 5, "citation": "two-theta corollary 6 at m=5"},
{"id": "clp2.6.m6", "kind": "clp2", "n": 6, "m": 6, "citation": "two-theta corollary 6 at m=6"},
{"id": "clp2.7.m1", "kind": "clp2", "n": 7, "m": 1, "citation": "two-theta corollary 7 at m=1"},
{"id": "clp2.7.m2", "kind": "clp2", "n": 7, "m": 2, "citation": "two-theta corollary 7 at m=2"},
{"id": "clp2.7.m3", "kind": "clp2", "n": 7, "m": 3, "citation": "two-theta corollary 7 at m=3"},
{"id": "clp2.7.m4", "kind": "clp2", "n": 7, "m": 4, "citation": "two-theta corollary 7 at m=4"},
{"id": "clp2.7.m5", "kind": "clp2", "n": 7, "m": 5, "citation": "two-theta corollary 7 at m=5"},
{"id": "clp2.7.m6", "kind": "clp2", "n": 7, "m": 6, "citation": "two-theta corollary 7 at m=6"},
{"id": "clp2.8.m1", "kind": "clp2", "n": 8, "m": 1, "citation": "two-theta corollary 8 at m=1"},
{"id": "clp2.8.m2", "kind": "clp2", "n": 8, "m": 2, "citation": "two-theta corollary 8 at m=2"},
{"id": "clp2.8.m3", "kind": "clp2", "n": 8, "m": 3, "citation": "two-theta corollary 8 at m=3"},
{"id": "clp2.8.m4", "kind": "clp2", "n": 8, "m": 4, "citation": "two-theta corollary 8 at m=4"},
{"id": "clp2.8.m5", "kind": "clp2", "n": 8, "m": 5, "citation": "two-theta corollary 8 at m=5"},
{"id": "clp2.8.m6", "kind": "clp2", "n": 8, "m": 6, "citation": "two-theta corollary 8 at m=6"},
{"id": "explicit.psi-psi-phi", "kind": "explicit", "lhs": "psi(q)^2*phi(q)", "rhs": "psi(q^2)*phi(q^2)^2 + 4*q*psi(q^2)*psi(q^4)^2", "citation": "closed form for psi(q)^2*phi(q)"},
{"id": "explicit.phi-phi-psi4", "kind": "explicit", "lhs": "phi(q)^2*psi(q^4)", "rhs": "phi(q^2)*psi(q^2)^2 + 4*q*psi(q^4)*psi(q^8)*phi(q^4)", "citation": "closed form for phi(q)^2*psi(q^4)"},
{"id": "explicit.phi-phi-phi2", "kind": "explicit", "lhs": "phi(q)^2*phi(q^2)", "rhs": "phi(q^2)*phi(q^4)^2 + 4*q*psi(q^4)*psi(q^2)^2 + 4*q^2*phi(q^2)*psi(q^8)^2", "citation": "closed form for phi(q)^2*phi(q^2)"},
{"id": "explicit.psi-psi-psi2.dissected", "kind": "explicit", "lhs": "psi(q)^2*psi(q^2)", "rhs": "phi(q^4)*psi(q^4)*phi(q^8) + 2*q*phi(q^8)*psi(q^4)*psi(q^8) + 2*q^2*phi(q^4)*psi(q^4)*psi(q^16) + 4*q^3*psi(q^4)*psi(q^8)*psi(q^16)", "citation": "closed form for psi(q)^2*psi(q^2)"},
{"id": "explicit.psi-psi-psi2.product", "kind": "explicit", "lhs": "psi(q)^2*psi(q^2)", "rhs": "phi(q)*phi(q^2)*psi(q^4)", "citation": "closed form for psi(q)^2*psi(q^2)"},
{"id": "explicit.phi-phi2-phi4", "kind": "explicit", "lhs": "phi(q)*phi(q^2)*phi(q^4)", "rhs": "phi(q^2)*phi(q^4)^2 + 2*q*psi(q^2)^2*psi(q^4)", "citation": "closed form for phi(q)*phi(q^2)*phi(q^4)"},
{"id": "explicit.Y-Y-Y2", "kind": "explicit", "lhs": "Y(q)^2*Y(q^2)", "rhs": "phi(q^6)*phi(q^12)*Y(q^4) + 2*q*psi(q^6)*psi(q^12)*X(q^2) + 2*q^2*phi(q^6)*psi(q^24)*X(q^8)", "citation": "closed form for Y(q)^2*Y(q^2)"},
{"id": "explicit.X4-Y-Y", "kind": "explicit", "lhs": "X(q^4)*Y(q)^2", "rhs": "phi(q^6)*psi(q^6)*X(q^2) + 2*q*phi(q^12)*psi(q^12)*X(q^8) + 4*q^5*psi(q^12)*psi(q^24)*Y(q^4)", "citation": "closed form for X(q^4)*Y(q)^2"},
{"id": "explicit.psi12-Y-Y", "kind": "explicit", "lhs": "psi(q^12)*Y(q)^2", "rhs": "phi(q^6)*psi(q^12)*Y(q^2) + 2*q*psi(q^12)*X(q^8)*Y(q^4)", "citation": "closed form for psi(q^12)*Y(q)^2"},
{"id": "explicit.phi3-phi3-Y2", "kind": "explicit", "lhs": "phi(q^3)^2*Y(q^2)", "rhs": "phi(q^6)*X(q^8)^2 + q^2*phi(q^6)*Y(q^4)^2 + 4*q^3*psi(q^12)^2*Y(q^2)", "citation": "closed form for phi(q^3)^2*Y(q^2)"},
{"id": "explicit.phi3-phi3-X4", "kind": "explicit", "lhs": "phi(q^3)^2*X(q^4)", "rhs": "phi(q^6)*X(q^2)^2 - 2*q^2*phi(q^6)*psi(q^12)*Y(q^2) + 4*q^3*psi(q^12)*X(q^8)*Y(q^4)", "citation": "closed form for phi(q^3)^2*X(q^4)"},
{"id": "explicit.X2-Y-Y", "kind": "explicit", "lhs": "X(q^2)*Y(q)^2", "rhs": "phi(q^6)*X(q^6)*X(q^12) + 2*q*phi(q^18)*psi(q^12)*X(q^6) + 2*q^2*phi(q^6)*psi(q^18)*X(q^12) + 2*q^3*psi(q^12)*X(q^6)*Y(q^6) + 2*q^4*phi(q^6)*psi(q^36)*X(q^6) + 4*q^5*psi(q^18)*psi(q^12)*Y(q^6)", "citation": "closed form for X(q^2)*Y(q)^2"}
]
)json";

}  // namespace qtriple
