#pragma once

// Built-in relation catalog. One JSON object per line.

#include <string_view>

namespace qtriple {

inline constexpr std::string_view builtin_relation_json = R"json(
[
{"id": "rT-1-1-1.even", "residue": [2, 0], "lhs": {"form": "rT", "coeffs": [1, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "Rt", "coeffs": [2, 2, 2], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "rT-1-1-1 family, even N", "status": "pinned"},
{"id": "rT-1-1-1.odd", "residue": [2, 1], "lhs": {"form": "rT", "coeffs": [1, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "T", "coeffs": [2, 4, 4], "alpha": 1, "beta": -1, "scalar": 4}], "citation": "rT-1-1-1 family, odd N", "status": "pinned"},
{"id": "rT-1-1-1.combined", "residue": null, "lhs": {"form": "rT", "coeffs": [1, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "Rt", "coeffs": [2, 2, 2], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "T", "coeffs": [2, 4, 4], "alpha": 1, "beta": -1, "scalar": 4}], "citation": "rT-1-1-1 family, all N, combined form", "status": "pinned"},
{"id": "rT-1-1-1.aux.1", "residue": null, "lhs": {"form": "rT", "coeffs": [1, 1, 1], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "Rt", "coeffs": [1, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "rT-1-1-1 family, auxiliary line 1", "status": "pinned"},
{"id": "rT-1-1-1.aux.2", "residue": null, "lhs": {"form": "rT", "coeffs": [1, 1, 1], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "T", "coeffs": [1, 2, 2], "alpha": 1, "beta": 0, "scalar": 4}], "citation": "rT-1-1-1 family, auxiliary line 2 (as stated)", "status": "empirical"},
{"id": "rT-1-1-1.aux.2.fixed", "residue": null, "lhs": {"form": "rT", "coeffs": [1, 1, 1], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "T", "coeffs": [1, 2, 2], "alpha": 1, "beta": 0, "scalar": 4}], "citation": "rT-1-1-1 family, auxiliary line 2, with the form or argument corrected", "status": "pinned"},
{"id": "Rt-1-1-4.even", "residue": [2, 0], "lhs": {"form": "Rt", "coeffs": [1, 1, 4], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "rT", "coeffs": [2, 2, 2], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "Rt-1-1-4 family, even N", "status": "pinned"},
{"id": "Rt-1-1-4.1mod4", "residue": [4, 1], "lhs": {"form": "Rt", "coeffs": [1, 1, 4], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "rT", "coeffs": [4, 4, 8], "alpha": 1, "beta": -1, "scalar": 4}], "citation": "Rt-1-1-4 family, N = 1 mod 4", "status": "pinned"},
{"id": "Rt-1-1-4.3mod4", "residue": [4, 3], "lhs": {"form": "Rt", "coeffs": [1, 1, 4], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [], "citation": "Rt-1-1-4 family, N = 3 mod 4", "status": "pinned"},
{"id": "Rt-1-1-4.combined", "residue": null, "lhs": {"form": "Rt", "coeffs": [1, 1, 4], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "rT", "coeffs": [2, 2, 2], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rT", "coeffs": [4, 4, 8], "alpha": 1, "beta": -1, "scalar": 4}], "citation": "Rt-1-1-4 family, all N, combined form", "status": "pinned"},
{"id": "Rt-1-1-4.aux.1", "residue": null, "lhs": {"form": "Rt", "coeffs": [1, 1, 4], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "rT", "coeffs": [1, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "Rt-1-1-4 family, auxiliary line 1", "status": "pinned"},
{"id": "Rt-1-1-4.aux.2", "residue": null, "lhs": {"form": "Rt", "coeffs": [1, 1, 4], "alpha": 4, "beta": 1, "scalar": 1}, "rhs": [{"form": "rT", "coeffs": [1, 1, 2], "alpha": 1, "beta": 0, "scalar": 4}], "citation": "Rt-1-1-4 family, auxiliary line 2", "status": "pinned"},
{"id": "Rt-1-1-4.aux.3", "residue": null, "lhs": {"form": "Rt", "coeffs": [1, 1, 4], "alpha": 4, "beta": 3, "scalar": 1}, "rhs": [], "citation": "Rt-1-1-4 family, auxiliary line 3", "status": "pinned"},
{"id": "r-1-1-2.even", "residue": [2, 0], "lhs": {"form": "r", "coeffs": [1, 1, 2], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "r", "coeffs": [2, 4, 4], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rT", "coeffs": [2, 8, 8], "alpha": 1, "beta": -2, "scalar": 4}], "citation": "r-1-1-2 family, even N", "status": "pinned"},
{"id": "r-1-1-2.odd", "residue": [2, 1], "lhs": {"form": "r", "coeffs": [1, 1, 2], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "T", "coeffs": [2, 2, 4], "alpha": 1, "beta": -1, "scalar": 4}], "citation": "r-1-1-2 family, odd N", "status": "pinned"},
{"id": "r-1-1-2.combined", "residue": null, "lhs": {"form": "r", "coeffs": [1, 1, 2], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "r", "coeffs": [2, 4, 4], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "T", "coeffs": [2, 2, 4], "alpha": 1, "beta": -1, "scalar": 4}, {"form": "rT", "coeffs": [2, 8, 8], "alpha": 1, "beta": -2, "scalar": 4}], "citation": "r-1-1-2 family, all N, combined form", "status": "pinned"},
{"id": "r-1-1-2.aux.1", "residue": null, "lhs": {"form": "r", "coeffs": [1, 1, 2], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "r", "coeffs": [1, 2, 2], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rT", "coeffs": [1, 4, 4], "alpha": 1, "beta": -1, "scalar": 4}], "citation": "r-1-1-2 family, auxiliary line 1", "status": "pinned"},
{"id": "r-1-1-2.aux.2", "residue": null, "lhs": {"form": "r", "coeffs": [1, 1, 2], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "T", "coeffs": [1, 1, 2], "alpha": 1, "beta": 0, "scalar": 4}], "citation": "r-1-1-2 family, auxiliary line 2", "status": "pinned"},
{"id": "T-1-1-2.1", "residue": null, "lhs": {"form": "T", "coeffs": [1, 1, 2], "alpha": 4, "beta": 0, "scalar": 1}, "rhs": [{"form": "Rt", "coeffs": [1, 2, 1], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "T-1-1-2 family, line 1", "status": "pinned"},
{"id": "T-1-1-2.2", "residue": null, "lhs": {"form": "T", "coeffs": [1, 1, 2], "alpha": 4, "beta": 1, "scalar": 1}, "rhs": [{"form": "rT", "coeffs": [2, 1, 2], "alpha": 1, "beta": 0, "scalar": 2}], "citation": "T-1-1-2 family, line 2", "status": "pinned"},
{"id": "T-1-1-2.3", "residue": null, "lhs": {"form": "T", "coeffs": [1, 1, 2], "alpha": 4, "beta": 2, "scalar": 1}, "rhs": [{"form": "rT", "coeffs": [1, 1, 4], "alpha": 1, "beta": 0, "scalar": 2}], "citation": "T-1-1-2 family, line 3", "status": "pinned"},
{"id": "T-1-1-2.4", "residue": null, "lhs": {"form": "T", "coeffs": [1, 1, 2], "alpha": 4, "beta": 3, "scalar": 1}, "rhs": [{"form": "T", "coeffs": [1, 2, 4], "alpha": 1, "beta": 0, "scalar": 4}], "citation": "T-1-1-2 family, line 4", "status": "pinned"},
{"id": "T-1-1-2.5", "residue": null, "lhs": {"form": "r", "coeffs": [1, 2, 4], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "r", "coeffs": [1, 2, 2], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "T-1-1-2 family, line 5", "status": "pinned"},
{"id": "T-1-1-2.6", "residue": null, "lhs": {"form": "r", "coeffs": [1, 2, 4], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "T", "coeffs": [1, 1, 2], "alpha": 1, "beta": 0, "scalar": 2}], "citation": "T-1-1-2 family, line 6", "status": "pinned"},
{"id": "T-1-1-2.7", "residue": null, "lhs": {"form": "r", "coeffs": [1, 2, 4], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "r", "coeffs": [2, 4, 4], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "T", "coeffs": [2, 2, 4], "alpha": 1, "beta": -1, "scalar": 2}], "citation": "T-1-1-2 family, line 7", "status": "pinned"},
{"id": "G-1-1-2.1", "residue": null, "lhs": {"form": "G", "coeffs": [1, 1, 2], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "Rg", "coeffs": [3, 6, 2], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rtp", "coeffs": [3, 12, 4], "alpha": 1, "beta": -1, "scalar": 2}], "citation": "G-1-1-2 family, line 1", "status": "pinned"},
{"id": "G-1-1-2.2", "residue": null, "lhs": {"form": "G", "coeffs": [1, 1, 2], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "Tp", "coeffs": [3, 6, 1], "alpha": 1, "beta": 0, "scalar": 2}], "citation": "G-1-1-2 family, line 2", "status": "pinned"},
{"id": "pG-4-1-1.1", "residue": null, "lhs": {"form": "pG", "coeffs": [4, 1, 1], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "rtp", "coeffs": [3, 3, 1], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "pG-4-1-1 family, line 1", "status": "pinned"},
{"id": "pG-4-1-1.2", "residue": null, "lhs": {"form": "pG", "coeffs": [4, 1, 1], "alpha": 4, "beta": 1, "scalar": 1}, "rhs": [{"form": "rtp", "coeffs": [3, 3, 2], "alpha": 1, "beta": 0, "scalar": 2}, {"form": "Tg", "coeffs": [3, 6, 1], "alpha": 1, "beta": -1, "scalar": 4}], "citation": "pG-4-1-1 family, line 2", "status": "pinned"},
{"id": "pG-4-1-1.3", "residue": null, "lhs": {"form": "pG", "coeffs": [4, 1, 1], "alpha": 4, "beta": 3, "scalar": 1}, "rhs": [], "citation": "pG-4-1-1 family, line 3", "status": "pinned"},
{"id": "pG-4-1-1.combined", "residue": null, "lhs": {"form": "pG", "coeffs": [4, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "rtp", "coeffs": [6, 6, 2], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rtp", "coeffs": [12, 12, 8], "alpha": 1, "beta": -1, "scalar": 2}, {"form": "Tg", "coeffs": [12, 24, 4], "alpha": 1, "beta": -5, "scalar": 4}], "citation": "pG-4-1-1 family, all N, combined form", "status": "pinned"},
{"id": "tG-12-1-1.1", "residue": null, "lhs": {"form": "tG", "coeffs": [12, 1, 1], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "rtg", "coeffs": [3, 6, 1], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "tG-12-1-1 family, line 1", "status": "pinned"},
{"id": "tG-12-1-1.2", "residue": null, "lhs": {"form": "tG", "coeffs": [12, 1, 1], "alpha": 4, "beta": 1, "scalar": 1}, "rhs": [{"form": "tpg", "coeffs": [3, 2, 1], "alpha": 1, "beta": 0, "scalar": 2}], "citation": "tG-12-1-1 family, line 2", "status": "pinned"},
{"id": "tG-12-1-1.3", "residue": null, "lhs": {"form": "tG", "coeffs": [12, 1, 1], "alpha": 4, "beta": 3, "scalar": 1}, "rhs": [], "citation": "tG-12-1-1 family, line 3", "status": "pinned"},
{"id": "Rg-3-3-2.1", "residue": null, "lhs": {"form": "Rg", "coeffs": [3, 3, 2], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "rP", "coeffs": [3, 4, 4], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rG", "coeffs": [3, 2, 2], "alpha": 1, "beta": -1, "scalar": 1}], "citation": "Rg-3-3-2 family, line 1", "status": "pinned"},
{"id": "Rg-3-3-2.2", "residue": null, "lhs": {"form": "Rg", "coeffs": [3, 3, 2], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "Tg", "coeffs": [6, 6, 1], "alpha": 1, "beta": -1, "scalar": 4}], "citation": "Rg-3-3-2 family, line 2", "status": "pinned"},
{"id": "Rp-3-3-4.1", "residue": null, "lhs": {"form": "Rp", "coeffs": [3, 3, 4], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "rP", "coeffs": [3, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rtg", "coeffs": [3, 6, 1], "alpha": 1, "beta": -1, "scalar": -2}], "citation": "Rp-3-3-4 family, line 1", "status": "pinned"},
{"id": "Rp-3-3-4.2", "residue": null, "lhs": {"form": "Rp", "coeffs": [3, 3, 2], "alpha": 4, "beta": 3, "scalar": 1}, "rhs": [{"form": "tpg", "coeffs": [3, 2, 1], "alpha": 1, "beta": 0, "scalar": 4}], "citation": "Rp-3-3-4 family, line 2 (as stated)", "status": "empirical"},
{"id": "Rp-3-3-4.2.fixed", "residue": null, "lhs": {"form": "Rp", "coeffs": [3, 3, 4], "alpha": 4, "beta": 3, "scalar": 1}, "rhs": [{"form": "tpg", "coeffs": [3, 2, 1], "alpha": 1, "beta": 0, "scalar": 4}], "citation": "Rp-3-3-4 family, line 2, with the form or argument corrected", "status": "pinned"},
{"id": "Rp-3-3-4.3", "residue": null, "lhs": {"form": "Rp", "coeffs": [3, 3, 2], "alpha": 4, "beta": 1, "scalar": 1}, "rhs": [], "citation": "Rp-3-3-4 family, line 3 (as stated)", "status": "empirical"},
{"id": "Rp-3-3-4.3.fixed", "residue": null, "lhs": {"form": "Rp", "coeffs": [3, 3, 4], "alpha": 4, "beta": 1, "scalar": 1}, "rhs": [], "citation": "Rp-3-3-4 family, line 3, with the form or argument corrected", "status": "pinned"},
{"id": "pG-2-1-1.1", "residue": null, "lhs": {"form": "pG", "coeffs": [2, 1, 1], "alpha": 6, "beta": 0, "scalar": 1}, "rhs": [{"form": "rP", "coeffs": [1, 1, 2], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "pG-2-1-1 family, line 1", "status": "pinned"},
{"id": "pG-2-1-1.2", "residue": null, "lhs": {"form": "pG", "coeffs": [2, 1, 1], "alpha": 6, "beta": 1, "scalar": 1}, "rhs": [{"form": "rtp", "coeffs": [3, 2, 1], "alpha": 1, "beta": 0, "scalar": 2}], "citation": "pG-2-1-1 family, line 2", "status": "pinned"},
{"id": "pG-2-1-1.3", "residue": null, "lhs": {"form": "pG", "coeffs": [2, 1, 1], "alpha": 6, "beta": 2, "scalar": 1}, "rhs": [{"form": "rtp", "coeffs": [1, 3, 2], "alpha": 1, "beta": 0, "scalar": 2}], "citation": "pG-2-1-1 family, line 3", "status": "pinned"},
{"id": "pG-2-1-1.4", "residue": null, "lhs": {"form": "pG", "coeffs": [2, 1, 1], "alpha": 6, "beta": 3, "scalar": 1}, "rhs": [{"form": "tpg", "coeffs": [2, 1, 1], "alpha": 1, "beta": 0, "scalar": 2}], "citation": "pG-2-1-1 family, line 4", "status": "pinned"},
{"id": "pG-2-1-1.5", "residue": null, "lhs": {"form": "pG", "coeffs": [2, 1, 1], "alpha": 6, "beta": 4, "scalar": 1}, "rhs": [{"form": "rtp", "coeffs": [1, 6, 1], "alpha": 1, "beta": 0, "scalar": 2}], "citation": "pG-2-1-1 family, line 5", "status": "pinned"},
{"id": "pG-2-1-1.6", "residue": null, "lhs": {"form": "pG", "coeffs": [2, 1, 1], "alpha": 6, "beta": 5, "scalar": 1}, "rhs": [{"form": "Tg", "coeffs": [2, 3, 1], "alpha": 1, "beta": 0, "scalar": 4}], "citation": "pG-2-1-1 family, line 6", "status": "pinned"},
{"id": "tri-block.1", "residue": null, "lhs": {"form": "T", "coeffs": [1, 1, 4], "alpha": 1, "beta": 0, "scalar": 2}, "rhs": [{"form": "rpg", "coeffs": [1, 2, 2], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "Rt", "coeffs": [1, 6, 6], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "tri-block family, line 1", "status": "pinned"},
{"id": "tri-block.2", "residue": null, "lhs": {"form": "T", "coeffs": [1, 1, 4], "alpha": 2, "beta": 0, "scalar": 2}, "rhs": [{"form": "rpg", "coeffs": [2, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "Rt", "coeffs": [2, 3, 3], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "tri-block family, line 2", "status": "pinned"},
{"id": "tri-block.3", "residue": null, "lhs": {"form": "T", "coeffs": [1, 1, 4], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "tpg", "coeffs": [4, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rT", "coeffs": [3, 3, 4], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "tri-block family, line 3", "status": "pinned"},
{"id": "tri-block.4", "residue": null, "lhs": {"form": "T", "coeffs": [1, 1, 8], "alpha": 1, "beta": 0, "scalar": 4}, "rhs": [{"form": "r", "coeffs": [1, 4, 4], "alpha": 4, "beta": 5, "scalar": 1}, {"form": "r", "coeffs": [1, 4, 16], "alpha": 4, "beta": 5, "scalar": -1}], "citation": "tri-block family, line 4", "status": "empirical"},
{"id": "tri-block.5", "residue": null, "lhs": {"form": "T", "coeffs": [1, 1, 8], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "T", "coeffs": [1, 2, 2], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "tri-block family, line 5", "status": "pinned"},
{"id": "tri-block.6", "residue": null, "lhs": {"form": "T", "coeffs": [1, 1, 8], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "T", "coeffs": [1, 4, 4], "alpha": 1, "beta": 0, "scalar": 2}], "citation": "tri-block family, line 6", "status": "pinned"},
{"id": "tri-block.7", "residue": null, "lhs": {"form": "r", "coeffs": [1, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "r", "coeffs": [1, 1, 4], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "r", "coeffs": [1, 4, 4], "alpha": 4, "beta": 0, "scalar": 1}, {"form": "r", "coeffs": [1, 4, 16], "alpha": 4, "beta": 0, "scalar": -1}], "citation": "tri-block family, line 7", "status": "pinned"},
{"id": "tri-block.8", "residue": null, "lhs": {"form": "r", "coeffs": [1, 4, 4], "alpha": 4, "beta": 2, "scalar": 1}, "rhs": [{"form": "r", "coeffs": [1, 4, 16], "alpha": 4, "beta": 2, "scalar": 1}], "citation": "tri-block family, line 8", "status": "pinned"},
{"id": "tri-block.9", "residue": null, "lhs": {"form": "r", "coeffs": [1, 4, 4], "alpha": 4, "beta": 3, "scalar": 1}, "rhs": [{"form": "r", "coeffs": [1, 4, 16], "alpha": 4, "beta": 3, "scalar": 1}], "citation": "tri-block family, line 9", "status": "pinned"},
{"id": "tri-block.10", "residue": null, "lhs": {"form": "T", "coeffs": [2, 3, 3], "alpha": 4, "beta": 0, "scalar": 1}, "rhs": [{"form": "Rt", "coeffs": [3, 3, 2], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "tri-block family, line 10", "status": "pinned"},
{"id": "tri-block.11", "residue": null, "lhs": {"form": "T", "coeffs": [2, 3, 3], "alpha": 4, "beta": 1, "scalar": 1}, "rhs": [{"form": "T", "coeffs": [1, 3, 12], "alpha": 2, "beta": -1, "scalar": 2}], "citation": "tri-block family, line 11", "status": "pinned"},
{"id": "tri-block.12", "residue": null, "lhs": {"form": "T", "coeffs": [2, 3, 3], "alpha": 4, "beta": 2, "scalar": 1}, "rhs": [{"form": "Rt", "coeffs": [1, 3, 6], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "tri-block family, line 12", "status": "pinned"},
{"id": "tri-block.13", "residue": null, "lhs": {"form": "T", "coeffs": [2, 3, 3], "alpha": 4, "beta": 3, "scalar": 1}, "rhs": [{"form": "T", "coeffs": [1, 3, 12], "alpha": 2, "beta": 0, "scalar": 2}], "citation": "tri-block family, line 13", "status": "pinned"},
{"id": "tri-block.14", "residue": null, "lhs": {"form": "T", "coeffs": [2, 7, 7], "alpha": 4, "beta": 0, "scalar": 1}, "rhs": [{"form": "Rt", "coeffs": [7, 14, 4], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "Rt", "coeffs": [2, 7, 12], "alpha": 1, "beta": -3, "scalar": 1}], "citation": "tri-block family, line 14 (as stated)", "status": "empirical"},
{"id": "tri-block.15", "residue": null, "lhs": {"form": "T", "coeffs": [2, 7, 7], "alpha": 4, "beta": 2, "scalar": 1}, "rhs": [{"form": "rT", "coeffs": [7, 1, 7], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "tri-block family, line 15", "status": "pinned"},
{"id": "tri-block.16", "residue": null, "lhs": {"form": "T", "coeffs": [2, 7, 7], "alpha": 8, "beta": 3, "scalar": 1}, "rhs": [{"form": "rT", "coeffs": [1, 7, 14], "alpha": 1, "beta": -2, "scalar": 2}], "citation": "tri-block family, line 16", "status": "pinned"},
{"id": "tri-block.17", "residue": null, "lhs": {"form": "T", "coeffs": [2, 7, 7], "alpha": 8, "beta": 7, "scalar": 1}, "rhs": [{"form": "rT", "coeffs": [7, 2, 7], "alpha": 1, "beta": 0, "scalar": 2}], "citation": "tri-block family, line 17", "status": "pinned"},
{"id": "tri-block.18", "residue": null, "lhs": {"form": "T", "coeffs": [2, 7, 7], "alpha": 4, "beta": 1, "scalar": 1}, "rhs": [{"form": "T", "coeffs": [1, 7, 14], "alpha": 1, "beta": -2, "scalar": 2}], "citation": "tri-block family, line 18", "status": "pinned"},
{"id": "tri-block.19", "residue": null, "lhs": {"form": "T", "coeffs": [2, 5, 5], "alpha": 4, "beta": 0, "scalar": 1}, "rhs": [{"form": "Rt", "coeffs": [5, 30, 3], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rpg", "coeffs": [5, 1, 10], "alpha": 1, "beta": -3, "scalar": 1}], "citation": "tri-block family, line 19", "status": "pinned"},
{"id": "tri-block.20", "residue": null, "lhs": {"form": "T", "coeffs": [2, 5, 5], "alpha": 4, "beta": 0, "scalar": 1}, "rhs": [{"form": "rP", "coeffs": [5, 4, 5], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rT", "coeffs": [5, 12, 15], "alpha": 1, "beta": -3, "scalar": 2}], "citation": "tri-block family, line 20", "status": "pinned"},
{"id": "tri-block.21", "residue": null, "lhs": {"form": "T", "coeffs": [2, 5, 5], "alpha": 4, "beta": 1, "scalar": 1}, "rhs": [{"form": "tP", "coeffs": [10, 4, 5], "alpha": 1, "beta": -1, "scalar": 2}, {"form": "T", "coeffs": [10, 12, 15], "alpha": 1, "beta": -4, "scalar": 2}], "citation": "tri-block family, line 21 (as stated)", "status": "empirical"},
{"id": "tri-block.22", "residue": null, "lhs": {"form": "T", "coeffs": [2, 5, 5], "alpha": 4, "beta": 1, "scalar": 1}, "rhs": [{"form": "rT", "coeffs": [30, 10, 3], "alpha": 1, "beta": -1, "scalar": 2}, {"form": "tpg", "coeffs": [10, 1, 10], "alpha": 1, "beta": -4, "scalar": 2}], "citation": "tri-block family, line 22", "status": "pinned"},
{"id": "tri-block.23", "residue": null, "lhs": {"form": "T", "coeffs": [2, 5, 5], "alpha": 4, "beta": 2, "scalar": 1}, "rhs": [{"form": "rP", "coeffs": [5, 1, 20], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rT", "coeffs": [5, 3, 60], "alpha": 1, "beta": -7, "scalar": 2}], "citation": "tri-block family, line 23", "status": "pinned"},
{"id": "tri-block.24", "residue": null, "lhs": {"form": "T", "coeffs": [2, 5, 5], "alpha": 4, "beta": 2, "scalar": 1}, "rhs": [{"form": "rpg", "coeffs": [5, 5, 2], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "Rt", "coeffs": [5, 6, 15], "alpha": 1, "beta": -1, "scalar": 1}], "citation": "tri-block family, line 24", "status": "pinned"},
{"id": "tri-block.25", "residue": null, "lhs": {"form": "T", "coeffs": [2, 5, 5], "alpha": 4, "beta": 3, "scalar": 1}, "rhs": [{"form": "tpg", "coeffs": [10, 20, 1], "alpha": 1, "beta": -1, "scalar": 2}, {"form": "T", "coeffs": [3, 10, 6], "alpha": 1, "beta": -8, "scalar": 4}], "citation": "tri-block family, line 25 (as stated)", "status": "empirical"},
{"id": "tri-block.26", "residue": null, "lhs": {"form": "T", "coeffs": [2, 5, 5], "alpha": 20, "beta": 11, "scalar": 1}, "rhs": [{"form": "tpg", "coeffs": [10, 5, 2], "alpha": 5, "beta": 1, "scalar": 2}, {"form": "rT", "coeffs": [12, 2, 3], "alpha": 1, "beta": 0, "scalar": 2}], "citation": "tri-block family, line 26 (as stated)", "status": "empirical"},
{"id": "tri-block.27", "residue": null, "lhs": {"form": "T", "coeffs": [2, 5, 5], "alpha": 20, "beta": 3, "scalar": 1}, "rhs": [{"form": "tpg", "coeffs": [10, 5, 2], "alpha": 5, "beta": -1, "scalar": 2}], "citation": "tri-block family, line 27", "status": "pinned"},
{"id": "tri-block.28", "residue": null, "lhs": {"form": "T", "coeffs": [2, 5, 5], "alpha": 20, "beta": 7, "scalar": 1}, "rhs": [{"form": "tpg", "coeffs": [10, 5, 2], "alpha": 5, "beta": 0, "scalar": 2}], "citation": "tri-block family, line 28 (as stated)", "status": "empirical"},
{"id": "tri-block.29", "residue": null, "lhs": {"form": "T", "coeffs": [2, 5, 5], "alpha": 20, "beta": 15, "scalar": 1}, "rhs": [{"form": "tpg", "coeffs": [10, 5, 2], "alpha": 5, "beta": 2, "scalar": 2}], "citation": "tri-block family, line 29 (as stated)", "status": "empirical"},
{"id": "tri-block.30", "residue": null, "lhs": {"form": "T", "coeffs": [2, 5, 5], "alpha": 20, "beta": 19, "scalar": 1}, "rhs": [{"form": "tpg", "coeffs": [10, 5, 2], "alpha": 5, "beta": 3, "scalar": 2}], "citation": "tri-block family, line 30", "status": "pinned"},
{"id": "tri-block.31", "residue": null, "lhs": {"form": "T", "coeffs": [2, 15, 15], "alpha": 4, "beta": 0, "scalar": 1}, "rhs": [{"form": "rT", "coeffs": [15, 3, 5], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "tri-block family, line 31", "status": "pinned"},
{"id": "tri-block.32", "residue": null, "lhs": {"form": "T", "coeffs": [2, 15, 15], "alpha": 4, "beta": 2, "scalar": 1}, "rhs": [{"form": "Rt", "coeffs": [10, 15, 12], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "Rt", "coeffs": [6, 15, 20], "alpha": 1, "beta": -1, "scalar": 1}], "citation": "tri-block family, line 32", "status": "pinned"},
{"id": "tri-block.33", "residue": null, "lhs": {"form": "T", "coeffs": [2, 15, 15], "alpha": 4, "beta": 3, "scalar": 1}, "rhs": [{"form": "T", "coeffs": [3, 5, 30], "alpha": 1, "beta": -3, "scalar": 2}], "citation": "tri-block family, line 33", "status": "pinned"},
{"id": "tri-block.34", "residue": null, "lhs": {"form": "T", "coeffs": [2, 15, 15], "alpha": 8, "beta": 1, "scalar": 1}, "rhs": [{"form": "rT", "coeffs": [5, 6, 15], "alpha": 1, "beta": -2, "scalar": 2}], "citation": "tri-block family, line 34", "status": "pinned"},
{"id": "tri-block.35", "residue": null, "lhs": {"form": "T", "coeffs": [2, 15, 15], "alpha": 8, "beta": 5, "scalar": 1}, "rhs": [{"form": "rT", "coeffs": [3, 10, 15], "alpha": 1, "beta": -2, "scalar": 2}], "citation": "tri-block family, line 35", "status": "pinned"},
{"id": "pg-block.1", "residue": null, "lhs": {"form": "rtg", "coeffs": [3, 12, 1], "alpha": 4, "beta": 0, "scalar": 1}, "rhs": [{"form": "Pg", "coeffs": [1, 2, 1], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "pg-block family, line 1", "status": "pinned"},
{"id": "pg-block.2", "residue": null, "lhs": {"form": "rtg", "coeffs": [3, 12, 1], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "tP", "coeffs": [6, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "pg-block family, line 2 (as stated)", "status": "empirical"},
{"id": "pg-block.3", "residue": null, "lhs": {"form": "rtg", "coeffs": [3, 12, 1], "alpha": 4, "beta": 2, "scalar": 1}, "rhs": [], "citation": "pg-block family, line 3", "status": "pinned"},
{"id": "pg-block.4", "residue": null, "lhs": {"form": "tpg", "coeffs": [3, 1, 1], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "rpg", "coeffs": [3, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "pg-block family, line 4", "status": "pinned"},
{"id": "pg-block.5", "residue": null, "lhs": {"form": "tpg", "coeffs": [3, 1, 1], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "tP", "coeffs": [6, 2, 1], "alpha": 1, "beta": 0, "scalar": 2}], "citation": "pg-block family, line 5", "status": "pinned"},
{"id": "pg-block.6", "residue": null, "lhs": {"form": "Pg", "coeffs": [2, 2, 1], "alpha": 3, "beta": 0, "scalar": 1}, "rhs": [{"form": "Rp", "coeffs": [2, 3, 4], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rtg", "coeffs": [3, 4, 2], "alpha": 1, "beta": -1, "scalar": 2}], "citation": "pg-block family, line 6", "status": "pinned"},
{"id": "pg-block.7", "residue": null, "lhs": {"form": "Pg", "coeffs": [2, 2, 1], "alpha": 3, "beta": 1, "scalar": 1}, "rhs": [{"form": "rpg", "coeffs": [2, 4, 1], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "tG", "coeffs": [4, 2, 1], "alpha": 1, "beta": -1, "scalar": 2}], "citation": "pg-block family, line 7", "status": "pinned"},
{"id": "pg-block.8", "residue": null, "lhs": {"form": "Pg", "coeffs": [2, 2, 1], "alpha": 3, "beta": 2, "scalar": 1}, "rhs": [{"form": "rtg", "coeffs": [6, 4, 1], "alpha": 1, "beta": 0, "scalar": 2}, {"form": "rtg", "coeffs": [2, 12, 1], "alpha": 1, "beta": -1, "scalar": 2}], "citation": "pg-block family, line 8", "status": "pinned"},
{"id": "pg-block.9", "residue": null, "lhs": {"form": "Pg", "coeffs": [1, 1, 1], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "rtp", "coeffs": [3, 3, 1], "alpha": 2, "beta": 0, "scalar": 1}, {"form": "Tp", "coeffs": [3, 6, 2], "alpha": 1, "beta": -1, "scalar": 4}], "citation": "pg-block family, line 9", "status": "pinned"},
{"id": "pg-block.10", "residue": null, "lhs": {"form": "Pg", "coeffs": [1, 1, 1], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "rtp", "coeffs": [3, 3, 1], "alpha": 2, "beta": 1, "scalar": 1}, {"form": "rtg", "coeffs": [3, 3, 1], "alpha": 1, "beta": 0, "scalar": 2}], "citation": "pg-block family, line 10", "status": "pinned"},
{"id": "pg-block.11", "residue": null, "lhs": {"form": "Tg", "coeffs": [3, 3, 1], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "rtg", "coeffs": [3, 6, 1], "alpha": 2, "beta": 0, "scalar": 1}, {"form": "tP", "coeffs": [3, 2, 2], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "pg-block family, line 11 (as stated)", "status": "empirical"},
{"id": "pg-block.12", "residue": null, "lhs": {"form": "Tg", "coeffs": [3, 3, 1], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "rtg", "coeffs": [3, 6, 1], "alpha": 2, "beta": 1, "scalar": 1}, {"form": "tG", "coeffs": [3, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "pg-block family, line 12 (as stated)", "status": "empirical"},
{"id": "mixed-block.1", "residue": null, "lhs": {"form": "Rt", "coeffs": [1, 1, 2], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "rP", "coeffs": [1, 1, 2], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rT", "coeffs": [1, 3, 6], "alpha": 1, "beta": 0, "scalar": 2}], "citation": "mixed-block family, line 1 (as stated)", "status": "empirical"},
{"id": "mixed-block.2", "residue": null, "lhs": {"form": "Tg", "coeffs": [3, 3, 1], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "rtg", "coeffs": [3, 6, 1], "alpha": 2, "beta": 1, "scalar": 1}, {"form": "tG", "coeffs": [3, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "mixed-block family, line 2 (as stated)", "status": "empirical"},
{"id": "mixed-block.4", "residue": null, "lhs": {"form": "Rt", "coeffs": [1, 1, 2], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "tpg", "coeffs": [2, 1, 1], "alpha": 1, "beta": 0, "scalar": 2}, {"form": "rT", "coeffs": [3, 2, 3], "alpha": 1, "beta": 0, "scalar": 2}], "citation": "mixed-block family, line 4", "status": "pinned"},
{"id": "mixed-block.5", "residue": null, "lhs": {"form": "rG", "coeffs": [6, 1, 1], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "rP", "coeffs": [3, 4, 4], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rG", "coeffs": [3, 2, 2], "alpha": 1, "beta": -1, "scalar": 1}], "citation": "mixed-block family, line 5", "status": "pinned"},
{"id": "mixed-block.6", "residue": null, "lhs": {"form": "rG", "coeffs": [6, 1, 1], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "tP", "coeffs": [6, 1, 1], "alpha": 1, "beta": 0, "scalar": 2}, {"form": "Tg", "coeffs": [6, 6, 1], "alpha": 1, "beta": -1, "scalar": -4}], "citation": "mixed-block family, line 6", "status": "pinned"},
{"id": "mixed-block.7", "residue": null, "lhs": {"form": "tP", "coeffs": [6, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "rpg", "coeffs": [3, 4, 2], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "Tg", "coeffs": [6, 6, 1], "alpha": 1, "beta": -1, "scalar": 2}], "citation": "mixed-block family, line 7", "status": "pinned"},
{"id": "mixed-block.8", "residue": null, "lhs": {"form": "Rg", "coeffs": [3, 6, 1], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "P", "coeffs": [1, 1, 2], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "tpg", "coeffs": [6, 2, 1], "alpha": 1, "beta": -1, "scalar": -2}], "citation": "mixed-block family, line 8", "status": "pinned"},
{"id": "mixed-block.9", "residue": null, "lhs": {"form": "Rg", "coeffs": [3, 6, 1], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "Pg", "coeffs": [4, 4, 1], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "G", "coeffs": [1, 2, 2], "alpha": 1, "beta": -1, "scalar": 1}], "citation": "mixed-block family, line 9", "status": "pinned"},
{"id": "mixed-block.10", "residue": null, "lhs": {"form": "rpg", "coeffs": [3, 4, 1], "alpha": 4, "beta": 0, "scalar": 1}, "rhs": [{"form": "rP", "coeffs": [3, 1, 2], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "tpg", "coeffs": [6, 1, 1], "alpha": 1, "beta": -1, "scalar": 2}], "citation": "mixed-block family, line 10", "status": "pinned"},
{"id": "mixed-block.11", "residue": null, "lhs": {"form": "rpg", "coeffs": [3, 4, 1], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "tpg", "coeffs": [3, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "mixed-block family, line 11", "status": "pinned"},
{"id": "mixed-block.12", "residue": null, "lhs": {"form": "rpg", "coeffs": [3, 4, 1], "alpha": 4, "beta": 2, "scalar": 1}, "rhs": [], "citation": "mixed-block family, line 12", "status": "pinned"},
{"id": "mixed-block.13", "residue": null, "lhs": {"form": "tpg", "coeffs": [3, 2, 1], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "rtp", "coeffs": [12, 6, 1], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "Tp", "coeffs": [6, 24, 1], "alpha": 1, "beta": -3, "scalar": 2}], "citation": "mixed-block family, line 13", "status": "pinned"},
{"id": "mixed-block.14", "residue": null, "lhs": {"form": "tpg", "coeffs": [3, 2, 1], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "rtp", "coeffs": [3, 6, 1], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "mixed-block family, line 14", "status": "pinned"},
{"id": "mixed-block.15", "residue": null, "lhs": {"form": "tG", "coeffs": [4, 1, 1], "alpha": 4, "beta": 1, "scalar": 1}, "rhs": [{"form": "Tp", "coeffs": [1, 3, 1], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rtp", "coeffs": [2, 3, 4], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "Tg", "coeffs": [3, 4, 2], "alpha": 1, "beta": -1, "scalar": 2}], "citation": "mixed-block family, line 15", "status": "pinned"},
{"id": "mixed-block.16", "residue": null, "lhs": {"form": "tG", "coeffs": [4, 1, 1], "alpha": 4, "beta": 3, "scalar": 1}, "rhs": [], "citation": "mixed-block family, line 16", "status": "pinned"},
{"id": "mixed-block.17", "residue": null, "lhs": {"form": "rtg", "coeffs": [3, 4, 1], "alpha": 4, "beta": 0, "scalar": 2}, "rhs": [{"form": "rP", "coeffs": [2, 1, 4], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "tP", "coeffs": [1, 1, 1], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "tpg", "coeffs": [4, 1, 2], "alpha": 1, "beta": -1, "scalar": 2}], "citation": "mixed-block family, line 17", "status": "pinned"},
{"id": "zero-block.1", "residue": null, "lhs": {"form": "rtg", "coeffs": [3, 4, 1], "alpha": 4, "beta": 2, "scalar": 1}, "rhs": [], "citation": "zero-block family, line 1", "status": "pinned"},
{"id": "zero-block.2", "residue": null, "lhs": {"form": "rpg", "coeffs": [9, 4, 3], "alpha": 4, "beta": 0, "scalar": 1}, "rhs": [{"form": "rP", "coeffs": [18, 3, 4], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "tP", "coeffs": [9, 1, 3], "alpha": 1, "beta": -1, "scalar": 1}, {"form": "tpg", "coeffs": [36, 3, 2], "alpha": 1, "beta": -5, "scalar": 2}], "citation": "zero-block family, line 2", "status": "pinned"},
{"id": "zero-block.3", "residue": null, "lhs": {"form": "rpg", "coeffs": [9, 4, 3], "alpha": 4, "beta": 2, "scalar": 1}, "rhs": [], "citation": "zero-block family, line 3", "status": "pinned"},
{"id": "zero-block.4", "residue": null, "lhs": {"form": "Rt", "coeffs": [3, 3, 4], "alpha": 4, "beta": 3, "scalar": 1}, "rhs": [{"form": "T", "coeffs": [1, 3, 3], "alpha": 1, "beta": 0, "scalar": 2}, {"form": "rT", "coeffs": [6, 3, 4], "alpha": 1, "beta": 0, "scalar": 2}, {"form": "rT", "coeffs": [2, 3, 6], "alpha": 1, "beta": -1, "scalar": 2}], "citation": "zero-block family, line 4 (as stated)", "status": "empirical"},
{"id": "zero-block.5", "residue": null, "lhs": {"form": "Rt", "coeffs": [3, 3, 4], "alpha": 4, "beta": 1, "scalar": 1}, "rhs": [], "citation": "zero-block family, line 5", "status": "pinned"},
{"id": "zero-block.6", "residue": null, "lhs": {"form": "rtp", "coeffs": [3, 6, 1], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "tP", "coeffs": [3, 2, 8], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "tpg", "coeffs": [3, 2, 4], "alpha": 1, "beta": -1, "scalar": 1}], "citation": "zero-block family, line 6", "status": "pinned"},
{"id": "zero-block.7", "residue": null, "lhs": {"form": "tP", "coeffs": [3, 1, 2], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "rpg", "coeffs": [6, 4, 1], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rG", "coeffs": [12, 1, 2], "alpha": 1, "beta": -2, "scalar": 2}], "citation": "zero-block family, line 7 (as stated)", "status": "empirical"},
{"id": "zero-block.8", "residue": null, "lhs": {"form": "Tp", "coeffs": [3, 6, 1], "alpha": 1, "beta": 0, "scalar": 2}, "rhs": [{"form": "tpg", "coeffs": [6, 2, 1], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "pG", "coeffs": [4, 1, 2], "alpha": 1, "beta": 0, "scalar": 1}], "citation": "zero-block family, line 8", "status": "pinned"},
{"id": "zero-block.9", "residue": null, "lhs": {"form": "P", "coeffs": [1, 1, 2], "alpha": 1, "beta": 0, "scalar": 1}, "rhs": [{"form": "Rp", "coeffs": [3, 6, 4], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "Tp", "coeffs": [3, 6, 1], "alpha": 1, "beta": -1, "scalar": 2}, {"form": "rtg", "coeffs": [3, 12, 2], "alpha": 1, "beta": -2, "scalar": 2}], "citation": "zero-block family, line 9", "status": "pinned"},
{"id": "zero-block.10", "residue": null, "lhs": {"form": "r", "coeffs": [2, 3, 3], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "r", "coeffs": [3, 4, 12], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "T", "coeffs": [2, 3, 3], "alpha": 1, "beta": -1, "scalar": 2}, {"form": "rT", "coeffs": [3, 8, 24], "alpha": 1, "beta": -4, "scalar": 4}], "citation": "zero-block family, line 10", "status": "pinned"},
{"id": "zero-block.11", "residue": null, "lhs": {"form": "G", "coeffs": [2, 3, 3], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "Rg", "coeffs": [9, 36, 4], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "rtp", "coeffs": [9, 18, 2], "alpha": 1, "beta": -1, "scalar": 1}, {"form": "rtp", "coeffs": [9, 72, 8], "alpha": 1, "beta": -8, "scalar": 2}], "citation": "zero-block family, line 11", "status": "pinned"},
{"id": "zero-block.12", "residue": null, "lhs": {"form": "rG", "coeffs": [2, 1, 1], "alpha": 2, "beta": 0, "scalar": 1}, "rhs": [{"form": "rtp", "coeffs": [3, 2, 2], "alpha": 1, "beta": 0, "scalar": 1}, {"form": "Rg", "coeffs": [3, 4, 4], "alpha": 1, "beta": -1, "scalar": 1}, {"form": "rtp", "coeffs": [3, 8, 8], "alpha": 1, "beta": -1, "scalar": 2}], "citation": "zero-block family, line 12", "status": "pinned"},
{"id": "zero-block.13", "residue": null, "lhs": {"form": "Rg", "coeffs": [2, 3, 1], "alpha": 2, "beta": 1, "scalar": 1}, "rhs": [{"form": "rG", "coeffs": [4, 1, 4], "alpha": 1, "beta": -1, "scalar": 1}, {"form": "tpg", "coeffs": [2, 2, 1], "alpha": 1, "beta": -1, "scalar": 1}, {"form": "tpg", "coeffs": [8, 8, 1], "alpha": 1, "beta": -2, "scalar": 2}], "citation": "zero-block family, line 13 (as stated)", "status": "empirical"}
]
)json";

}  // namespace qtriple
