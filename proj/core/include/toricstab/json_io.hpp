#ifndef TORICSTAB_JSON_IO_HPP
#define TORICSTAB_JSON_IO_HPP

#include "toricstab/arrangements.hpp"
#include "toricstab/fans.hpp"
#include "toricstab/mapspace.hpp"
#include "toricstab/stability.hpp"

#include <string>
#include <vector>

namespace toric {

// Wire formats. All dumps are canonical: keys are emitted in sorted
// order and aggregate values keep their canonical element order, so
// equal values serialize to identical bytes.
//
//   collection   {"I": [[int, ...], ...], "n": int, "strict": bool}
//   complex      {"faces": [[int, ...], ...], "n": int}
//   fan          {"cones": [[int, ...], ...], "n": int}
//   tuple        {"components": [...], "d": int, "form": "roots"|"coeffs",
//                 "n": int}
//                roots component:  [["p/q+r/s*i", mult], ...]
//                coeffs component: ["p/q+r/s*i", ...] ascending
//   band report  {"agree": bool, "cells": [{"k", "s", "state"}, ...],
//                 "closed_form": int, "min_contaminated_s_minus_k": int}

SubsetCollection parse_collection(const std::string& text);
MapTuple parse_tuple(const std::string& text);

std::string dump_collection(const SubsetCollection& I, bool pretty = false);
std::string dump_complex(const SimplicialComplex& K, bool pretty = false);
std::string dump_fan(const Fan& F, bool pretty = false);
/// {"n": int, key: [[int, ...], ...]}; used for primitive sets and rays.
std::string dump_index_sets(const std::string& key, int n,
                            const std::vector<IndexSet>& sets, bool pretty = false);
std::string dump_tuple(const MapTuple& F, bool pretty = false);
/// Cells carry states "zero" | "known" | "unknown"; by default only
/// unknown cells are listed, full_grid emits the whole window.
std::string dump_band_report(const BandScanReport& report, bool pretty = false,
                             bool full_grid = false);

}  // namespace toric

#endif
