#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "dipair/precubical.hpp"

namespace dipair::io {

/// {"dims": D, "cells": [counts], "faces": {"d:i": {"minus": [...], "plus": [...]}}, "names": {...}}.
/// Face ids are "dim:index" strings listed by axis. Throws ParseError.
PreCubicalSet parse_precubical(const nlohmann::json& j);
nlohmann::json to_json(const PreCubicalSet& pcs);

/// {"n": N, "top_cells": [{"base": [...], "extent": [...]}]}. Throws ParseError.
EuclideanComplex parse_euclidean(const nlohmann::json& j);
nlohmann::json to_json(const EuclideanComplex& e);
bool looks_euclidean(const nlohmann::json& j);

/// A cell name or "dim:index".
CellId parse_cell(const PreCubicalSet& pcs, std::string_view text);

/// "CELL@a/b,c/d" (a vertex may omit "@..."). Coordinates on the closed
/// interval are accepted; 0 and 1 move the point onto a boundary cell.
GridPoint parse_point(const PreCubicalSet& pcs, std::string_view text);
std::string format_point(const PreCubicalSet& pcs, const GridPoint& p);

/// Reads a complex from "builtin:NAME" or a JSON file of either schema.
/// Euclidean files are realized with from_euclidean.
PreCubicalSet load(const std::string& source);

/// Reads a Euclidean complex from a JSON file or "builtin:" square names
/// ("builtin:square", "builtin:square_hole", "builtin:lshape").
EuclideanComplex load_euclidean(const std::string& source);

}  // namespace dipair::io
