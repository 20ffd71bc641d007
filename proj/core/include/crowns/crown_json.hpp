#pragma once

#include <string>

#include "crowns/crown.hpp"

namespace crowns {

/// Parses a crown document:
///   {"n": int, "rings": [{"radius": float, "mass": float,
///                         "phase": "nested" | "twisted" | float}, ...]}
/// The phase strings map to the exact lattice offsets 0 and pi/n.
/// Throws ParseError with position context on malformed input.
CrownConfiguration crown_from_json(const std::string& text);

/// Reads and parses a crown document from a file.
CrownConfiguration crown_from_file(const std::string& path);

/// Serializes a crown back to the document schema.
std::string crown_to_json(const CrownConfiguration& crown);

}  // namespace crowns
