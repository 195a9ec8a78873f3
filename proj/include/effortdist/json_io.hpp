#pragma once

#include <string>

#include "effortdist/instance.hpp"

namespace effortdist {

// Instance file: UTF-8 JSON object {"n": int, "m": int, "R": [[int,...],...]}
// with every row of length m+1 and R[j][0] = 0.

Instance parse_instance_json(const std::string& text);  // throws ParseError / ValidationError
Instance load_instance(const std::string& path);        // throws IoError as well

std::string instance_to_json(const Instance& inst);
void save_instance(const Instance& inst, const std::string& path);

}  // namespace effortdist
