#pragma once

#include <string>
#include <vector>

namespace exptest {

// Operating hours between successive failures of the air conditioning
// equipment of a Boeing 720 jet airplane (plane 7913).
const std::vector<double>& proschan_plane_data();

// Mileage (in thousands) at failure for locomotive controls on test.
const std::vector<double>& locomotive_control_data();

// Lookup by name ("proschan", "locomotive"); throws input_error otherwise.
const std::vector<double>& builtin_dataset(const std::string& name);
std::vector<std::string> builtin_dataset_names();

} // namespace exptest
