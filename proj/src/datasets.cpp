#include "exptest/datasets.hpp"

#include "exptest/errors.hpp"

namespace exptest {

const std::vector<double>& proschan_plane_data() {
    static const std::vector<double> data = {
        90, 10, 60, 186, 61,  49, 14, 24, 56,  20, 79, 84,  44, 59, 29,
        118, 25, 156, 310, 76, 26, 44, 23, 62, 130, 208, 70, 101, 208};
    return data;
}

const std::vector<double>& locomotive_control_data() {
    static const std::vector<double> data = {
        22.5,  37.5,  46.0,  48.5,  51.5,  53.0,  54.5,  57.5,  66.5,  68.0,
        69.5,  76.5,  77.0,  78.5,  80.0,  81.5,  82.0,  83.0,  84.0,  91.5,
        93.5,  102.5, 107.0, 108.5, 112.5, 113.5, 116.0, 117.0, 118.5, 119.0,
        120.0, 122.5, 123.0, 127.5, 131.0, 132.5, 134.0};
    return data;
}

const std::vector<double>& builtin_dataset(const std::string& name) {
    if (name == "proschan") return proschan_plane_data();
    if (name == "locomotive") return locomotive_control_data();
    throw input_error("unknown builtin dataset: " + name +
                      " (available: proschan, locomotive)");
}

std::vector<std::string> builtin_dataset_names() {
    return {"proschan", "locomotive"};
}

} // namespace exptest
