#pragma once

#include <stdexcept>
#include <string>

namespace deg3span {

// Everything that should surface as "bad input" (CLI exit code 1).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

struct not_convex_error : input_error {
    explicit not_convex_error(const std::string& what) : input_error(what) {}
};

struct not_separated_error : input_error {
    explicit not_separated_error(const std::string& what) : input_error(what) {}
};

struct grid_too_small_error : input_error {
    explicit grid_too_small_error(const std::string& what) : input_error(what) {}
};

struct not_plane_error : input_error {
    explicit not_plane_error(const std::string& what) : input_error(what) {}
};

struct radius_collision_error : input_error {
    explicit radius_collision_error(const std::string& what) : input_error(what) {}
};

struct degree_bound_error : input_error {
    explicit degree_bound_error(const std::string& what) : input_error(what) {}
};

struct spec_error : input_error {
    explicit spec_error(const std::string& what) : input_error(what) {}
};

struct domain_error : input_error {
    explicit domain_error(const std::string& what) : input_error(what) {}
};

} // namespace deg3span
