#pragma once

#include <stdexcept>
#include <string>

namespace ringline {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error { using error::error; };
struct foreign_element : error { using error::error; };
struct not_a_unit : error { using error::error; };
struct not_invertible : error { using error::error; };
struct not_admissible : error { using error::error; };
struct outside_domain : error { using error::error; };

}  // namespace ringline
