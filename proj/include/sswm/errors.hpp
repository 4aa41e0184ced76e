#ifndef SSWM_ERRORS_HPP
#define SSWM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sswm {

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct singular_point_error : domain_error {
    using domain_error::domain_error;
};

struct quadrature_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct integrator_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct root_count_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct log_branch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct out_of_radius_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct divergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct contraction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct argument_jump_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct inconclusive_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sswm

#endif
