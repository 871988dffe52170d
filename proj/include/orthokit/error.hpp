#pragma once

#include <stdexcept>
#include <string>

namespace ortho {

enum class errc {
    coincident_lines,
    infinite_point,
    singular_pair,
    singular_family,
    equal_parameters,
    infinite_parameter,
    zero_coordinates,
    equal_classes,
    not_a_basis,
    not_orthologic,
    degenerate_target,
    degenerate_input,
    no_such_point,
    undefined_center,
    non_concurrent,
    degenerate_at_infinity,
    degenerate_configuration,
    not_unique,
    not_hyperbola,
    not_parabola,
    degenerate_dual,
    wrong_dimension,
    not_on_circumcircle,
    irrational_lengths,
    incompatible_extension,
    unknown_suite,
};

/// Precondition violations and impossible requests.  Expected branchy
/// outcomes (root multiplicities, degenerate classifications, concurrence
/// flags) are ordinary return values, not exceptions.
class geom_error : public std::runtime_error {
public:
    geom_error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw geom_error(code, what);
}

}  // namespace ortho
