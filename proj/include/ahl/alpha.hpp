#ifndef AHL_ALPHA_HPP
#define AHL_ALPHA_HPP

#include <cmath>
#include <stdexcept>

namespace ahl {

// Weight exponent of the standard weight (1-|z|^2)^alpha.  The operator
// and the Poisson-type integral are only defined for alpha > -1.
class AlphaParam {
public:
    explicit AlphaParam(double alpha) : alpha_(alpha) {
        if (!(alpha > -1.0) || !std::isfinite(alpha))
            throw std::domain_error("AlphaParam: alpha must satisfy alpha > -1");
    }

    double value() const { return alpha_; }

private:
    double alpha_;
};

} // namespace ahl

#endif
