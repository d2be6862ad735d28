#include "poissonkit/errors.hpp"

namespace poissonkit {

namespace {
std::string one_based(std::size_t i) { return std::to_string(i + 1); }
}  // namespace

JacobiViolation::JacobiViolation(std::size_t i_, std::size_t j_, std::size_t k_, std::size_t l_,
                                 std::string residual_)
    : PreconditionError("Jacobi identity fails for (e" + one_based(i_) + ", e" + one_based(j_) +
                        ", e" + one_based(k_) + "): component " + one_based(l_) +
                        " of the Jacobiator is " + residual_),
      i(i_), j(j_), k(k_), l(l_), residual(std::move(residual_)) {}

NotPoisson::NotPoisson(std::string witness)
    : PreconditionError("bivector is not Poisson: [pi,pi] has nonzero term " + witness),
      witness_term(std::move(witness)) {}

NotAFixedPoint::NotAFixedPoint(std::string witness)
    : PreconditionError("point is not a fixed point: pi(x0) has nonzero component " + witness),
      witness_component(std::move(witness)) {}

NonHomogeneous::NonHomogeneous()
    : PreconditionError("bivector coefficients are not homogeneous of a single degree") {}

NotACocycle::NotACocycle() : PreconditionError("cochain is not a cocycle (its differential is nonzero)") {}

NotLinear::NotLinear() : PreconditionError("pencil base structure is not linear") {}

IncompatiblePencil::IncompatiblePencil(const std::string& why)
    : PreconditionError("not a Poisson pencil: " + why) {}

}  // namespace poissonkit
