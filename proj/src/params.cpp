#include "paraxial/params.hpp"

#include <cmath>
#include <string>

#include "paraxial/errors.hpp"

namespace paraxial {

Params make_params(double omega, double epsilon, double Z0, int s, int sA) {
  Params p;
  p.omega = omega;
  p.k_z = omega;
  p.epsilon = epsilon;
  p.Z0 = Z0;
  p.s = s;
  p.sA = sA;
  validate(p);
  return p;
}

void validate(const Params& params) {
  if (!(params.omega > 0.0) || !std::isfinite(params.omega))
    throw ConfigError("omega must be positive and finite");
  if (params.k_z != params.omega)
    throw ConfigError("k_z must equal omega exactly");
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0))
    throw ConfigError("epsilon must lie in (0,1), got " +
                      std::to_string(params.epsilon));
  if (!(params.Z0 > 0.0) || !std::isfinite(params.Z0))
    throw ConfigError("Z0 must be positive and finite");
  if (params.s < 0) throw ConfigError("s must be >= 0");
  if (params.sA < 4 || params.sA < params.s)
    throw ConfigError("sA must be >= max(4,s)");
}

}  // namespace paraxial
