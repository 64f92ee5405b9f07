#ifndef HYPSTAB_GENERATORS_HPP
#define HYPSTAB_GENERATORS_HPP

#include <random>

#include "hypstab/measures.hpp"
#include "hypstab/pcw.hpp"

namespace hypstab {

using Rng = std::mt19937_64;

/// Random state within the given fraction of the model domain.
Vec random_state(const FluxModel& model, Rng& rng, double radius_fraction = 0.5);

/// Random strength vector with entries uniform in [-amplitude, amplitude].
Vec random_strengths(const FluxModel& model, Rng& rng, double amplitude);

/// Random step function built as a Lax-curve random walk from the model
/// origin: `jumps` interior jumps on [0, 1], each of per-family amplitude at
/// most `amplitude`, closing back to the background. Steps that would leave
/// the domain are reflected.
PiecewiseConstantFn random_step_function(const FluxModel& model, Rng& rng, int jumps,
                                         double amplitude);

/// Random piecewise-affine function: `pieces` affine pieces on [0, 1] with
/// jumps between them, staying within the model domain.
BVFunction random_bv_function(const FluxModel& model, Rng& rng, int pieces, double amplitude);

}  // namespace hypstab

#endif
