#ifndef HYPSTAB_IO_HPP
#define HYPSTAB_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "hypstab/front_tracking.hpp"
#include "hypstab/measures.hpp"

namespace hypstab {

using Json = nlohmann::json;

/// Round-trip formatting: 17 significant digits, '.' decimal.
std::string format_double(double x);

Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json to_json(const PiecewiseConstantFn& u);
PiecewiseConstantFn pcw_from_json(const Json& j);

Json to_json(const BVFunction& u);
BVFunction bv_from_json(const Json& j);

Json to_json(const Fan& fan);
Json event_log_json(const FTTrajectory& traj);

/// CSV with a header row; every cell formatted by format_double.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// Snapshot CSV: x breakpoints with the state on [x_a, x_{a+1}).
void write_snapshot_csv(const std::string& path, const PiecewiseConstantFn& u);

}  // namespace hypstab

#endif
