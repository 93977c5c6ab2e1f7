#ifndef BANDQ_IO_HPP
#define BANDQ_IO_HPP

#include <string>

#include "json.hpp"

#include "bandq/cw.hpp"
#include "bandq/multable.hpp"
#include "bandq/presentation.hpp"

namespace bandq {

using json = nlohmann::json;

MulTable table_from_json(const json& j);
json table_to_json(const MulTable& t);

/// Constructor mini-language:
///   b5 | left_zero:N | right_zero:N | rect:MxN | chain:N | signs:N |
///   free_lrb1:K | prod(SPEC,SPEC) | adjoin1(SPEC) | @file.json
/// A bare path ending in .json is read as a table file.
MulTable build_from_spec(const std::string& spec);

struct PipelineOptions {
  bool force_generic_idempotents = false;
  std::optional<int> truncation_override;
};

json analyze_report(const MulTable& t);
json present_report(const MulTable& t, const PipelineOptions& opt = {});
json verify_report(const MulTable& t, const PipelineOptions& opt = {});
json cw_report_json(const MulTable& t, const PipelineOptions& opt = {});
std::string quiver_dot_spec(const MulTable& t);

json lattice_to_json(const MulTable& t, const SupportLattice& lat);
json quiver_to_json(const MulTable& t, const Quiver& q);

/// true when every check in a verify report passed (skips don't count
/// as failures).
bool verify_all_passed(const json& report);

}  // namespace bandq

#endif
