#include "liouville/eval_config.hpp"

#include "liouville/errors.hpp"

namespace liouville {

void EvalConfig::validate() const {
    if (accel_order <= 0) throw InvalidArgument("accel_order must be positive");
    if (series_terms < accel_order) throw InvalidArgument("series_terms must be >= accel_order");
    if (!(target_rel_err > 0.0 && target_rel_err < 1.0)) {
        throw InvalidArgument("target_rel_err must lie in (0, 1)");
    }
    if (!(zero_threshold > 0.0)) throw InvalidArgument("zero_threshold must be positive");
}

}  // namespace liouville
