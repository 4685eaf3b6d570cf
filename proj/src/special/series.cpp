#include "biorder/errors.hpp"
#include "biorder/series.hpp"

#include <cmath>
#include <string>

namespace biorder {

void SeriesTruncation::validate() const
{
    if (max_terms < 1) {
        throw DomainError("SeriesTruncation: max_terms must be >= 1, got " +
                          std::to_string(max_terms));
    }
    if (!(abs_floor >= 0.0) || !std::isfinite(abs_floor)) {
        throw DomainError("SeriesTruncation: abs_floor must be finite and nonnegative");
    }
}

}  // namespace biorder
