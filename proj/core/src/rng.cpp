#include "levytail/detail/rng.hpp"

#include "levytail/special.hpp"

namespace levytail::detail {

double Rng::next_normal() {
    return inverse_normal_cdf(next_uniform());
}

}  // namespace levytail::detail
