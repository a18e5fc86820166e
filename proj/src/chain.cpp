#include "randmaj/chain.hpp"

#include <stdexcept>

namespace randmaj {

ChainSample::ChainSample(Kind kind, std::vector<double> values)
    : kind_(kind), values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (kind_ == Kind::V) {
      if (!(values_[i] > 0.0) || (i > 0 && !(values_[i] > values_[i - 1]))) {
        throw std::invalid_argument("V chain must be positive and strictly increasing");
      }
    } else if (i > 0 && !(values_[i] < values_[i - 1])) {
      throw std::invalid_argument("W chain must be strictly decreasing");
    }
  }
}

}  // namespace randmaj
