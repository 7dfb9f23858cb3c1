#pragma once

#include "rumin/json_io.hpp"
#include "rumin/rumin_complex.hpp"

namespace rumin::test {

inline const RingPtr& cartan_ring() {
    static const RingPtr ring = PbwRing::create(cartan_group());
    return ring;
}

inline const RuminComplex& cartan_complex() {
    static const RuminComplex c(cartan_ring());
    return c;
}

inline EnvElement op(const std::string& s) { return parse_env(cartan_ring(), s); }

inline Covector cov(std::initializer_list<int> one_based) {
    std::vector<int> idx;
    for (int i : one_based) idx.push_back(i - 1);
    return cov_from_indices(idx);
}

inline Form theta(std::initializer_list<int> one_based, const Scalar& c = Scalar(1)) {
    return Form::basis(cov(one_based), c);
}

inline std::string data_path(const std::string& rel) { return std::string(RUMIN_DATA_DIR) + "/" + rel; }

}  // namespace rumin::test
