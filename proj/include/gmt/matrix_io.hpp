#pragma once

#include <json.hpp>

#include "gmt/algebra.hpp"

namespace gmt {

/// Matrix literal format shared by the CLI and the tests:
/// [[re,im],[re,im],[re,im],[re,im]] in row-major order a, b, c, d.
inline nlohmann::json matrix_to_json(const ProjectiveMatrix& m) {
    const Mat2& r = m.rep();
    return nlohmann::json::array({{r.a.real(), r.a.imag()},
                                  {r.b.real(), r.b.imag()},
                                  {r.c.real(), r.c.imag()},
                                  {r.d.real(), r.d.imag()}});
}

inline Mat2 mat2_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("matrix literal: expected 4 [re,im] entries");
    Complex e[4];
    for (int i = 0; i < 4; ++i) {
        const auto& item = j.at(i);
        if (!item.is_array() || item.size() != 2)
            throw std::invalid_argument("matrix literal: entry must be [re,im]");
        e[i] = Complex{item.at(0).get<double>(), item.at(1).get<double>()};
    }
    return {e[0], e[1], e[2], e[3]};
}

inline ProjectiveMatrix matrix_from_json(const nlohmann::json& j, const Tolerance& tol = {}) {
    return normalize_det(mat2_from_json(j), tol);
}

}  // namespace gmt
