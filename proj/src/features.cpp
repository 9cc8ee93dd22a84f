#include "fpetpf/features.hpp"

#include <cstddef>

namespace fpetpf {

FeatureField extract_features_1d(const std::vector<double>& field,
                                 const std::string& provenance) {
    if (field.size() < 2) throw InvalidInput("feature extraction needs at least 2 samples");
    FeatureField out;
    out.nx = static_cast<int>(field.size());
    out.ny = 1;
    out.provenance = provenance;
    out.values.resize(field.size());
    out.values[0] = 0.0;
    for (std::size_t i = 1; i < field.size(); ++i)
        out.values[i] = field[i] - field[i - 1];
    return out;
}

FeatureField extract_features_2d(const std::vector<double>& field, int nx, int ny,
                                 const std::string& provenance) {
    if (nx < 2 || ny < 2) throw InvalidInput("2-D feature extraction needs nx, ny >= 2");
    if (field.size() != static_cast<std::size_t>(nx) * ny)
        throw InvalidInput("field shape mismatch in feature extraction");
    FeatureField out;
    out.nx = nx;
    out.ny = ny;
    out.provenance = provenance;
    out.values.assign(field.size(), 0.0);
    const auto at = [&](int i, int j) { return field[static_cast<std::size_t>(i) * ny + j]; };
    for (int i = 1; i < nx; ++i)
        for (int j = 1; j < ny; ++j)
            out.values[static_cast<std::size_t>(i) * ny + j] =
                at(i, j) - at(i - 1, j) - (at(i, j - 1) - at(i - 1, j - 1));
    return out;
}

FeatureField extract_features_weighted(const std::vector<WeightedField>& terms, int nx,
                                       int ny) {
    if (terms.empty()) throw InvalidInput("weighted feature extraction needs terms");
    bool any_nonzero = false;
    for (const auto& t : terms) {
        if (t.values == nullptr ||
            t.values->size() != static_cast<std::size_t>(nx) * ny)
            throw InvalidInput("field shape mismatch in weighted feature extraction");
        if (t.coefficient != 0.0) any_nonzero = true;
    }
    if (!any_nonzero) throw InvalidInput("all feature coefficients are zero");

    FeatureField out;
    out.nx = nx;
    out.ny = ny;
    out.values.assign(static_cast<std::size_t>(nx) * ny, 0.0);
    std::string tag;
    for (const auto& t : terms) {
        FeatureField part = ny > 1 ? extract_features_2d(*t.values, nx, ny, t.name)
                                   : extract_features_1d(*t.values, t.name);
        for (std::size_t k = 0; k < out.values.size(); ++k)
            out.values[k] += t.coefficient * part.values[k];
        if (!tag.empty()) tag += " + ";
        tag += std::to_string(t.coefficient) + "*" + t.name;
    }
    out.provenance = tag;
    return out;
}

}  // namespace fpetpf
