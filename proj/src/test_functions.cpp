#include "convpde/test_functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace convpde {

TestFunction tf_cosine(double a) {
    return {[a](double x) { return std::cos(a * x); }, "cos(" + format_double(a) + "x)", 1.0};
}

TestFunction tf_sine(double a) {
    return {[a](double x) { return std::sin(a * x); }, "sin(" + format_double(a) + "x)", 1.0};
}

TestFunction tf_gaussian_bump(double center, double width) {
    if (!(width > 0.0)) throw std::invalid_argument("gaussian bump width must be > 0");
    return {[center, width](double x) {
                double u = (x - center) / width;
                return std::exp(-u * u);
            },
            "gaussian-bump", 1.0};
}

TestFunction tf_abs_sin() {
    return {[](double x) { return std::abs(std::sin(x)); }, "abs-sin", 1.0};
}

TestFunction tf_hat() {
    return {[](double x) { return std::max(0.0, 1.0 - std::abs(x)); }, "hat", 1.0};
}

TestFunction tf_constant(double c) {
    return {[c](double) { return c; }, "constant(" + format_double(c) + ")", std::abs(c)};
}

TestFunction tf_from_samples(const GridFunction& samples) {
    samples.validate();
    double sup = 0.0;
    for (double v : samples.values) sup = std::max(sup, std::abs(v));
    GridFunction s = samples;
    return {[s](double x) {
                double pos = (x - s.x_min) / s.dx;
                if (pos <= 0.0) return s.values.front();
                if (pos >= double(s.values.size() - 1)) return s.values.back();
                size_t i = static_cast<size_t>(pos);
                double frac = pos - double(i);
                return s.values[i] * (1.0 - frac) + s.values[i + 1] * frac;
            },
            "csv-samples", sup};
}

TestFunction make_test_function(const std::string& descriptor, double a) {
    if (descriptor == "cos") return tf_cosine(a);
    if (descriptor == "sin") return tf_sine(a);
    if (descriptor == "bump" || descriptor == "gaussian-bump") return tf_gaussian_bump();
    if (descriptor == "abs-sin") return tf_abs_sin();
    if (descriptor == "hat") return tf_hat();
    if (descriptor == "constant") return tf_constant(a);
    throw std::invalid_argument("unknown test function descriptor: " + descriptor);
}

} // namespace convpde
