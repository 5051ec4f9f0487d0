#include "convpde/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace convpde {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string grid_to_csv(const GridFunction& g) {
    std::string out = "x,value\n";
    for (size_t i = 0; i < g.values.size(); ++i) {
        out += format_double(g.x(i));
        out += ',';
        out += format_double(g.values[i]);
        out += '\n';
    }
    return out;
}

void write_grid_csv(const GridFunction& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << grid_to_csv(g);
}

GridFunction read_grid_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(f, line) || line != "x,value")
        throw std::runtime_error(path + ": expected header 'x,value'");
    std::vector<double> xs, vs;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string xf, vf;
        if (!std::getline(row, xf, ',') || !std::getline(row, vf))
            throw std::runtime_error(path + ": malformed row '" + line + "'");
        xs.push_back(std::stod(xf));
        vs.push_back(std::stod(vf));
    }
    if (xs.size() < 2) throw std::runtime_error(path + ": need at least 2 rows");
    const double dx = xs[1] - xs[0];
    if (!(dx > 0.0)) throw std::runtime_error(path + ": x must be strictly increasing");
    for (size_t i = 1; i < xs.size(); ++i) {
        double step = xs[i] - xs[i - 1];
        if (std::abs(step - dx) > 1e-9 * std::max(std::abs(dx), 1.0))
            throw std::runtime_error(path + ": x not equispaced within 1e-9 relative");
    }
    GridFunction g;
    g.x_min = xs[0];
    g.dx = dx;
    g.values = std::move(vs);
    g.validate();
    return g;
}

} // namespace convpde
