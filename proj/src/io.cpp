#include "onset/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace onset {

namespace {

nlohmann::json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

}  // namespace

ComplexMatrix read_matrix_json(const std::filesystem::path& path) {
    const nlohmann::json j = load_json(path);
    if (!j.is_object() || !j.contains("dim") || !j.contains("re")) {
        throw IoError(path.string() + ": expected {\"dim\", \"re\"[, \"im\"]}");
    }
    std::size_t dim = 0;
    try {
        dim = j.at("dim").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path.string() + ": bad \"dim\": " + e.what());
    }
    if (dim == 0) {
        throw IoError(path.string() + ": \"dim\" must be positive");
    }
    std::vector<double> re;
    std::vector<double> im;
    try {
        re = j.at("re").get<std::vector<double>>();
        if (j.contains("im")) {
            im = j.at("im").get<std::vector<double>>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path.string() + ": bad entry array: " + e.what());
    }
    im.resize(re.size(), 0.0);
    if (re.size() != dim * dim || im.size() != dim * dim) {
        throw IoError(path.string() + ": entry arrays must hold dim*dim values");
    }
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < re.size(); ++i) {
        m.data()[i] = cplx(re[i], im[i]);
    }
    if (!m.all_finite()) {
        throw IoError(path.string() + ": non-finite matrix entry");
    }
    return m;
}

void write_matrix_json(const std::filesystem::path& path,
                       const ComplexMatrix& m) {
    nlohmann::json j;
    j["dim"] = m.dim();
    std::vector<double> re(m.size());
    std::vector<double> im(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        re[i] = m.data()[i].real();
        im[i] = m.data()[i].imag();
    }
    j["re"] = re;
    j["im"] = im;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
}

std::string csv_value(double v) {
    if (v == 0.0) v = 0.0;  // strip the sign off negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trajectory_csv(const Trajectory& traj) {
    std::ostringstream out;
    out << 't';
    for (const auto& name : traj.names) {
        out << ',' << name;
    }
    out << '\n';
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        out << csv_value(traj.times[i]);
        for (const auto& column : traj.columns) {
            out << ',' << csv_value(column[i]);
        }
        out << '\n';
    }
    return out.str();
}

void write_trajectory_csv(const std::filesystem::path& path,
                          const Trajectory& traj) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << trajectory_csv(traj);
    if (!out) {
        throw IoError("short write to " + path.string());
    }
}

}  // namespace onset
