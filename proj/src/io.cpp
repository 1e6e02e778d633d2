#include "cavrotor/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cavrotor {

using nlohmann::json;

std::string CsvTable::num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15e", v);
    return buf;
}

std::string CsvTable::num(long long v) { return std::to_string(v); }

void CsvTable::set_header(std::vector<std::string> cols) { header_ = std::move(cols); }

void CsvTable::add_row(std::vector<std::string> cells) {
    if (!header_.empty() && cells.size() != header_.size())
        throw DomainError("csv", "row width does not match the header");
    rows_.push_back(std::move(cells));
}

std::string CsvTable::body() const {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ',';
            os << cells[i];
        }
        os << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
    return os.str();
}

void CsvTable::write(const std::string& path) const {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw DomainError("path", "cannot open output file " + path);
    f << body();
    if (!f.good()) throw DomainError("path", "write failed for " + path);
}

json params_to_json(const ModelParams& p) {
    json j;
    j["delta"] = p.delta;
    j["g"] = p.g;
    j["b_field"] = p.b_field;
    if (p.frozen_rotors())
        j["inertia"] = "inf";
    else
        j["inertia"] = p.inertia;
    j["n_dimers"] = p.n_dimers;
    j["scaling"] =
        p.scaling == CouplingScaling::constant_volume ? "constant_volume" : "constant_density";
    return j;
}

ModelParams params_from_json(const json& j) {
    ModelParams p;
    if (j.contains("delta")) p.delta = j.at("delta").get<double>();
    if (j.contains("g")) p.g = j.at("g").get<double>();
    if (j.contains("b_field")) p.b_field = j.at("b_field").get<double>();
    if (j.contains("inertia")) {
        const auto& v = j.at("inertia");
        if (v.is_string()) {
            const std::string s = v.get<std::string>();
            if (s != "inf" && s != "infinity")
                throw DomainError("inertia", "expected a number or \"inf\"");
            p.inertia = std::numeric_limits<double>::infinity();
        } else {
            p.inertia = v.get<double>();
        }
    }
    if (j.contains("n_dimers")) p.n_dimers = j.at("n_dimers").get<int>();
    if (j.contains("scaling")) {
        const std::string s = j.at("scaling").get<std::string>();
        if (s == "constant_volume")
            p.scaling = CouplingScaling::constant_volume;
        else if (s == "constant_density")
            p.scaling = CouplingScaling::constant_density;
        else
            throw DomainError("scaling", "unknown coupling scaling " + s);
    }
    validate(p);
    return p;
}

json trunc_to_json(const TruncationSpec& t) {
    json j;
    j["n_max"] = t.n_max;
    j["k_max"] = t.k_max;
    if (t.sector) j["sector"] = *t.sector;
    j["k_scan"] = t.k_scan;
    return j;
}

TruncationSpec trunc_from_json(const json& j) {
    TruncationSpec t;
    if (j.contains("n_max")) t.n_max = j.at("n_max").get<int>();
    if (j.contains("k_max")) t.k_max = j.at("k_max").get<int>();
    if (j.contains("sector")) t.sector = j.at("sector").get<int>();
    if (j.contains("k_scan")) t.k_scan = j.at("k_scan").get<int>();
    if (t.n_max < 0 || t.k_max < 0 || t.k_scan < 0)
        throw DomainError("trunc", "cutoffs must be nonnegative");
    return t;
}

void write_json(const std::string& path, const json& j) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw DomainError("path", "cannot open output file " + path);
    f << j.dump(2) << '\n';
}

json read_json(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DomainError("path", "cannot open config file " + path);
    return json::parse(f);
}

} // namespace cavrotor
