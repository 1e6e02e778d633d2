#ifndef CAVROTOR_IO_HPP
#define CAVROTOR_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "cavrotor/hilbert.hpp"
#include "cavrotor/model.hpp"

namespace cavrotor {

inline constexpr const char* kToolVersion = "cavrotor 0.1.0";

/// In-memory CSV table; nothing touches the filesystem until write() so a
/// failed computation never leaves a partial file behind.
class CsvTable {
  public:
    static std::string num(double v);
    static std::string num(long long v);
    static std::string num(int v) { return num((long long)v); }

    void set_header(std::vector<std::string> cols);
    void add_row(std::vector<std::string> cells);

    std::string body() const;
    void write(const std::string& path) const;
    std::size_t rows() const { return rows_.size(); }

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

nlohmann::json params_to_json(const ModelParams& p);
ModelParams params_from_json(const nlohmann::json& j);

nlohmann::json trunc_to_json(const TruncationSpec& t);
TruncationSpec trunc_from_json(const nlohmann::json& j);

void write_json(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json(const std::string& path);

} // namespace cavrotor

#endif
